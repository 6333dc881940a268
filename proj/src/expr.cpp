#include "sl2lab/expr.hpp"

#include <algorithm>
#include <map>

namespace sl2lab {

char gen_char(Gen g) {
    switch (g) {
        case Gen::X: return 'x';
        case Gen::Y: return 'y';
        case Gen::H: return 'h';
        case Gen::B: return 'B';
        case Gen::C: return 'C';
    }
    return '?';
}

std::optional<Gen> gen_from_char(char c) {
    switch (c) {
        case 'x': return Gen::X;
        case 'y': return Gen::Y;
        case 'h': return Gen::H;
        case 'A': return Gen::H;  // A = h
        case 'B': return Gen::B;
        case 'C': return Gen::C;
        default: return std::nullopt;
    }
}

ExprSum ExprSum::scalar(GaussianRational c) {
    ExprSum e;
    if (!c.is_zero()) e.terms.push_back({std::move(c), {}});
    return e;
}

ExprSum ExprSum::generator(Gen g) { return word({g}); }

ExprSum ExprSum::word(std::vector<Gen> w, GaussianRational c) {
    ExprSum e;
    if (!c.is_zero()) e.terms.push_back({std::move(c), std::move(w)});
    return e;
}

ExprSum& ExprSum::operator+=(const ExprSum& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

ExprSum operator-(ExprSum a, const ExprSum& b) {
    for (const auto& t : b.terms) a.terms.push_back({-t.coeff, t.word});
    return a;
}

ExprSum operator*(const ExprSum& a, const ExprSum& b) {
    ExprSum r;
    for (const auto& s : a.terms) {
        for (const auto& t : b.terms) {
            std::vector<Gen> w = s.word;
            w.insert(w.end(), t.word.begin(), t.word.end());
            r.terms.push_back({s.coeff * t.coeff, std::move(w)});
        }
    }
    return r;
}

ExprSum operator*(const GaussianRational& s, const ExprSum& e) {
    ExprSum r;
    if (s.is_zero()) return r;
    for (const auto& t : e.terms) r.terms.push_back({s * t.coeff, t.word});
    return r;
}

ExprSum ExprSum::collected() const {
    std::map<std::vector<Gen>, GaussianRational> acc;
    for (const auto& t : terms) acc[t.word] += t.coeff;
    ExprSum r;
    for (auto& [w, c] : acc) {
        if (!c.is_zero()) r.terms.push_back({c, w});
    }
    return r;
}

}  // namespace sl2lab
