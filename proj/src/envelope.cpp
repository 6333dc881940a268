#include "sl2lab/envelope.hpp"

#include <sstream>
#include <tuple>

#include "sl2lab/errors.hpp"

namespace sl2lab {

GradeLabel GradeLabel::operator+(const GradeLabel& o) const {
    if (kind != o.kind) throw ParameterMismatchError("grade labels of different kinds");
    switch (kind) {
        case Kind::Z: return z(k + o.k);
        case Kind::Z2sq: return z2sq(a + o.a, b + o.b);
        case Kind::Z2: return z2(c + o.c);
    }
    throw InternalInconsistencyError("unreachable grade kind");
}

std::string GradeLabel::str() const {
    switch (kind) {
        case Kind::Z: return std::to_string(k);
        case Kind::Z2sq: return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::Z2: return std::to_string(c);
    }
    return "?";
}

GradeLabel grade_coarsen_z2(const GradeLabel& label) {
    if (label.kind != GradeLabel::Kind::Z2sq)
        throw DomainError("grade_coarsen_z2 expects a Z2^2 label");
    return GradeLabel::z2(label.b);
}

// ---------------------------------------------------------------------------
// CartanNF

CartanNF CartanNF::scalar(const GaussianRational& lambda, const GaussianRational& c) {
    CartanNF u(lambda);
    u.h_part_ = Poly(c);
    return u;
}

void CartanNF::add_term_h(const Poly& p) { h_part_ += p; }

void CartanNF::add_term_x(int l, const Poly& p) {
    if (l == 0) {
        h_part_ += p;
        return;
    }
    Poly& slot = x_part_[l];
    slot += p;
    if (slot.is_zero()) x_part_.erase(l);
}

void CartanNF::add_term_y(int l, const Poly& p) {
    if (l == 0) {
        h_part_ += p;
        return;
    }
    Poly& slot = y_part_[l];
    slot += p;
    if (slot.is_zero()) y_part_.erase(l);
}

CartanNF CartanNF::operator-() const {
    CartanNF r(lambda_);
    r.h_part_ = -h_part_;
    for (const auto& [l, p] : x_part_) r.x_part_.emplace(l, -p);
    for (const auto& [l, p] : y_part_) r.y_part_.emplace(l, -p);
    return r;
}

CartanNF& CartanNF::operator+=(const CartanNF& o) {
    if (lambda_ != o.lambda_) throw ParameterMismatchError("CartanNF sum: lambda mismatch");
    h_part_ += o.h_part_;
    for (const auto& [l, p] : o.x_part_) add_term_x(l, p);
    for (const auto& [l, p] : o.y_part_) add_term_y(l, p);
    return *this;
}

CartanNF& CartanNF::operator-=(const CartanNF& o) { return *this += -o; }

CartanNF operator*(const GaussianRational& s, const CartanNF& u) {
    CartanNF r(u.lambda());
    if (s.is_zero()) return r;
    r.h_part_ = s * u.h_part_;
    for (const auto& [l, p] : u.x_part_) r.x_part_.emplace(l, s * p);
    for (const auto& [l, p] : u.y_part_) r.y_part_.emplace(l, s * p);
    return r;
}

ExprSum CartanNF::to_expr() const {
    ExprSum e;
    auto emit = [&e](const Poly& p, Gen g, int l) {
        for (int k = 0; k <= (p.is_zero() ? -1 : *p.degree()); ++k) {
            const GaussianRational& c = p.coeff(k);
            if (c.is_zero()) continue;
            std::vector<Gen> w(static_cast<size_t>(k), Gen::H);
            w.insert(w.end(), static_cast<size_t>(l), g);
            e += ExprSum::word(std::move(w), c);
        }
    };
    emit(h_part_, Gen::H, 0);
    for (const auto& [l, p] : x_part_) emit(p, Gen::X, l);
    for (const auto& [l, p] : y_part_) emit(p, Gen::Y, l);
    return e;
}

std::string CartanNF::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Poly& p, char g, int l) {
        if (p.is_zero()) return;
        if (!first) out << " + ";
        first = false;
        out << "(" << p.str() << ")";
        if (l >= 1) {
            out << "*" << g;
            if (l > 1) out << "^" << l;
        }
    };
    emit(h_part_, ' ', 0);
    for (const auto& [l, p] : x_part_) emit(p, 'x', l);
    for (const auto& [l, p] : y_part_) emit(p, 'y', l);
    return out.str();
}

// ---------------------------------------------------------------------------
// PauliNF

PauliNF PauliNF::scalar(const GaussianRational& lambda, const GaussianRational& c) {
    PauliNF u(lambda);
    u.add_term(0, 0, Poly(c));
    return u;
}

const Poly& PauliNF::entry(int l, int m) const {
    static const Poly zero;
    auto it = entries_.find({l, m});
    return it == entries_.end() ? zero : it->second;
}

std::optional<GaussianRational> PauliNF::as_scalar() const {
    if (entries_.empty()) return GaussianRational();
    if (entries_.size() != 1) return std::nullopt;
    const auto& [key, p] = *entries_.begin();
    if (key != Key{0, 0} || *p.degree() != 0) return std::nullopt;
    return p.coeff(0);
}

void PauliNF::add_term(int l, int m, const Poly& p) {
    if (l < 0 || m < 0 || m > 1) throw DomainError("PauliNF exponents out of range");
    if (p.is_zero()) return;
    Poly& slot = entries_[{l, m}];
    slot += p;
    if (slot.is_zero()) entries_.erase({l, m});
}

PauliNF PauliNF::operator-() const {
    PauliNF r(lambda_);
    for (const auto& [k, p] : entries_) r.entries_.emplace(k, -p);
    return r;
}

PauliNF& PauliNF::operator+=(const PauliNF& o) {
    if (lambda_ != o.lambda_) throw ParameterMismatchError("PauliNF sum: lambda mismatch");
    for (const auto& [k, p] : o.entries_) add_term(k.first, k.second, p);
    return *this;
}

PauliNF& PauliNF::operator-=(const PauliNF& o) { return *this += -o; }

PauliNF operator*(const GaussianRational& s, const PauliNF& u) {
    PauliNF r(u.lambda());
    if (s.is_zero()) return r;
    for (const auto& [k, p] : u.entries_) r.entries_.emplace(k, s * p);
    return r;
}

ExprSum PauliNF::to_expr() const {
    ExprSum e;
    for (const auto& [key, p] : entries_) {
        auto [l, m] = key;
        for (int k = 0; k <= *p.degree(); ++k) {
            const GaussianRational& c = p.coeff(k);
            if (c.is_zero()) continue;
            std::vector<Gen> w(static_cast<size_t>(k), Gen::H);
            w.insert(w.end(), static_cast<size_t>(l), Gen::B);
            if (m == 1) w.push_back(Gen::C);
            e += ExprSum::word(std::move(w), c);
        }
    }
    return e;
}

std::string PauliNF::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, p] : entries_) {
        auto [l, m] = key;
        if (!first) out << " + ";
        first = false;
        out << "(" << p.str() << ")";
        if (l >= 1) {
            out << "*B";
            if (l > 1) out << "^" << l;
        }
        if (m == 1) out << "*C";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Cartan multiplication via the closed product relations

namespace {

// p(t) = ((lambda^2+2lambda) - 2t - t^2) / 4 as a polynomial in h.
Poly p_poly(const GaussianRational& lambda) {
    GaussianRational quarter{Rational(1, 4)};
    GaussianRational mu = mu_value(lambda);
    return Poly(std::vector<GaussianRational>{quarter * mu, GaussianRational(Rational(-1, 2)),
                                              -quarter});
}

// Product over s in [lo, hi] of p(h - 2s) (empty product = 1).
Poly p_product_minus(const Poly& p, int lo, int hi) {
    Poly acc{GaussianRational(1)};
    for (int s = lo; s <= hi; ++s) acc = acc * poly_shift(p, GaussianRational(-2L * s));
    return acc;
}

// Product over s in [lo, hi] of p(h + 2s).
Poly p_product_plus(const Poly& p, int lo, int hi) {
    Poly acc{GaussianRational(1)};
    for (int s = lo; s <= hi; ++s) acc = acc * poly_shift(p, GaussianRational(2L * s));
    return acc;
}

enum TermKind { TermH, TermX, TermY };

struct CTerm {
    TermKind kind;
    int l;
    const Poly* poly;
};

std::vector<CTerm> cartan_terms(const CartanNF& u) {
    std::vector<CTerm> ts;
    if (!u.h_part().is_zero()) ts.push_back({TermH, 0, &u.h_part()});
    for (const auto& [l, p] : u.x_part()) ts.push_back({TermX, l, &p});
    for (const auto& [l, p] : u.y_part()) ts.push_back({TermY, l, &p});
    return ts;
}

}  // namespace

CartanNF nf_multiply(const CartanNF& u, const CartanNF& v) {
    if (u.lambda() != v.lambda()) throw ParameterMismatchError("nf_multiply: lambda mismatch");
    const Poly p = p_poly(u.lambda());
    CartanNF r(u.lambda());

    for (const CTerm& s : cartan_terms(u)) {
        for (const CTerm& t : cartan_terms(v)) {
            const Poly& f = *s.poly;
            const Poly& g = *t.poly;
            if (s.kind == TermH) {
                // f(h) commutes into the left coefficient.
                if (t.kind == TermH) r.add_term_h(f * g);
                else if (t.kind == TermX) r.add_term_x(t.l, f * g);
                else r.add_term_y(t.l, f * g);
                continue;
            }
            if (s.kind == TermX) {
                int k = s.l;
                Poly base = f * poly_shift(g, GaussianRational(-2L * k));
                if (t.kind == TermH) {
                    r.add_term_x(k, base);
                } else if (t.kind == TermX) {
                    r.add_term_x(k + t.l, base);
                } else {
                    int j = t.l;
                    if (k >= j) {
                        // x^k y^j = p(h-2k) ... p(h-2(k-j+1)) x^(k-j)
                        r.add_term_x(k - j, base * p_product_minus(p, k - j + 1, k));
                    } else {
                        // x^k y^j = p(h-2k) ... p(h-2) y^(j-k)
                        r.add_term_y(j - k, base * p_product_minus(p, 1, k));
                    }
                }
                continue;
            }
            // s.kind == TermY
            int j = s.l;
            Poly base = f * poly_shift(g, GaussianRational(2L * j));
            if (t.kind == TermH) {
                r.add_term_y(j, base);
            } else if (t.kind == TermY) {
                r.add_term_y(j + t.l, base);
            } else {
                int k = t.l;
                if (k >= j) {
                    // y^j x^k = p(h+2(j-1)) ... p(h) x^(k-j)
                    r.add_term_x(k - j, base * p_product_plus(p, 0, j - 1));
                } else {
                    // y^j x^k = p(h+2(j-1)) ... p(h+2(j-k)) y^(j-k)
                    r.add_term_y(j - k, base * p_product_plus(p, j - k, j - 1));
                }
            }
        }
    }
    return r;
}

CartanNF normalize_cartan(const ExprSum& e, const GaussianRational& lambda) {
    CartanNF x_nf(lambda);
    x_nf.add_term_x(1, Poly(1L));
    CartanNF y_nf(lambda);
    y_nf.add_term_y(1, Poly(1L));
    CartanNF h_nf(lambda);
    h_nf.add_term_h(Poly::h());
    CartanNF b_nf = x_nf + y_nf;
    CartanNF c_nf = x_nf - y_nf;

    CartanNF result(lambda);
    for (const auto& term : e.terms) {
        CartanNF acc = CartanNF::scalar(lambda, term.coeff);
        for (Gen g : term.word) {
            switch (g) {
                case Gen::X: acc = nf_multiply(acc, x_nf); break;
                case Gen::Y: acc = nf_multiply(acc, y_nf); break;
                case Gen::H: acc = nf_multiply(acc, h_nf); break;
                case Gen::B: acc = nf_multiply(acc, b_nf); break;
                case Gen::C: acc = nf_multiply(acc, c_nf); break;
            }
        }
        result += acc;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Pauli word rewriting

namespace {

enum PLetter : uint8_t { PH = 0, PB = 1, PC = 2 };

using PWord = std::vector<PLetter>;

struct WorkItem {
    GaussianRational coeff;
    PWord word;
};

// Leftmost reducible adjacent pair, or -1 if the word is normal.
int leftmost_redex(const PWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        PLetter a = w[i], b = w[i + 1];
        if ((a == PB && b == PH) || (a == PC && (b == PH || b == PB || b == PC)))
            return static_cast<int>(i);
    }
    return -1;
}

PWord splice(const PWord& w, size_t i, std::initializer_list<PLetter> repl) {
    PWord out;
    out.reserve(w.size() + repl.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(i));
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    return out;
}

// Rewrite one word to normal form and accumulate h^k B^l C^m contributions.
void reduce_word(const GaussianRational& mu, GaussianRational coeff, PWord word, PauliNF& out) {
    std::vector<WorkItem> stack;
    stack.push_back({std::move(coeff), std::move(word)});
    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        int pos = leftmost_redex(item.word);
        if (pos < 0) {
            size_t k = 0, l = 0, m = 0;
            for (PLetter c : item.word) {
                if (c == PH) ++k;
                else if (c == PB) ++l;
                else ++m;
            }
            out.add_term(static_cast<int>(l), static_cast<int>(m),
                         Poly::monomial(static_cast<int>(k), item.coeff));
            continue;
        }
        size_t i = static_cast<size_t>(pos);
        PLetter a = item.word[i], b = item.word[i + 1];
        if (a == PB && b == PH) {
            // Bh = hB - 2C
            stack.push_back({item.coeff, splice(item.word, i, {PH, PB})});
            stack.push_back({GaussianRational(-2) * item.coeff, splice(item.word, i, {PC})});
        } else if (a == PC && b == PH) {
            // Ch = hC - 2B
            stack.push_back({item.coeff, splice(item.word, i, {PH, PC})});
            stack.push_back({GaussianRational(-2) * item.coeff, splice(item.word, i, {PB})});
        } else if (a == PC && b == PB) {
            // CB = BC + 2h
            stack.push_back({item.coeff, splice(item.word, i, {PB, PC})});
            stack.push_back({GaussianRational(2) * item.coeff, splice(item.word, i, {PH})});
        } else {
            // CC = h^2 + B^2 - mu
            stack.push_back({item.coeff, splice(item.word, i, {PH, PH})});
            stack.push_back({item.coeff, splice(item.word, i, {PB, PB})});
            stack.push_back({-mu * item.coeff, splice(item.word, i, {})});
        }
    }
}

// Expand x -> (B+C)/2, y -> (B-C)/2 into plain {h,B,C} words.
std::vector<WorkItem> expand_xy(const ExprTerm& term) {
    std::vector<WorkItem> items{{term.coeff, {}}};
    GaussianRational half{Rational(1, 2)};
    for (Gen g : term.word) {
        if (g == Gen::H || g == Gen::B || g == Gen::C) {
            PLetter c = g == Gen::H ? PH : (g == Gen::B ? PB : PC);
            for (auto& it : items) it.word.push_back(c);
            continue;
        }
        bool is_x = (g == Gen::X);
        std::vector<WorkItem> next;
        next.reserve(items.size() * 2);
        for (auto& it : items) {
            WorkItem wb{half * it.coeff, it.word};
            wb.word.push_back(PB);
            WorkItem wc{(is_x ? half : -half) * it.coeff, std::move(it.word)};
            wc.word.push_back(PC);
            next.push_back(std::move(wb));
            next.push_back(std::move(wc));
        }
        items = std::move(next);
    }
    return items;
}

}  // namespace

PauliNF normalize_pauli(const ExprSum& e, const GaussianRational& lambda) {
    GaussianRational mu = mu_value(lambda);
    PauliNF out(lambda);
    for (const auto& term : e.terms) {
        for (auto& item : expand_xy(term)) reduce_word(mu, std::move(item.coeff), std::move(item.word), out);
    }
    return out;
}

PauliNF nf_multiply(const PauliNF& u, const PauliNF& v) {
    if (u.lambda() != v.lambda()) throw ParameterMismatchError("nf_multiply: lambda mismatch");
    GaussianRational mu = mu_value(u.lambda());
    PauliNF out(u.lambda());
    for (const auto& [ku, fu] : u.entries()) {
        auto [l1, m1] = ku;
        for (const auto& [kv, fv] : v.entries()) {
            auto [l2, m2] = kv;
            for (int k = 0; k <= *fv.degree(); ++k) {
                const GaussianRational& gk = fv.coeff(k);
                if (gk.is_zero()) continue;
                PWord w;
                w.insert(w.end(), static_cast<size_t>(l1), PB);
                if (m1 == 1) w.push_back(PC);
                w.insert(w.end(), static_cast<size_t>(k), PH);
                w.insert(w.end(), static_cast<size_t>(l2), PB);
                if (m2 == 1) w.push_back(PC);
                PauliNF partial(u.lambda());
                reduce_word(mu, gk, std::move(w), partial);
                // left coefficient f(h) multiplies straight in
                for (const auto& [kp, pp] : partial.entries())
                    out.add_term(kp.first, kp.second, fu * pp);
            }
        }
    }
    return out;
}

PauliNF cartan_to_pauli(const CartanNF& u) { return normalize_pauli(u.to_expr(), u.lambda()); }

CartanNF pauli_to_cartan(const PauliNF& u) { return normalize_cartan(u.to_expr(), u.lambda()); }

PauliNF casimir_nf(const GaussianRational& lambda) {
    ExprSum c = ExprSum::word({Gen::B, Gen::B}) - ExprSum::word({Gen::C, Gen::C}) +
                ExprSum::word({Gen::H, Gen::H}) + ExprSum::scalar(GaussianRational(1));
    PauliNF nf = normalize_pauli(c, lambda);
    if (nf != PauliNF::scalar(lambda, casimir_scalar(lambda)))
        throw InternalInconsistencyError("casimir normal form is not the scalar (lambda+1)^2");
    return nf;
}

std::map<GradeLabel, PauliNF> grade_components_z2sq(const PauliNF& u) {
    std::map<GradeLabel, PauliNF> out;
    for (const auto& [key, p] : u.entries()) {
        auto [l, m] = key;
        Poly even = p.even_part();
        Poly odd = p.odd_part();
        if (!even.is_zero()) {
            GradeLabel lab = GradeLabel::z2sq(m, l + m);
            out.try_emplace(lab, PauliNF(u.lambda())).first->second.add_term(l, m, even);
        }
        if (!odd.is_zero()) {
            GradeLabel lab = GradeLabel::z2sq(1 + m, l + m);
            out.try_emplace(lab, PauliNF(u.lambda())).first->second.add_term(l, m, odd);
        }
    }
    return out;
}

std::map<GradeLabel, CartanNF> grade_components_z(const CartanNF& u) {
    std::map<GradeLabel, CartanNF> out;
    if (!u.h_part().is_zero()) {
        out.try_emplace(GradeLabel::z(0), CartanNF(u.lambda())).first->second.add_term_h(u.h_part());
    }
    for (const auto& [l, p] : u.x_part())
        out.try_emplace(GradeLabel::z(l), CartanNF(u.lambda())).first->second.add_term_x(l, p);
    for (const auto& [l, p] : u.y_part())
        out.try_emplace(GradeLabel::z(-l), CartanNF(u.lambda())).first->second.add_term_y(l, p);
    return out;
}

long pauli_filtration_count(int n) {
    long count = 0;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l)
            for (int m = 0; m <= 1 && k + l + m <= n; ++m) ++count;
    return count;
}

}  // namespace sl2lab
