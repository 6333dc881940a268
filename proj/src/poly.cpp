#include "sl2lab/poly.hpp"

#include <sstream>

#include "sl2lab/errors.hpp"

namespace sl2lab {

Poly Poly::monomial(int k, GaussianRational c) {
    if (k < 0) throw DomainError("negative monomial degree");
    if (c.is_zero()) return Poly();
    std::vector<GaussianRational> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

const GaussianRational& Poly::lead() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const GaussianRational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& c : r.coeffs_) c = s * c;
    r.strip();
    return r;
}

GaussianRational Poly::eval(const GaussianRational& v) const {
    GaussianRational acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * v + coeffs_[k];
    return acc;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = *this;
    std::vector<GaussianRational> quot;
    int dd = *divisor.degree();
    GaussianRational inv_lead = divisor.lead().inverse();
    while (!rem.is_zero() && *rem.degree() >= dd) {
        int k = *rem.degree() - dd;
        GaussianRational c = rem.lead() * inv_lead;
        if (static_cast<int>(quot.size()) < k + 1) quot.resize(static_cast<size_t>(k) + 1);
        quot[static_cast<size_t>(k)] = c;
        rem -= Poly::monomial(k, c) * divisor;
    }
    return {Poly(std::move(quot)), std::move(rem)};
}

bool Poly::divisible_by(const Poly& divisor) const {
    if (is_zero()) return true;
    return divmod(divisor).rem.is_zero();
}

Poly Poly::divided_by(const Poly& divisor) const {
    PolyDivMod d = divmod(divisor);
    if (!d.rem.is_zero()) throw InternalInconsistencyError("inexact polynomial division");
    return std::move(d.quot);
}

Poly Poly::even_part() const {
    std::vector<GaussianRational> v(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); k += 2) v[k] = coeffs_[k];
    return Poly(std::move(v));
}

Poly Poly::odd_part() const {
    std::vector<GaussianRational> v(coeffs_.size());
    for (size_t k = 1; k < coeffs_.size(); k += 2) v[k] = coeffs_[k];
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of zero polynomial");
    return lead().inverse() * *this;
}

std::optional<GaussianRational> Poly::proportionality(const Poly& other) const {
    if (is_zero() || other.is_zero()) return std::nullopt;
    if (degree() != other.degree()) return std::nullopt;
    GaussianRational s = other.lead() / lead();
    if (other == s * *this) return s;
    return std::nullopt;
}

Poly poly_shift(const Poly& f, const GaussianRational& a) {
    if (a.is_zero() || f.is_zero()) return f;
    int deg = *f.degree();
    // Pascal row: binom[j] = C(k, j) while expanding (h + a)^k.
    std::vector<GaussianRational> result(static_cast<size_t>(deg) + 1);
    std::vector<GaussianRational> apow(static_cast<size_t>(deg) + 1);
    apow[0] = GaussianRational(1);
    for (int j = 1; j <= deg; ++j) apow[static_cast<size_t>(j)] = apow[static_cast<size_t>(j - 1)] * a;
    std::vector<Rational> binom{Rational(1)};
    for (int k = 0; k <= deg; ++k) {
        const GaussianRational& c = f.coeff(k);
        if (!c.is_zero()) {
            for (int j = 0; j <= k; ++j) {
                result[static_cast<size_t>(k - j)] +=
                    c * GaussianRational(binom[static_cast<size_t>(j)]) * apow[static_cast<size_t>(j)];
            }
        }
        // next Pascal row
        binom.push_back(Rational(1));
        for (size_t j = binom.size() - 2; j >= 1; --j) binom[j] += binom[j - 1];
    }
    return Poly(std::move(result));
}

Poly shift_avg(const Poly& f) {
    GaussianRational half(Rational(1, 2));
    return half * (poly_shift(f, GaussianRational(-2)) + poly_shift(f, GaussianRational(2)));
}

Poly shift_diff(const Poly& f) {
    GaussianRational half(Rational(1, 2));
    return half * (poly_shift(f, GaussianRational(-2)) - poly_shift(f, GaussianRational(2)));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = *degree(); k >= 0; --k) {
        const GaussianRational& c = coeff(k);
        if (c.is_zero()) continue;

        bool negative = false;
        std::string mag;
        if (c.is_real()) {
            negative = c.re.sign() < 0;
            mag = c.re.abs().str();
        } else if (c.is_imaginary()) {
            negative = c.im.sign() < 0;
            Rational a = c.im.abs();
            mag = a.is_one() ? "i" : a.str() + "*i";
        } else {
            mag = "(" + scalar_str(c) + ")";
        }

        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }

        if (k == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag << "*";
            out << "h";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace sl2lab
