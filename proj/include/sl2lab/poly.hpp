#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2lab/scalar.hpp"

namespace sl2lab {

struct PolyDivMod;

/// Dense univariate polynomial in h over Q(i). Trailing zero coefficients
/// are stripped; the zero polynomial has an empty coefficient vector and
/// its degree is reported through the nullopt sentinel, never as an integer.
class Poly {
  public:
    Poly() = default;
    Poly(GaussianRational constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    Poly(long constant) : Poly(GaussianRational(constant)) {}
    explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    static Poly h() { return monomial(1); }
    static Poly monomial(int k, GaussianRational c = GaussianRational(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const GaussianRational& lead() const;

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational();
        return coeffs_[static_cast<size_t>(k)];
    }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& v) const;

    PolyDivMod divmod(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;
    // Exact quotient; throws InternalInconsistencyError on nonzero remainder.
    Poly divided_by(const Poly& divisor) const;

    Poly even_part() const;  // terms of even h-degree
    Poly odd_part() const;   // terms of odd h-degree

    Poly monic() const;  // throws DomainError on the zero polynomial
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    // m is proportional to *this with a nonzero scalar factor?
    std::optional<GaussianRational> proportionality(const Poly& other) const;

    std::string str() const;

  private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussianRational> coeffs_;
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

/// f(h + a), computed exactly by binomial expansion.
Poly poly_shift(const Poly& f, const GaussianRational& a);

/// (f(h-2) + f(h+2)) / 2; preserves degree and parity.
Poly shift_avg(const Poly& f);

/// (f(h-2) - f(h+2)) / 2; drops degree by exactly one, kills constants.
Poly shift_diff(const Poly& f);

}  // namespace sl2lab
