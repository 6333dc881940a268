#pragma once

#include <map>
#include <string>
#include <utility>

#include "sl2lab/expr.hpp"
#include "sl2lab/poly.hpp"

namespace sl2lab {

/// Degree label in one of the three grading groups used here: Z (Cartan),
/// Z2^2 (Pauli), or its Z2 coarsening. Addition is only defined within a
/// kind; mixing kinds is a hard error.
struct GradeLabel {
    enum class Kind : uint8_t { Z, Z2sq, Z2 };
    Kind kind = Kind::Z;
    int k = 0;           // Z degree
    int a = 0, b = 0;    // Z2^2 bits
    int c = 0;           // Z2 bit

    static GradeLabel z(int deg) {
        GradeLabel l;
        l.kind = Kind::Z;
        l.k = deg;
        return l;
    }
    static GradeLabel z2sq(int a_, int b_) {
        GradeLabel l;
        l.kind = Kind::Z2sq;
        l.a = a_ & 1;
        l.b = b_ & 1;
        return l;
    }
    static GradeLabel z2(int c_) {
        GradeLabel l;
        l.kind = Kind::Z2;
        l.c = c_ & 1;
        return l;
    }

    GradeLabel operator+(const GradeLabel& o) const;
    friend bool operator==(const GradeLabel& x, const GradeLabel& y) {
        return x.kind == y.kind && x.k == y.k && x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const GradeLabel& x, const GradeLabel& y) {
        auto tx = std::tie(x.kind, x.k, x.a, x.b, x.c);
        auto ty = std::tie(y.kind, y.k, y.a, y.b, y.c);
        return tx < ty;
    }

    std::string str() const;  // "3", "(1,0)", "1"
};

/// Projection of a Z2^2 label onto its second bit: (0,0),(1,0) -> 0 and
/// (0,1),(1,1) -> 1.
GradeLabel grade_coarsen_z2(const GradeLabel& label);

/// Element of U(I_lambda) written in the Cartan basis: a polynomial h-part
/// plus f(h)*x^l and g(h)*y^l terms (all stored polynomials nonzero).
class CartanNF {
  public:
    explicit CartanNF(GaussianRational lambda) : lambda_(std::move(lambda)) {}

    static CartanNF scalar(const GaussianRational& lambda, const GaussianRational& c);
    static CartanNF unit(const GaussianRational& lambda) { return scalar(lambda, GaussianRational(1)); }

    const GaussianRational& lambda() const { return lambda_; }
    const Poly& h_part() const { return h_part_; }
    const std::map<int, Poly>& x_part() const { return x_part_; }
    const std::map<int, Poly>& y_part() const { return y_part_; }

    bool is_zero() const { return h_part_.is_zero() && x_part_.empty() && y_part_.empty(); }

    void add_term_h(const Poly& p);
    void add_term_x(int l, const Poly& p);
    void add_term_y(int l, const Poly& p);

    CartanNF operator-() const;
    CartanNF& operator+=(const CartanNF& o);
    CartanNF& operator-=(const CartanNF& o);
    friend CartanNF operator+(CartanNF a, const CartanNF& b) { return a += b; }
    friend CartanNF operator-(CartanNF a, const CartanNF& b) { return a -= b; }
    friend CartanNF operator*(const GaussianRational& s, const CartanNF& u);
    friend bool operator==(const CartanNF& a, const CartanNF& b) {
        return a.lambda_ == b.lambda_ && a.h_part_ == b.h_part_ && a.x_part_ == b.x_part_ &&
               a.y_part_ == b.y_part_;
    }

    ExprSum to_expr() const;
    std::string str() const;

  private:
    GaussianRational lambda_;
    Poly h_part_;
    std::map<int, Poly> x_part_;  // l >= 1
    std::map<int, Poly> y_part_;  // l >= 1
};

/// Element of U(I_lambda) written in the Pauli basis: entries (l, m) with
/// m in {0,1} mapping to the nonzero polynomial coefficient of B^l C^m.
class PauliNF {
  public:
    using Key = std::pair<int, int>;  // (B exponent, C exponent)

    explicit PauliNF(GaussianRational lambda) : lambda_(std::move(lambda)) {}

    static PauliNF scalar(const GaussianRational& lambda, const GaussianRational& c);
    static PauliNF unit(const GaussianRational& lambda) { return scalar(lambda, GaussianRational(1)); }

    const GaussianRational& lambda() const { return lambda_; }
    const std::map<Key, Poly>& entries() const { return entries_; }
    const Poly& entry(int l, int m) const;

    bool is_zero() const { return entries_.empty(); }
    // Engaged when the element is c*1 for some scalar c (including zero).
    std::optional<GaussianRational> as_scalar() const;

    void add_term(int l, int m, const Poly& p);

    PauliNF operator-() const;
    PauliNF& operator+=(const PauliNF& o);
    PauliNF& operator-=(const PauliNF& o);
    friend PauliNF operator+(PauliNF a, const PauliNF& b) { return a += b; }
    friend PauliNF operator-(PauliNF a, const PauliNF& b) { return a -= b; }
    friend PauliNF operator*(const GaussianRational& s, const PauliNF& u);
    friend bool operator==(const PauliNF& a, const PauliNF& b) {
        return a.lambda_ == b.lambda_ && a.entries_ == b.entries_;
    }

    ExprSum to_expr() const;
    std::string str() const;

  private:
    GaussianRational lambda_;
    std::map<Key, Poly> entries_;
};

/// Unique Cartan-basis representative of the image of e in U(I_lambda).
CartanNF normalize_cartan(const ExprSum& e, const GaussianRational& lambda);

/// Unique Pauli-basis representative; x, y are eliminated up front via
/// x = (B+C)/2, y = (B-C)/2 and the word rules Bh -> hB - 2C,
/// Ch -> hC - 2B, CB -> BC + 2h, CC -> h^2 + B^2 - mu.
PauliNF normalize_pauli(const ExprSum& e, const GaussianRational& lambda);

PauliNF nf_multiply(const PauliNF& u, const PauliNF& v);
CartanNF nf_multiply(const CartanNF& u, const CartanNF& v);

PauliNF cartan_to_pauli(const CartanNF& u);
CartanNF pauli_to_cartan(const PauliNF& u);

/// Normal form of the Casimir element B^2 - C^2 + h^2 + 1; checked to be
/// the scalar (lambda+1)^2.
PauliNF casimir_nf(const GaussianRational& lambda);

/// Split by Z2^2 degree of the monomials h^k B^l C^m, namely
/// ((k+m) mod 2, (l+m) mod 2). Components sum to u.
std::map<GradeLabel, PauliNF> grade_components_z2sq(const PauliNF& u);

/// Split by Z-degree: +l on h^k x^l, -l on h^k y^l, 0 on the h-part.
std::map<GradeLabel, CartanNF> grade_components_z(const CartanNF& u);

/// Number of Pauli basis monomials h^k B^l C^m with m <= 1 and k+l+m <= n
/// (the filtration dimension; equals sum_{i=0..n} (2i+1)).
long pauli_filtration_count(int n);

}  // namespace sl2lab
