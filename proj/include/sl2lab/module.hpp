#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2lab/envelope.hpp"
#include "sl2lab/poly.hpp"

namespace sl2lab {

/// The scalar mu = lambda^2 + 2*lambda as a strong type.
struct Mu {
    GaussianRational value;
};

Mu mu(const GaussianRational& lambda);

/// Element f(h) + g(h)*B of the rank-2 torsion-free module
/// M_lambda^C = C[h] (+) C[h]B.
class ModuleElement {
  public:
    ModuleElement(GaussianRational lambda, Poly f, Poly g)
        : lambda_(std::move(lambda)), f_(std::move(f)), g_(std::move(g)) {}

    static ModuleElement zero(const GaussianRational& lambda) {
        return ModuleElement(lambda, Poly(), Poly());
    }

    const GaussianRational& lambda() const { return lambda_; }
    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }

    bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

    ModuleElement operator-() const { return {lambda_, -f_, -g_}; }
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const GaussianRational& s, const ModuleElement& m) {
        return {m.lambda_, s * m.f_, s * m.g_};
    }
    // C[h]-module structure: p(h).(f, g) = (p f, p g).
    friend ModuleElement operator*(const Poly& p, const ModuleElement& m) {
        return {m.lambda_, p * m.f_, p * m.g_};
    }
    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.lambda_ == b.lambda_ && a.f_ == b.f_ && a.g_ == b.g_;
    }

    std::string str() const;  // "f ; g"

  private:
    GaussianRational lambda_;
    Poly f_;
    Poly g_;
};

/// Action of a single generator. B and C follow the closed formulas on
/// both components; x and y act by linearity as (B+C)/2 and (B-C)/2.
ModuleElement act_generator(Gen gen, const ModuleElement& m);

/// Action of a normal form: iterated generator action along each monomial
/// h^k B^l C^m (C first), linear over the terms.
ModuleElement act_nf(const PauliNF& u, const ModuleElement& m);

/// Fold of act_generator over a raw word (rightmost letter acts first).
ModuleElement act_word(const std::vector<Gen>& w, const ModuleElement& m);

/// The scalar s with casimir . m = s m; must equal (lambda+1)^2.
GaussianRational casimir_scalar_check(const ModuleElement& m);

/// Z2^2 grading split: even/odd parts of f carry labels (0,0)/(1,0) and
/// even/odd parts of g carry (0,1)/(1,1).
std::map<GradeLabel, ModuleElement> z2sq_split(const ModuleElement& m);

/// Basis of { m : deg f, deg g <= D and x.m = 0 }, by exact linear algebra
/// on the truncation. Empty for every lambda: no highest-weight vector
/// exists in a torsion-free module.
std::vector<ModuleElement> x_kernel_truncated(const GaussianRational& lambda, int D);

}  // namespace sl2lab
