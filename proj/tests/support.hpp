#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - polynomial shift by Horner-style composition (vs binomial expansion)
//  - closed-form coefficient formulas for C^2 and CB acting on h^n and
//    h^l B (binomial displays), used to cross-check composed actions
//  - r(h) by triangular back-substitution over those closed forms
//    (vs the library's linear solver over the action relations)
//  - brute-force span membership on truncations (vs divisibility)

#include <vector>

#include "sl2lab/linsolve.hpp"
#include "sl2lab/module.hpp"
#include "sl2lab/poly.hpp"
#include "sl2lab/scalar.hpp"

namespace oracle {

using namespace sl2lab;

// f(h+a) via Horner: f = sum c_k h^k evaluated at the polynomial (h+a).
inline Poly shift_by_composition(const Poly& f, const GaussianRational& a) {
    Poly x_plus_a(std::vector<GaussianRational>{a, GaussianRational(1)});
    Poly acc;
    if (f.is_zero()) return acc;
    for (int k = *f.degree(); k >= 0; --k) acc = acc * x_plus_a + Poly(f.coeff(k));
    return acc;
}

inline GaussianRational binom(long n, long k) {
    if (k < 0 || k > n) return GaussianRational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return GaussianRational(Rational(b));
}

inline GaussianRational pow4(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return GaussianRational(Rational(p));
}

// C^2 . h^n = a_n h^n + a_{n-2} h^{n-2} + ...,
// a_n = -4n^2, a_{n-k} = -(1/2)(-mu C(n,k)4^k + 2 C(n,k+1)4^{k+1} + C(n,k+2)4^{k+2})
inline Poly c2_on_hn(const GaussianRational& mu, int n) {
    GaussianRational half{Rational(1, 2)};
    Poly out = Poly::monomial(n, GaussianRational(-4L * n * n));
    for (int k = 2; k <= n; k += 2) {
        GaussianRational a =
            -half * (-mu * binom(n, k) * pow4(k) + GaussianRational(2) * binom(n, k + 1) * pow4(k + 1) +
                     binom(n, k + 2) * pow4(k + 2));
        out += Poly::monomial(n - k, a);
    }
    return out;
}

// CB . h^n = a_{n+1} h^{n+1} + a_{n-1} h^{n-1} + ...,
// a_{n+1} = 2(n+1), a_{n-k} = (1/2)(-mu C(n,k)4^k + 2 C(n,k+1)4^{k+1} + C(n,k+2)4^{k+2})
inline Poly cb_on_hn(const GaussianRational& mu, int n) {
    GaussianRational half{Rational(1, 2)};
    Poly out = Poly::monomial(n + 1, GaussianRational(2L * (n + 1)));
    for (int k = 1; k <= n; k += 2) {
        GaussianRational a =
            half * (-mu * binom(n, k) * pow4(k) + GaussianRational(2) * binom(n, k + 1) * pow4(k + 1) +
                    binom(n, k + 2) * pow4(k + 2));
        out += Poly::monomial(n - k, a);
    }
    return out;
}

// C^2 . (h^l B) = (a_l h^l + a_{l-2} h^{l-2} + ...) B,
// a_l = -4(l+1)^2, a_{l-k} = -(1/2)((8-mu) C(l,k)4^k + 6 C(l,k+1)4^{k+1} + C(l,k+2)4^{k+2})
inline Poly c2_on_hlB(const GaussianRational& mu, int l) {
    GaussianRational half{Rational(1, 2)};
    GaussianRational w = GaussianRational(8) - mu;
    Poly out = Poly::monomial(l, GaussianRational(-4L * (l + 1) * (l + 1)));
    for (int k = 2; k <= l; k += 2) {
        GaussianRational a =
            -half * (w * binom(l, k) * pow4(k) + GaussianRational(6) * binom(l, k + 1) * pow4(k + 1) +
                     binom(l, k + 2) * pow4(k + 2));
        out += Poly::monomial(l - k, a);
    }
    return out;
}

// CB . (h^l B) = (a_{l+1} h^{l+1} + a_{l-1} h^{l-1} + ...) B,
// a_{l+1} = 2(l+2), a_{l-k} = (1/2)((8-mu) C(l,k)4^k + 6 C(l,k+1)4^{k+1} + C(l,k+2)4^{k+2})
inline Poly cb_on_hlB(const GaussianRational& mu, int l) {
    GaussianRational half{Rational(1, 2)};
    GaussianRational w = GaussianRational(8) - mu;
    Poly out = Poly::monomial(l + 1, GaussianRational(2L * (l + 2)));
    for (int k = 1; k <= l; k += 2) {
        GaussianRational a =
            half * (w * binom(l, k) * pow4(k) + GaussianRational(6) * binom(l, k + 1) * pow4(k + 1) +
                    binom(l, k + 2) * pow4(k + 2));
        out += Poly::monomial(l - k, a);
    }
    return out;
}

// Monic degree-n solution of C^2.r = -4n^2 r by back-substitution over the
// closed-form matrix; the upper-triangular structure makes it unique.
inline Poly r_by_recurrence(const GaussianRational& lambda, int n) {
    GaussianRational mu = mu_value(lambda);
    std::vector<GaussianRational> b(static_cast<size_t>(n) + 1);
    b[static_cast<size_t>(n)] = GaussianRational(1);
    for (int m = n - 1; m >= 0; --m) {
        GaussianRational rhs;
        for (int j = m + 1; j <= n; ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            rhs += c2_on_hn(mu, j).coeff(m) * b[static_cast<size_t>(j)];
        }
        GaussianRational gap(4L * n * n - 4L * m * m);
        b[static_cast<size_t>(m)] = -rhs / gap;
    }
    return Poly(std::move(b));
}

// Column rank of a matrix over Q(i).
inline int rank(const Mat& a, int cols) {
    return cols - static_cast<int>(nullspace(a, cols).size());
}

// Is m in the C-span of { u . gen : u = h^a B^b C^c, a+b+c <= op_bound,
// c <= 1, gen in gens }? Exact truncation-free linear algebra: the spanning
// vectors keep their full degree.
inline bool in_span(const GaussianRational& lambda, const ModuleElement& m,
                    const std::vector<ModuleElement>& gens, int op_bound) {
    std::vector<ModuleElement> images;
    for (const auto& gen : gens) {
        for (int a = 0; a <= op_bound; ++a) {
            for (int bb = 0; a + bb <= op_bound; ++bb) {
                for (int c = 0; c <= 1 && a + bb + c <= op_bound; ++c) {
                    PauliNF u(lambda);
                    u.add_term(bb, c, Poly::monomial(a));
                    images.push_back(act_nf(u, gen));
                }
            }
        }
    }
    int fdeg = 0, gdeg = 0;
    auto widen = [&](const ModuleElement& e) {
        if (!e.f().is_zero()) fdeg = std::max(fdeg, *e.f().degree());
        if (!e.g().is_zero()) gdeg = std::max(gdeg, *e.g().degree());
    };
    for (const auto& e : images) widen(e);
    widen(m);
    int rows = (fdeg + 1) + (gdeg + 1);
    auto to_col = [&](const ModuleElement& e) {
        Vec v(static_cast<size_t>(rows));
        for (int k = 0; k <= fdeg; ++k) v[static_cast<size_t>(k)] = e.f().coeff(k);
        for (int k = 0; k <= gdeg; ++k) v[static_cast<size_t>(fdeg + 1 + k)] = e.g().coeff(k);
        return v;
    };
    int cols = static_cast<int>(images.size());
    Mat without(static_cast<size_t>(rows), Vec(static_cast<size_t>(cols)));
    Mat with(static_cast<size_t>(rows), Vec(static_cast<size_t>(cols) + 1));
    for (int j = 0; j < cols; ++j) {
        Vec col = to_col(images[static_cast<size_t>(j)]);
        for (int i = 0; i < rows; ++i) {
            without[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
            with[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
        }
    }
    Vec mv = to_col(m);
    for (int i = 0; i < rows; ++i) with[static_cast<size_t>(i)][static_cast<size_t>(cols)] = mv[static_cast<size_t>(i)];
    return rank(without, cols) == rank(with, cols + 1);
}

}  // namespace oracle
