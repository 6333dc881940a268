#include "sl2lab/module.hpp"

#include <sstream>

#include "sl2lab/errors.hpp"
#include "sl2lab/linsolve.hpp"

namespace sl2lab {

Mu mu(const GaussianRational& lambda) { return Mu{mu_value(lambda)}; }

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    if (lambda_ != o.lambda_) throw ParameterMismatchError("module sum: lambda mismatch");
    f_ += o.f_;
    g_ += o.g_;
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    if (lambda_ != o.lambda_) throw ParameterMismatchError("module sum: lambda mismatch");
    f_ -= o.f_;
    g_ -= o.g_;
    return *this;
}

std::string ModuleElement::str() const { return f_.str() + " ; " + g_.str(); }

namespace {

// (mu - h^2 + 2h) g(h-2) and (mu - h^2 - 2h) g(h+2), the two halves of the
// B and C actions on the g-component.
Poly weighted_left(const GaussianRational& mu, const Poly& g) {
    Poly w(std::vector<GaussianRational>{mu, GaussianRational(2), GaussianRational(-1)});
    return w * poly_shift(g, GaussianRational(-2));
}

Poly weighted_right(const GaussianRational& mu, const Poly& g) {
    Poly w(std::vector<GaussianRational>{mu, GaussianRational(-2), GaussianRational(-1)});
    return w * poly_shift(g, GaussianRational(2));
}

}  // namespace

ModuleElement act_generator(Gen gen, const ModuleElement& m) {
    const GaussianRational& lambda = m.lambda();
    GaussianRational half{Rational(1, 2)};
    switch (gen) {
        case Gen::H:
            return ModuleElement(lambda, Poly::h() * m.f(), Poly::h() * m.g());
        case Gen::B: {
            GaussianRational mu_v = mu_value(lambda);
            Poly first = half * (weighted_left(mu_v, m.g()) + weighted_right(mu_v, m.g()));
            return ModuleElement(lambda, std::move(first), shift_avg(m.f()));
        }
        case Gen::C: {
            GaussianRational mu_v = mu_value(lambda);
            Poly first = half * (weighted_left(mu_v, m.g()) - weighted_right(mu_v, m.g()));
            return ModuleElement(lambda, std::move(first), shift_diff(m.f()));
        }
        case Gen::X: {
            ModuleElement s = act_generator(Gen::B, m) + act_generator(Gen::C, m);
            return half * s;
        }
        case Gen::Y: {
            ModuleElement s = act_generator(Gen::B, m) - act_generator(Gen::C, m);
            return half * s;
        }
    }
    throw InternalInconsistencyError("unreachable generator");
}

ModuleElement act_nf(const PauliNF& u, const ModuleElement& m) {
    if (u.lambda() != m.lambda()) throw ParameterMismatchError("act_nf: lambda mismatch");
    ModuleElement out = ModuleElement::zero(m.lambda());
    for (const auto& [key, p] : u.entries()) {
        auto [l, mm] = key;
        ModuleElement cur = m;
        if (mm == 1) cur = act_generator(Gen::C, cur);
        for (int s = 0; s < l; ++s) cur = act_generator(Gen::B, cur);
        out += p * cur;
    }
    return out;
}

ModuleElement act_word(const std::vector<Gen>& w, const ModuleElement& m) {
    ModuleElement cur = m;
    for (size_t k = w.size(); k-- > 0;) cur = act_generator(w[k], cur);
    return cur;
}

GaussianRational casimir_scalar_check(const ModuleElement& m) {
    if (m.is_zero()) throw DomainError("casimir_scalar_check on the zero element");
    ModuleElement w = act_nf(casimir_nf(m.lambda()), m);
    GaussianRational s;
    if (!m.f().is_zero())
        s = w.f().coeff(*m.f().degree()) / m.f().lead();
    else
        s = w.g().coeff(*m.g().degree()) / m.g().lead();
    if (!(w == s * m))
        throw InternalInconsistencyError("casimir action is not proportional to the element");
    return s;
}

std::map<GradeLabel, ModuleElement> z2sq_split(const ModuleElement& m) {
    std::map<GradeLabel, ModuleElement> out;
    auto put = [&](int a, int b, Poly f, Poly g) {
        if (f.is_zero() && g.is_zero()) return;
        out.emplace(GradeLabel::z2sq(a, b), ModuleElement(m.lambda(), std::move(f), std::move(g)));
    };
    put(0, 0, m.f().even_part(), Poly());
    put(1, 0, m.f().odd_part(), Poly());
    put(0, 1, Poly(), m.g().even_part());
    put(1, 1, Poly(), m.g().odd_part());
    return out;
}

std::vector<ModuleElement> x_kernel_truncated(const GaussianRational& lambda, int D) {
    if (D < 0) throw DomainError("negative truncation degree");
    // Unknowns: f_0..f_D, g_0..g_D. Rows: coefficients of both components of
    // x.(f, g) = ( (mu - h^2 + 2h) g(h-2) / 2 , f(h-2) / 2 ).
    int cols = 2 * (D + 1);
    Mat rows;
    GaussianRational mu_v = mu_value(lambda);
    for (int j = 0; j <= D; ++j) {
        // image of the basis vector f = h^j
        Poly ff = poly_shift(Poly::monomial(j), GaussianRational(-2));
        for (int kk = 0; kk <= *ff.degree(); ++kk) {
            size_t row = static_cast<size_t>(kk);
            // second-component rows live after the first-component block
            size_t row_index = static_cast<size_t>(D + 3) + row;
            if (rows.size() <= row_index) rows.resize(row_index + 1);
            if (rows[row_index].empty()) rows[row_index].resize(static_cast<size_t>(cols));
            rows[row_index][static_cast<size_t>(j)] = ff.coeff(kk);
        }
        // image of the basis vector g = h^j
        Poly gg = weighted_left(mu_v, Poly::monomial(j));
        for (int kk = 0; kk <= *gg.degree(); ++kk) {
            size_t row_index = static_cast<size_t>(kk);
            if (rows.size() <= row_index) rows.resize(row_index + 1);
            if (rows[row_index].empty()) rows[row_index].resize(static_cast<size_t>(cols));
            rows[row_index][static_cast<size_t>(D + 1 + j)] = gg.coeff(kk);
        }
    }
    for (auto& r : rows)
        if (r.empty()) r.resize(static_cast<size_t>(cols));

    std::vector<ModuleElement> basis;
    for (const Vec& v : nullspace(std::move(rows), cols)) {
        std::vector<GaussianRational> fc(v.begin(), v.begin() + (D + 1));
        std::vector<GaussianRational> gc(v.begin() + (D + 1), v.end());
        basis.emplace_back(lambda, Poly(std::move(fc)), Poly(std::move(gc)));
    }
    return basis;
}

}  // namespace sl2lab
