#include "sl2lab/verify.hpp"

#include <sstream>

#include "sl2lab/errors.hpp"
#include "sl2lab/submodule.hpp"

namespace sl2lab {

GaussianRational sample_scalar(SplitMix64& rng) {
    static const GaussianRational pool[] = {
        GaussianRational(1),
        GaussianRational(-1),
        GaussianRational(2),
        GaussianRational(-2),
        GaussianRational(3),
        GaussianRational(Rational(1, 2)),
        GaussianRational(Rational(-1, 2)),
        GaussianRational(Rational(3, 2)),
        GaussianRational::i(),
        -GaussianRational::i(),
        GaussianRational(Rational(1), Rational(1)),
        GaussianRational(Rational(2), Rational(-1)),
    };
    return pool[rng.below(sizeof(pool) / sizeof(pool[0]))];
}

Poly sample_poly(SplitMix64& rng, int max_deg) {
    if (max_deg < 0) return Poly();
    int deg = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg) + 1));
    std::vector<GaussianRational> coeffs(static_cast<size_t>(deg) + 1);
    for (auto& c : coeffs)
        if (rng.below(2) == 0) c = sample_scalar(rng);
    coeffs[static_cast<size_t>(deg)] = sample_scalar(rng);  // pin the degree
    return Poly(std::move(coeffs));
}

ModuleElement sample_element(SplitMix64& rng, const GaussianRational& lambda, int max_deg) {
    Poly f, g;
    switch (rng.below(3)) {
        case 0: f = sample_poly(rng, max_deg); break;
        case 1: g = sample_poly(rng, max_deg); break;
        default:
            f = sample_poly(rng, max_deg);
            g = sample_poly(rng, max_deg);
            break;
    }
    if (f.is_zero() && g.is_zero()) f = Poly(1L);
    return ModuleElement(lambda, std::move(f), std::move(g));
}

std::vector<Gen> sample_word(SplitMix64& rng, int max_len) {
    static const Gen letters[] = {Gen::X, Gen::Y, Gen::H, Gen::B, Gen::C};
    size_t len = rng.below(static_cast<uint64_t>(max_len) + 1);
    std::vector<Gen> w;
    w.reserve(len);
    for (size_t k = 0; k < len; ++k) w.push_back(letters[rng.below(5)]);
    return w;
}

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void add_check(SuiteReport& r, const std::string& name, bool pass, std::string detail = "") {
    r.checks.push_back({name, pass, std::move(detail)});
}

// --------------------------------------------------------------------------

SuiteReport suite_brackets(const GaussianRational& lambda, int deg) {
    SuiteReport r{"brackets", lambda, deg, {}};
    SplitMix64 rng(0xb1ac7e75u);
    bool bc = true, hb = true, hc = true, xy = true, hx = true, hy = true;
    std::string detail;
    for (int t = 0; t < 100; ++t) {
        ModuleElement m = sample_element(rng, lambda, deg);
        auto act2 = [&](Gen g1, Gen g2) { return act_generator(g1, act_generator(g2, m)); };
        ModuleElement hm = act_generator(Gen::H, m);
        ModuleElement bm = act_generator(Gen::B, m);
        ModuleElement cm = act_generator(Gen::C, m);
        ModuleElement xm = act_generator(Gen::X, m);
        ModuleElement ym = act_generator(Gen::Y, m);
        if (!(act2(Gen::B, Gen::C) - act2(Gen::C, Gen::B) == GaussianRational(-2) * hm)) bc = false;
        if (!(act2(Gen::H, Gen::B) - act2(Gen::B, Gen::H) == GaussianRational(2) * cm)) hb = false;
        if (!(act2(Gen::H, Gen::C) - act2(Gen::C, Gen::H) == GaussianRational(2) * bm)) hc = false;
        if (!(act2(Gen::X, Gen::Y) - act2(Gen::Y, Gen::X) == hm)) xy = false;
        if (!(act2(Gen::H, Gen::X) - act2(Gen::X, Gen::H) == GaussianRational(2) * xm)) hx = false;
        if (!(act2(Gen::H, Gen::Y) - act2(Gen::Y, Gen::H) == GaussianRational(-2) * ym)) hy = false;
        if (!(bc && hb && hc && xy && hx && hy) && detail.empty()) detail = m.str();
    }
    add_check(r, "B(Cm) - C(Bm) = -2h.m (100 samples)", bc, detail);
    add_check(r, "h(Bm) - B(hm) = 2C.m (100 samples)", hb, detail);
    add_check(r, "h(Cm) - C(hm) = 2B.m (100 samples)", hc, detail);
    add_check(r, "x(ym) - y(xm) = h.m (100 samples)", xy, detail);
    add_check(r, "h(xm) - x(hm) = 2x.m (100 samples)", hx, detail);
    add_check(r, "h(ym) - y(hm) = -2y.m (100 samples)", hy, detail);
    return r;
}

SuiteReport suite_casimir(const GaussianRational& lambda, int deg) {
    SuiteReport r{"casimir", lambda, deg, {}};
    bool nf_ok = true;
    std::string nf_detail;
    PauliNF c = PauliNF::unit(lambda);
    try {
        c = casimir_nf(lambda);
        nf_ok = c == PauliNF::scalar(lambda, casimir_scalar(lambda));
    } catch (const InternalInconsistencyError& e) {
        nf_ok = false;
        nf_detail = e.what();
    }
    add_check(r, "casimir normal form equals (lambda+1)^2", nf_ok, nf_detail);

    SplitMix64 rng(0xca51311u);
    bool scalar_ok = true;
    for (int t = 0; t < 20 && nf_ok; ++t) {
        ModuleElement m = sample_element(rng, lambda, deg);
        if (!(casimir_scalar_check(m) == casimir_scalar(lambda))) scalar_ok = false;
    }
    add_check(r, "casimir acts as (lambda+1)^2 on sampled elements", nf_ok && scalar_ok);

    bool central = true;
    for (int t = 0; t < 10 && nf_ok; ++t) {
        PauliNF u = normalize_pauli(ExprSum::word(sample_word(rng, 4)), lambda);
        if (!(nf_multiply(c, u) == nf_multiply(u, c))) central = false;
    }
    add_check(r, "casimir is central on sampled normal forms", nf_ok && central);
    return r;
}

SuiteReport suite_grading(const GaussianRational& lambda, int deg) {
    SuiteReport r{"grading", lambda, deg, {}};
    SplitMix64 rng(0x6ead1276u);

    bool split_sums = true, homogeneous = true;
    for (int t = 0; t < 20; ++t) {
        PauliNF u = normalize_pauli(ExprSum::word(sample_word(rng, 5), sample_scalar(rng)), lambda);
        PauliNF sum(lambda);
        for (const auto& [label, comp] : grade_components_z2sq(u)) {
            sum += comp;
            if (grade_components_z2sq(comp).size() > 1) homogeneous = false;
        }
        if (!(sum == u)) split_sums = false;
    }
    add_check(r, "Z2^2 components sum to the element", split_sums);
    add_check(r, "Z2^2 components are homogeneous", homogeneous);

    bool additive = true;
    for (int t = 0; t < 30; ++t) {
        // homogeneous generators: single Pauli monomials
        int l1 = static_cast<int>(rng.below(3)), m1 = static_cast<int>(rng.below(2));
        int l2 = static_cast<int>(rng.below(3)), m2 = static_cast<int>(rng.below(2));
        int k1 = static_cast<int>(rng.below(3)), k2 = static_cast<int>(rng.below(3));
        PauliNF u(lambda), v(lambda);
        u.add_term(l1, m1, Poly::monomial(k1));
        v.add_term(l2, m2, Poly::monomial(k2));
        GradeLabel lu = GradeLabel::z2sq(k1 + m1, l1 + m1);
        GradeLabel lv = GradeLabel::z2sq(k2 + m2, l2 + m2);
        PauliNF prod = nf_multiply(u, v);
        for (const auto& [label, comp] : grade_components_z2sq(prod)) {
            if (!(label == lu + lv)) additive = false;
        }
    }
    add_check(r, "grading is additive under multiplication", additive);

    bool casimir_deg0 = true;
    {
        auto comps = grade_components_z2sq(casimir_nf(lambda));
        casimir_deg0 = comps.size() == 1 && comps.begin()->first == GradeLabel::z2sq(0, 0);
    }
    add_check(r, "casimir is homogeneous of degree (0,0)", casimir_deg0);

    bool z_split = true;
    for (int t = 0; t < 20; ++t) {
        CartanNF u = normalize_cartan(ExprSum::word(sample_word(rng, 5), sample_scalar(rng)), lambda);
        CartanNF sum(lambda);
        for (const auto& [label, comp] : grade_components_z(u)) sum += comp;
        if (!(sum == u)) z_split = false;
    }
    add_check(r, "Z components sum to the element", z_split);

    bool coarsen_ok = grade_coarsen_z2(GradeLabel::z2sq(0, 0)) == GradeLabel::z2(0) &&
                      grade_coarsen_z2(GradeLabel::z2sq(1, 0)) == GradeLabel::z2(0) &&
                      grade_coarsen_z2(GradeLabel::z2sq(0, 1)) == GradeLabel::z2(1) &&
                      grade_coarsen_z2(GradeLabel::z2sq(1, 1)) == GradeLabel::z2(1);
    add_check(r, "Z2 coarsening sends (0,0),(1,0) to 0 and (0,1),(1,1) to 1", coarsen_ok);

    bool act_compat = true;
    for (int t = 0; t < 30; ++t) {
        int l = static_cast<int>(rng.below(3)), mm = static_cast<int>(rng.below(2));
        int k = static_cast<int>(rng.below(3));
        PauliNF u(lambda);
        u.add_term(l, mm, Poly::monomial(k));
        GradeLabel lu = GradeLabel::z2sq(k + mm, l + mm);
        int km = static_cast<int>(rng.below(4));
        bool on_b = rng.below(2) == 1;
        ModuleElement m(lambda, on_b ? Poly() : Poly::monomial(km), on_b ? Poly::monomial(km) : Poly());
        GradeLabel lm = GradeLabel::z2sq(km, on_b ? 1 : 0);
        ModuleElement res = act_nf(u, m);
        for (const auto& [label, comp] : z2sq_split(res)) {
            if (!(label == lu + lm)) act_compat = false;
        }
    }
    add_check(r, "action of homogeneous u on homogeneous m has degree a+b", act_compat);
    return r;
}

SuiteReport suite_simplicity(const GaussianRational& lambda, int deg) {
    if (lambda.is_even_integer())
        throw DomainError("simplicity suite needs lambda outside 2Z");
    SuiteReport r{"simplicity", lambda, deg, {}};
    SplitMix64 rng(0x51ca0de5u);
    bool all_full = true, replay = true;
    std::string detail;
    for (int t = 0; t < 50; ++t) {
        ModuleElement m = sample_element(rng, lambda, deg);
        ClassifyOutcome oc = classify_generated(lambda, {m});
        if (oc.verdict != SubmoduleId::Full) {
            all_full = false;
            detail = m.str();
        }
        for (const auto& cert : oc.certificates)
            if (!cert.replay_ok()) replay = false;
    }
    add_check(r, "50 sampled nonzero elements generate the full module", all_full, detail);
    add_check(r, "all reduction certificates replay", replay);
    return r;
}

SuiteReport suite_maximality(const GaussianRational& lambda, int deg) {
    SuiteReport r{"maximality", lambda, deg, {}};
    RPolyResult rp = compute_r(lambda);
    int n = rp.n;
    GaussianRational a2 = GaussianRational::i() / GaussianRational(2L * n);

    bool fixed_ok = classify_generated(lambda, {ModuleElement(lambda, rp.r, Poly())}).verdict ==
                        SubmoduleId::N &&
                    classify_generated(lambda, {ModuleElement(lambda, Poly(1L), Poly())}).verdict ==
                        SubmoduleId::Full &&
                    classify_generated(lambda, {special_vector(lambda, GaussianRational(1), a2)})
                            .verdict == SubmoduleId::P &&
                    classify_generated(lambda, {special_vector(lambda, GaussianRational(1), -a2)})
                            .verdict == SubmoduleId::Q;
    add_check(r, "r generates N; 1 generates M; special vectors generate P and Q", fixed_ok);

    SplitMix64 rng(0x3a813171u);
    bool outside_full = true;
    std::string detail;
    int tested = 0;
    for (int t = 0; t < 120 && tested < 50; ++t) {
        ModuleElement m = sample_element(rng, lambda, deg);
        if (membership(lambda, m, SubmoduleId::N)) continue;
        ++tested;
        if (classify_generated(lambda, {m}).verdict != SubmoduleId::Full) {
            outside_full = false;
            detail = m.str();
        }
    }
    add_check(r, "sampled elements outside N generate the full module", outside_full, detail);

    // N = P (+) Q on a sweep: decompose and check uniqueness via membership
    bool direct_sum = true;
    int bound = deg;
    for (int df = -1; df + n <= bound; ++df) {
        for (int dg = -1; dg + n - 1 <= bound; ++dg) {
            if (df < 0 && dg < 0) continue;
            Poly pf = df < 0 ? Poly() : Poly::monomial(df) + Poly(1L);
            Poly pg = dg < 0 ? Poly() : Poly::monomial(dg) + Poly(GaussianRational::i());
            ModuleElement m(lambda, pf * rp.r, pg * rp.rstar);
            Poly s = m.f().divided_by(rp.r);
            Poly t = -GaussianRational::i() * m.g().divided_by(rp.rstar);
            GaussianRational half{Rational(1, 2)};
            Poly f_p = half * (s - t);
            Poly f_q = half * (s + t);
            ModuleElement p(lambda, f_p * rp.r, (-GaussianRational::i() * f_p) * rp.rstar);
            ModuleElement q(lambda, f_q * rp.r, (GaussianRational::i() * f_q) * rp.rstar);
            if (!(p + q == m) || !membership(lambda, p, SubmoduleId::P) ||
                !membership(lambda, q, SubmoduleId::Q))
                direct_sum = false;
            if (!p.is_zero() && membership(lambda, p, SubmoduleId::Q)) direct_sum = false;
            if (!q.is_zero() && membership(lambda, q, SubmoduleId::P)) direct_sum = false;
        }
    }
    add_check(r, "sampled N elements split uniquely as P + Q", direct_sum);
    return r;
}

SuiteReport suite_rpoly(const GaussianRational& lambda, int deg) {
    SuiteReport r{"rpoly", lambda, deg, {}};
    RPolyResult rp = compute_r(lambda);
    int n = rp.n;
    ModuleElement rv(lambda, rp.r, Poly());

    auto act2 = [&](Gen g1, Gen g2, const ModuleElement& m) {
        return act_generator(g1, act_generator(g2, m));
    };
    Poly hr = Poly::h() * rp.r;
    bool rel1 = act2(Gen::C, Gen::C, rv) == GaussianRational(-4L * n * n) * rv;
    bool rel2 = act2(Gen::C, Gen::B, rv) == ModuleElement(lambda, GaussianRational(2L * (n + 1)) * hr, Poly());
    bool rel3 = act2(Gen::B, Gen::C, rv) == ModuleElement(lambda, GaussianRational(2L * n) * hr, Poly());
    Poly b2_poly(std::vector<GaussianRational>{GaussianRational(-4L * n), GaussianRational(0),
                                               GaussianRational(-1)});
    bool rel4 = act2(Gen::B, Gen::B, rv) == ModuleElement(lambda, b2_poly * rp.r, Poly());
    add_check(r, "C^2.r = -4n^2 r", rel1);
    add_check(r, "CB.r = 2(n+1)h r", rel2);
    add_check(r, "BC.r = 2n h r (implied by the first two)", rel3);
    add_check(r, "B^2.r = (-h^2-4n) r (implied by the first two)", rel4);

    Poly lhs = (Poly::h() + Poly(2L * n)) * poly_shift(rp.r, GaussianRational(-2));
    Poly rhs = (Poly::h() - Poly(2L * n)) * poly_shift(rp.r, GaussianRational(2));
    add_check(r, "(h+2n) r(h-2) = (h-2n) r(h+2)", lhs == rhs);

    ModuleElement br = act_generator(Gen::B, rv);
    ModuleElement cr = act_generator(Gen::C, rv);
    GaussianRational m1_over_2n = GaussianRational(-1) / GaussianRational(2L * n);
    add_check(r, "B.r = -(1/2n) h (C.r)", br == m1_over_2n * (Poly::h() * cr));

    // rstar satisfies the B-side eigen-relations with l = n-1
    ModuleElement rsb(lambda, Poly(), rp.rstar);
    long l = n - 1;
    bool rs1 = act2(Gen::C, Gen::C, rsb) == GaussianRational(-4L * (l + 1) * (l + 1)) * rsb;
    bool rs2 = act2(Gen::C, Gen::B, rsb) == GaussianRational(2L * (l + 2)) * (Poly::h() * rsb);
    add_check(r, "C^2.(rstar B) = -4(l+1)^2 rstar B", rs1);
    add_check(r, "CB.(rstar B) = 2(l+2)h rstar B", rs2);

    bool special_ok = true;
    SplitMix64 rng(0xa1fa5u);
    for (int t = 0; t < 6; ++t) {
        GaussianRational a1 = sample_scalar(rng), a2 = sample_scalar(rng);
        ModuleElement u = special_vector(lambda, a1, a2);
        if (u.is_zero()) continue;
        if (!(act2(Gen::C, Gen::C, u) == GaussianRational(-4L * n * n) * u)) special_ok = false;
        if (!(act2(Gen::C, Gen::B, u) == GaussianRational(2L * (n + 1)) * (Poly::h() * u)))
            special_ok = false;
    }
    add_check(r, "u(a1,a2) satisfies the eigen-relations", special_ok);

    add_check(r, "c_r_factor = -2n with C.r = c_r_factor rstar B",
              rp.c_r_factor == GaussianRational(-2L * n) &&
                  cr == ModuleElement(lambda, Poly(), rp.c_r_factor * rp.rstar));
    return r;
}

SuiteReport suite_graded_simple(const GaussianRational& lambda, int deg) {
    ProbeReport probe = graded_simplicity_probe(lambda, deg);
    SuiteReport r{"graded-simple", lambda, deg, {}};
    for (const auto& c : probe.checks) r.checks.push_back({c.name, c.pass, c.detail});
    return r;
}

SuiteReport suite_no_z_grading(const GaussianRational& lambda, int deg) {
    SuiteReport r{"no-z-grading", lambda, deg, {}};
    auto kernel = x_kernel_truncated(lambda, deg);
    add_check(r, "truncated x-kernel is empty (no highest vector)", kernel.empty(),
              kernel.empty() ? "" : kernel.front().str());
    SplitMix64 rng(0x40053u);
    bool nonzero = true;
    for (int t = 0; t < 20; ++t) {
        ModuleElement m = sample_element(rng, lambda, deg);
        if (act_generator(Gen::X, m).is_zero()) nonzero = false;
    }
    add_check(r, "x.m != 0 for sampled nonzero m", nonzero);
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"brackets",   "casimir", "grading",
                                                "simplicity", "maximality", "rpoly",
                                                "graded-simple", "no-z-grading"};
    return names;
}

SuiteReport run_suite(const std::string& name, const GaussianRational& lambda, int degree) {
    int deg = degree;
    auto fallback = [&](int d) { return deg > 0 ? deg : d; };
    if (name == "brackets") return suite_brackets(lambda, fallback(12));
    if (name == "casimir") return suite_casimir(lambda, fallback(8));
    if (name == "grading") return suite_grading(lambda, fallback(6));
    if (name == "simplicity") return suite_simplicity(lambda, fallback(8));
    if (name == "maximality") return suite_maximality(lambda, fallback(8));
    if (name == "rpoly") return suite_rpoly(lambda, fallback(8));
    if (name == "graded-simple") return suite_graded_simple(lambda, fallback(6));
    if (name == "no-z-grading") return suite_no_z_grading(lambda, fallback(8));
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace sl2lab
