#include <doctest.h>

#include "sl2lab/module.hpp"
#include "sl2lab/verify.hpp"
#include "support.hpp"

using namespace sl2lab;

namespace {
const GaussianRational kZero(0);
const GaussianRational kOne(1);
const GaussianRational kTwo(2);
const GaussianRational kI = GaussianRational::i();

Poly P(std::vector<long> coeffs) {
    std::vector<GaussianRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}
}  // namespace

TEST_CASE("mu examples") {
    CHECK(mu(kTwo).value == GaussianRational(8));
    CHECK(mu(kZero).value == GaussianRational());
    CHECK(mu(kI).value == GaussianRational(Rational(-1), Rational(2)));
}

TEST_CASE("generator action examples") {
    ModuleElement one(kTwo, Poly(1L), Poly());
    CHECK(act_generator(Gen::C, one).is_zero());

    ModuleElement h_elt(kTwo, Poly::h(), Poly());
    CHECK(act_generator(Gen::C, h_elt) == ModuleElement(kTwo, Poly(), Poly(-2L)));

    ModuleElement b_elt(kTwo, Poly(), Poly(1L));
    CHECK(act_generator(Gen::B, b_elt) == ModuleElement(kTwo, P({8, 0, -1}), Poly()));

    // h acts coefficientwise
    ModuleElement m(kTwo, P({1, 2}), P({0, 3}));
    CHECK(act_generator(Gen::H, m) == ModuleElement(kTwo, P({0, 1, 2}), P({0, 0, 3})));
}

TEST_CASE("composed actions reproduce the low-degree displays") {
    for (const GaussianRational& lam : {kZero, kOne, kTwo, kI}) {
        GaussianRational mu_v = mu_value(lam);
        ModuleElement h_elt(lam, Poly::h(), Poly());
        CHECK(act_word({Gen::C, Gen::C}, h_elt) == ModuleElement(lam, P({0, -4}), Poly()));
        Poly cb_expect = P({0, 0, 4}) - Poly(GaussianRational(2) * mu_v);
        CHECK(act_word({Gen::C, Gen::B}, h_elt) == ModuleElement(lam, cb_expect, Poly()));

        // C^2.(h^2 + b1 h + b0) = -16h^2 - 4 b1 h + 8 mu
        GaussianRational b1(3), b0(-5);
        Poly f = Poly::monomial(2) + Poly::monomial(1, b1) + Poly(b0);
        Poly expect = Poly::monomial(2, GaussianRational(-16)) +
                      Poly::monomial(1, GaussianRational(-4) * b1) +
                      Poly(GaussianRational(8) * mu_v);
        CHECK(act_word({Gen::C, Gen::C}, ModuleElement(lam, f, Poly())) ==
              ModuleElement(lam, expect, Poly()));
    }
}

TEST_CASE("act_nf on the degree-reduction operators") {
    PauliNF c2 = normalize_pauli(ExprSum::word({Gen::C, Gen::C}), kTwo);
    PauliNF cb = normalize_pauli(ExprSum::word({Gen::C, Gen::B}), kTwo);
    ModuleElement h_elt(kTwo, Poly::h(), Poly());
    CHECK(act_nf(c2, h_elt) == ModuleElement(kTwo, P({0, -4}), Poly()));
    CHECK(act_nf(cb, h_elt) == ModuleElement(kTwo, P({-16, 0, 4}), Poly()));

    PauliNF c2_other = normalize_pauli(ExprSum::word({Gen::C, Gen::C}), kOne);
    CHECK_THROWS_AS(act_nf(c2_other, h_elt), ParameterMismatchError);
}

TEST_CASE("act_nf factors through normalization") {
    SplitMix64 rng(123);
    for (int t = 0; t < 40; ++t) {
        GaussianRational lam = t % 2 == 0 ? kTwo : kI;
        std::vector<Gen> w = sample_word(rng, 5);
        ModuleElement m = sample_element(rng, lam, 6);
        PauliNF nf = normalize_pauli(ExprSum::word(w), lam);
        CHECK(act_nf(nf, m) == act_word(w, m));
    }
}

TEST_CASE("act_nf is an algebra action") {
    SplitMix64 rng(124);
    for (int t = 0; t < 25; ++t) {
        GaussianRational lam = t % 2 == 0 ? kOne : kI;
        PauliNF u = normalize_pauli(ExprSum::word(sample_word(rng, 4)), lam);
        PauliNF v = normalize_pauli(ExprSum::word(sample_word(rng, 4)), lam);
        ModuleElement m = sample_element(rng, lam, 5);
        CHECK(act_nf(nf_multiply(u, v), m) == act_nf(u, act_nf(v, m)));
    }
}

TEST_CASE("bracket compatibility on sampled elements") {
    SplitMix64 rng(125);
    for (const GaussianRational& lam : {kZero, kOne, kTwo, GaussianRational(-2),
                                        GaussianRational(Rational(1, 2)), kI}) {
        for (int t = 0; t < 15; ++t) {
            ModuleElement m = sample_element(rng, lam, 12);
            auto act2 = [&](Gen a, Gen b) { return act_generator(a, act_generator(b, m)); };
            CHECK(act2(Gen::B, Gen::C) - act2(Gen::C, Gen::B) ==
                  GaussianRational(-2) * act_generator(Gen::H, m));
            CHECK(act2(Gen::H, Gen::B) - act2(Gen::B, Gen::H) ==
                  GaussianRational(2) * act_generator(Gen::C, m));
            CHECK(act2(Gen::H, Gen::C) - act2(Gen::C, Gen::H) ==
                  GaussianRational(2) * act_generator(Gen::B, m));
            CHECK(act2(Gen::X, Gen::Y) - act2(Gen::Y, Gen::X) == act_generator(Gen::H, m));
        }
    }
}

TEST_CASE("casimir scalar check") {
    CHECK(casimir_scalar_check(ModuleElement(kTwo, P({0, 0, 0, 1}), Poly::h())) ==
          GaussianRational(9));
    CHECK(casimir_scalar_check(ModuleElement(kZero, Poly(1L), Poly())) == GaussianRational(1));
    GaussianRational half{Rational(1, 2)};
    CHECK(casimir_scalar_check(ModuleElement(half, Poly::h(), Poly(1L))) ==
          GaussianRational(Rational(9, 4)));
    CHECK_THROWS_AS(casimir_scalar_check(ModuleElement::zero(kTwo)), DomainError);

    SplitMix64 rng(130);
    for (const GaussianRational& lam : {kZero, kOne, kTwo, GaussianRational(-2),
                                        GaussianRational(4), half, kI}) {
        for (int t = 0; t < 10; ++t)
            CHECK(casimir_scalar_check(sample_element(rng, lam, 8)) == casimir_scalar(lam));
    }
}

TEST_CASE("torsion-freeness witness") {
    SplitMix64 rng(126);
    for (int t = 0; t < 30; ++t) {
        Poly p = sample_poly(rng, 5);
        if (p.is_zero()) continue;
        ModuleElement m = sample_element(rng, kTwo, 6);
        CHECK(!(p * m).is_zero());
    }
}

TEST_CASE("Z2^2 split of module elements") {
    auto s1 = z2sq_split(ModuleElement(kTwo, P({0, 1, 1}), Poly()));
    REQUIRE(s1.size() == 2);
    CHECK(s1.at(GradeLabel::z2sq(0, 0)) == ModuleElement(kTwo, P({0, 0, 1}), Poly()));
    CHECK(s1.at(GradeLabel::z2sq(1, 0)) == ModuleElement(kTwo, Poly::h(), Poly()));

    auto s2 = z2sq_split(ModuleElement(kTwo, Poly(), Poly(1L)));
    REQUIRE(s2.size() == 1);
    CHECK(s2.begin()->first == GradeLabel::z2sq(0, 1));

    auto s3 = z2sq_split(ModuleElement(kTwo, Poly(1L), Poly::h()));
    REQUIRE(s3.size() == 2);
    CHECK(s3.at(GradeLabel::z2sq(0, 0)) == ModuleElement(kTwo, Poly(1L), Poly()));
    CHECK(s3.at(GradeLabel::z2sq(1, 1)) == ModuleElement(kTwo, Poly(), Poly::h()));

    SplitMix64 rng(127);
    for (int t = 0; t < 20; ++t) {
        ModuleElement m = sample_element(rng, kI, 7);
        ModuleElement sum = ModuleElement::zero(kI);
        for (const auto& [lab, comp] : z2sq_split(m)) sum += comp;
        CHECK(sum == m);
    }
}

TEST_CASE("grading compatibility of the action") {
    SplitMix64 rng(128);
    for (int t = 0; t < 30; ++t) {
        int l = static_cast<int>(rng.below(3)), mm = static_cast<int>(rng.below(2));
        int k = static_cast<int>(rng.below(3)), km = static_cast<int>(rng.below(4));
        bool on_b = rng.below(2) == 1;
        PauliNF u(kTwo);
        u.add_term(l, mm, Poly::monomial(k));
        ModuleElement m(kTwo, on_b ? Poly() : Poly::monomial(km),
                        on_b ? Poly::monomial(km) : Poly());
        GradeLabel expect = GradeLabel::z2sq(k + mm, l + mm) + GradeLabel::z2sq(km, on_b ? 1 : 0);
        for (const auto& [lab, comp] : z2sq_split(act_nf(u, m))) CHECK(lab == expect);
    }
}

TEST_CASE("x kernel is empty at every truncation") {
    CHECK(x_kernel_truncated(kZero, 0).empty());
    CHECK(x_kernel_truncated(kOne, 6).empty());
    CHECK(x_kernel_truncated(kTwo, 8).empty());
    CHECK(x_kernel_truncated(kI, 5).empty());
    // sanity of the machinery: x.m is nonzero on nonzero elements
    SplitMix64 rng(129);
    for (int t = 0; t < 20; ++t) {
        ModuleElement m = sample_element(rng, kOne, 6);
        CHECK(!act_generator(Gen::X, m).is_zero());
    }
}

TEST_CASE("module element text form") {
    CHECK(ModuleElement(kTwo, P({-4, 0, 1}), Poly()).str() == "h^2 - 4 ; 0");
    CHECK(ModuleElement(kTwo, Poly(), Poly(-2L)).str() == "0 ; -2");
}
