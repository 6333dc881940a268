#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2lab/module.hpp"

namespace sl2lab {

/// Deterministic PRNG (splitmix64); identical streams on every platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

/// Small scalar pool used by the deterministic samplers.
GaussianRational sample_scalar(SplitMix64& rng);

/// Random polynomial of degree <= max_deg (possibly zero).
Poly sample_poly(SplitMix64& rng, int max_deg);

/// Random nonzero module element with component degrees <= max_deg.
ModuleElement sample_element(SplitMix64& rng, const GaussianRational& lambda, int max_deg);

/// Random word over {x, y, h, B, C} of length <= max_len.
std::vector<Gen> sample_word(SplitMix64& rng, int max_len);

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    GaussianRational lambda;
    int degree = 0;
    std::vector<SuiteCheck> checks;
    bool passed() const;
};

/// Named verification suites: brackets, casimir, grading, simplicity,
/// maximality, rpoly, graded-simple, no-z-grading. Each exercises one
/// invariant block at the given lambda and degree bound.
SuiteReport run_suite(const std::string& name, const GaussianRational& lambda, int degree);

const std::vector<std::string>& suite_names();

}  // namespace sl2lab
