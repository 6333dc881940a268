#pragma once

#include <string>
#include <vector>

#include "sl2lab/module.hpp"

namespace sl2lab {

/// The unique monic eigen-polynomials attached to an even integer lambda:
/// r of degree n and rstar of degree n-1, with C.r = c_r_factor * rstar * B
/// and c_r_factor = -2n.
struct RPolyResult {
    int n = 0;
    Poly r;
    Poly rstar;
    GaussianRational c_r_factor;
};

enum class SubmoduleId { Zero, Full, N, P, Q };

std::string submodule_name(SubmoduleId id);

/// Join in the submodule lattice Zero < P,Q < N < Full with P v Q = N.
SubmoduleId lattice_join(SubmoduleId a, SubmoduleId b);

struct ReductionStep {
    PauliNF op;
    std::string description;
    ModuleElement after;  // element obtained by applying op
};

/// Replayable audit trail of one cyclic reduction: applying the step
/// operators to `initial` in order reproduces `terminal` exactly.
struct ReductionCertificate {
    ModuleElement initial;
    std::vector<ReductionStep> steps;
    ModuleElement terminal;

    ModuleElement replay() const;
    bool replay_ok() const;
};

struct ClassifyOutcome {
    SubmoduleId verdict = SubmoduleId::Zero;
    std::vector<ReductionCertificate> certificates;  // one per nonzero generator
};

/// n = -lambda/2 for lambda < 0, (lambda+2)/2 for lambda >= 0.
/// Requires lambda in 2Z; checks mu = 4(n^2 - n).
int rank2_n(const GaussianRational& lambda);

/// Solve the eigen-relations C^2.r = -4n^2 r, CB.r = 2(n+1)h r exactly
/// over the n+1 coefficients; the monic solution is unique, anything
/// else raises InternalInconsistencyError.
RPolyResult compute_r(const GaussianRational& lambda);

/// alpha1*r + alpha2*(C.r).
ModuleElement special_vector(const GaussianRational& lambda, const GaussianRational& alpha1,
                             const GaussianRational& alpha2);

/// Classify the submodule generated by gens, replaying the degree-reduction
/// proofs; the reduction verdict is cross-checked against the membership
/// characterization.
ClassifyOutcome classify_generated(const GaussianRational& lambda,
                                   const std::vector<ModuleElement>& gens);

/// Membership in N, P or Q by exact polynomial division:
/// (F, G) in N iff r | F and rstar | G; in P iff F = f r and G = -i f rstar;
/// in Q with +i.
bool membership(const GaussianRational& lambda, const ModuleElement& m, SubmoduleId which);

/// dim of M/N = 2n - 1; cross-checked against deg r + deg rstar + 1.
int quotient_dim(const GaussianRational& lambda);

struct ProbeCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ProbeReport {
    GaussianRational lambda;
    int sample_degree = 0;
    std::vector<ProbeCheck> checks;
    bool passed() const;
};

/// Sweep nonzero elements of N with component degrees <= sample_degree:
/// every nonzero homogeneous component must classify to N (never P or Q),
/// and the generators of P, Q must be non-homogeneous.
ProbeReport graded_simplicity_probe(const GaussianRational& lambda, int sample_degree);

}  // namespace sl2lab
