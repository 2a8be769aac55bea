#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "framedual/gabor.hpp"

namespace framedual {

// Outcome of one theorem check: named residuals and boolean flags plus the
// single pass verdict. Residuals are absolute; `tolerance` is the relative
// tolerance the verdict applied.
struct DualityVerdict {
    std::string check;
    std::map<std::string, double> residuals;
    std::map<std::string, bool> flags;
    double tolerance = 1e-8;
    bool passed = false;
    std::uint64_t seed = 0;  // seed of any randomized witness, 0 when none
};

// Two projective representations on the same space with pi(G)' = sigma(G)''
// plus a frame vector on the pi side and a Riesz-sequence vector on the
// sigma side. trace_identity is Tr(I) of the canonical trace on pi(G)'.
//
// In finite dimensions every vector is a Bessel vector of every system, so
// the Bessel-set equality required of a dual pair holds identically and is
// not computed.
struct DualPair {
    ProjectiveRep pi;
    ProjectiveRep sigma;
    double trace_identity = 0.0;
    CommutantPairReport pair_report;
    std::uint64_t witness_seed = 0;
};

// Validates the pair: shared dimension, commutant-pair equality (projector
// distance <= 1e-8), witness vector generating a frame under pi and a Riesz
// sequence under sigma, and |trace_identity - |S^{-1/2}witness|^2| <= 1e-8
// relative. Errors: InvalidPair.
DualPair make_dual_pair(ProjectiveRep pi, ProjectiveRep sigma, const ComplexVector& witness,
                        double trace_identity, std::uint64_t witness_seed = 0);

// Gabor pair (pi_Lambda, pi_{Lambda_adjoint}); trace identity L/|Lambda|.
// Frame witness searched over seeded random windows. Errors: DensityTooLow
// when |Lambda| < L, InvalidPair.
DualPair gabor_dual_pair(const ZLattice& lattice);

// Twisted left/right regular pair on l^2(G); trace identity 1, witness chi_e.
DualPair regular_dual_pair(const FiniteGroup& group, const Multiplier& mu);

// Frame <-> Riesz duality for the orbit of xi: {pi(g)xi} frame iff
// {sigma(g)xi} Riesz sequence, tight frame iff orthogonal sequence. Both
// biconditionals must hold. xi = 0 passes vacuously with all flags false.
DualityVerdict check_duality_principle(const DualPair& pair, const ComplexVector& xi,
                                       double tol = 1e-8);

// Biorthogonality: <sigma(g)xi, S^{-1}xi> = Tr(I) delta_{g,e}, with the
// cross-check Tr(I) = |S^{-1/2}xi|^2. Errors: NotAFrame when the pi-orbit of
// xi is not a frame.
DualityVerdict check_wexler_raz(const DualPair& pair, const ComplexVector& xi, double tol = 1e-8);

// Fundamental identity: sum_g <f, pi(g)gw> <pi(g)h, kv> equals
// Tr(I)^{-1} sum_g <f, sigma(g)kv> <sigma(g)h, gw>. No frame assumption.
DualityVerdict check_figa(const DualPair& pair, const ComplexVector& f, const ComplexVector& gw,
                          const ComplexVector& h, const ComplexVector& kv, double tol = 1e-8);

// Super-frame duality: the orbit of the stacked vector (xi_1,..,xi_k) under
// pi^(k) is a frame for C^{k dim} iff the union of sigma-orbits is a Riesz
// sequence.  The componentwise formulation (each orbit a frame, analysis
// ranges pairwise orthogonal) is strictly stronger for non-tight tuples; it
// is computed too, asserted only as a one-way implication, and its agreement
// with the direct-sum form is reported in flags["formulations_agree"].
DualityVerdict check_superframe(const DualPair& pair, const std::vector<ComplexVector>& xis,
                                double tol = 1e-8);

// Multi-frame duality: union of pi-orbits is a frame for C^dim iff the
// sigma^(k)-orbit of the stacked vector is a Riesz sequence in C^{k dim}.
DualityVerdict check_multiframe(const DualPair& pair, const std::vector<ComplexVector>& xis,
                                double tol = 1e-8);

}  // namespace framedual
