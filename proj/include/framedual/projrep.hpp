#pragma once

#include <vector>

#include "framedual/frames.hpp"
#include "framedual/multiplier.hpp"

namespace framedual {

// Projective unitary representation: pi(g) pi(h) = mu(g,h) pi(gh).
struct ProjectiveRep {
    FiniteGroup group;
    Multiplier multiplier;
    Index dim = 0;
    std::vector<ComplexMatrix> matrices;  // indexed by group element

    const ComplexMatrix& at(int g) const { return matrices[g]; }

    // Validates unitarity (1e-10) and the multiplication relation entrywise
    // (1e-10) over all pairs. Errors: DimensionMismatch, NotUnitary,
    // RelationViolation.
    static ProjectiveRep make(FiniteGroup group, Multiplier multiplier,
                              std::vector<ComplexMatrix> matrices);
};

enum class Side { left, right };

// Twisted regular representation on l^2(G) = C^order.
//   left:  lambda_g chi_h = mu(g,h) chi_{gh}                  (multiplier mu)
//   right: rho_g chi_h = conj(mu(hg^{-1},g)) chi_{hg^{-1}}    (multiplier conj mu)
// The two commute elementwise.
ProjectiveRep regular_representation(const FiniteGroup& group, const Multiplier& mu, Side side);

// Orbit systems. Union ordering is lexicographic in (vector index, group
// index); the direct-sum orbit stacks pi(g)xi_i into C^{k*dim}, indexed by g.
VectorSystem orbit(const ProjectiveRep& rep, const ComplexVector& xi);
VectorSystem orbit_union(const ProjectiveRep& rep, const std::vector<ComplexVector>& xis);
VectorSystem direct_sum_orbit(const ProjectiveRep& rep, const std::vector<ComplexVector>& xis);
ProjectiveRep direct_sum_rep(const ProjectiveRep& rep, int copies);

// Trace-orthonormal basis of an operator subspace: tr(B_i^* B_j) = delta_ij.
struct OperatorAlgebraBasis {
    Index ambient_dim = 0;
    std::vector<ComplexMatrix> basis;

    Index size() const { return static_cast<Index>(basis.size()); }
    // dim^2 x dim^2 orthogonal projector onto the vectorized span.
    ComplexMatrix span_projector() const;
};

// { A : AM = MA for every M in mats }, computed as the nullspace of the
// stacked maps A -> vec(AM - MA). The nullspace columns are orthonormal in
// the Frobenius inner product, so the returned basis is trace-orthonormal.
OperatorAlgebraBasis commutant_basis(const std::vector<ComplexMatrix>& mats);

// commutant of the commutant. In finite dimensions the weak-closure
// subtleties vanish: this is the linear span of the *-algebra generated by
// mats (with identity).
OperatorAlgebraBasis double_commutant_basis(const std::vector<ComplexMatrix>& mats);

struct CommutantPairReport {
    bool equal = false;
    double projector_distance = 0.0;  // spectral norm of the projector difference
    Index commutant_dim = 0;          // dim pi(G)'
    Index double_commutant_dim = 0;   // dim sigma(G)''
};

// True iff pi(G)' == sigma(G)'' as subspaces (projector distance <= 1e-8).
// Both representations must share the ambient dimension.
CommutantPairReport is_commutant_pair(const ProjectiveRep& pi, const ProjectiveRep& sigma);

// Canonical trace on pi(G)': A -> sum_i <A xi_i, xi_i> for a Parseval
// multi-frame vector (xi_1..xi_k). Independent of the choice of Parseval
// vector and tracial on the commutant.
struct TraceFunctional {
    std::vector<ComplexVector> vectors;
    double trace_of_identity = 0.0;

    cd operator()(const ComplexMatrix& a) const;
};

// Errors: NotParseval when the orbit union of the given vectors is not a
// Parseval frame for C^dim.
TraceFunctional trace_on_commutant(const ProjectiveRep& pi,
                                   const std::vector<ComplexVector>& parseval_vectors);

// Least-squares operator U in span(double_commutant_basis(pi)) minimizing
// |U xi - eta|. require() throws NoSolution when the residual exceeds
// tolerance * |eta|, which signals eta outside pi(G)'' xi.
struct ParametrizationResult {
    ComplexMatrix op;
    double residual = 0.0;
    double tolerance = 0.0;
    bool within_tolerance = false;

    const ComplexMatrix& require() const;
};

// Errors: NotParseval when the orbit of xi is not a Parseval frame for its
// span; DimensionMismatch.
ParametrizationResult find_parametrizing_operator(const ProjectiveRep& pi,
                                                  const ComplexVector& xi,
                                                  const ComplexVector& eta, double tol = 1e-8);

}  // namespace framedual
