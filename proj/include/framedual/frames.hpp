#pragma once

#include <string>
#include <vector>

#include "framedual/numeric.hpp"

namespace framedual {

// Finite indexed family of vectors in C^dim. Order matters: analysis rows,
// Gram indices and cross-range comparisons all follow the stored order.
struct VectorSystem {
    Index dim = 0;
    std::vector<ComplexVector> vectors;
    std::vector<std::string> labels;  // optional; parallel to vectors when non-empty

    Index size() const { return static_cast<Index>(vectors.size()); }

    // Validates: dim >= 1, at least one vector, every vector of length dim,
    // labels (if given) parallel. Errors: DimensionMismatch.
    static VectorSystem make(Index dim, std::vector<ComplexVector> vectors,
                             std::vector<std::string> labels = {});
};

struct FrameReport {
    double lower_bound = 0.0;  // A: smallest spectral value of S on the span
    double upper_bound = 0.0;  // B: largest
    Index span_dim = 0;
    bool is_complete = false;
    bool is_frame = false;
    bool is_tight = false;
    bool is_parseval = false;
    bool is_riesz_sequence = false;
    bool is_orthogonal = false;
    double riesz_lower = 0.0;  // smallest Gram eigenvalue (0 when rank-deficient)
    double riesz_upper = 0.0;  // largest Gram eigenvalue
};

// n x d matrix whose k-th row is the conjugate transpose of vector k, so that
// (analysis_matrix(sys) * x)(k) = <x, x_k>.
ComplexMatrix analysis_matrix(const VectorSystem& sys);

// S = sum_k x_k x_k^*, i.e. analysis^adjoint * analysis. Exactly Hermitian.
ComplexMatrix frame_operator(const VectorSystem& sys);

// Gram = analysis * analysis^adjoint; entry (i,j) = <x_j, x_i>.
ComplexMatrix gram_matrix(const VectorSystem& sys);

// Frame/Riesz classification. Frame bounds are eigenvalues of S restricted to
// the span; Riesz bounds are Gram eigenvalues. Tightness at 1e-9 relative,
// Parseval additionally |A-1| <= 1e-9, orthogonality via off-diagonal Gram
// entries <= 1e-10 * max diagonal (zero vectors disqualify orthogonal/Riesz).
FrameReport classify(const VectorSystem& sys);

// S^{-1} x restricted to the span of the system. Errors: NotAFrame when the
// system spans nothing, or x has a component outside the span.
ComplexVector canonical_dual(const VectorSystem& sys, const ComplexVector& x);

// Applies S^{-1/2} (inverted on the span) to every vector; the result is a
// Parseval frame for the span and has the same analysis range.
VectorSystem canonical_parseval(const VectorSystem& sys);

// Mixed operator Theta_a^adjoint * Theta_b = sum_k x_k^a (x_k^b)^*. Zero iff
// the analysis ranges are orthogonal in l^2 over the shared index set.
ComplexMatrix cross_operator(const VectorSystem& a, const VectorSystem& b);

// True iff range(Theta_a) is orthogonal to range(Theta_b) in l^2(index):
// max |cross_operator entry| <= 1e-9 * (1 + max-norm product).
// Errors: IndexMismatch when the systems have different lengths.
bool ranges_orthogonal(const VectorSystem& a, const VectorSystem& b);

}  // namespace framedual
