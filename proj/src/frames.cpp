#include "framedual/frames.hpp"

#include <algorithm>
#include <cmath>

namespace framedual {

namespace {

constexpr double kTightRelTol = 1e-9;
constexpr double kOrthogonalRelTol = 1e-10;
constexpr double kRangeRelTol = 1e-9;
constexpr double kSpanMembershipRelTol = 1e-10;

}  // namespace

VectorSystem VectorSystem::make(Index dim, std::vector<ComplexVector> vectors,
                                std::vector<std::string> labels) {
    if (dim < 1)
        throw Error("DimensionMismatch", "VectorSystem: ambient dimension must be >= 1");
    if (vectors.empty())
        throw Error("DimensionMismatch", "VectorSystem: need at least one vector");
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw Error("DimensionMismatch", "VectorSystem: vector of length " +
                                                 std::to_string(v.size()) + " in C^" +
                                                 std::to_string(dim));
    if (!labels.empty() && labels.size() != vectors.size())
        throw Error("DimensionMismatch", "VectorSystem: labels not parallel to vectors");
    return {dim, std::move(vectors), std::move(labels)};
}

ComplexMatrix analysis_matrix(const VectorSystem& sys) {
    ComplexMatrix theta(sys.size(), sys.dim);
    for (Index k = 0; k < sys.size(); ++k) theta.row(k) = sys.vectors[k].adjoint();
    return theta;
}

ComplexMatrix frame_operator(const VectorSystem& sys) {
    ComplexMatrix s = ComplexMatrix::Zero(sys.dim, sys.dim);
    // rankUpdate keeps S exactly Hermitian; a plain sum of outer products
    // would pick up asymmetric roundoff.
    for (const auto& v : sys.vectors) s.selfadjointView<Eigen::Lower>().rankUpdate(v);
    return s.selfadjointView<Eigen::Lower>();
}

ComplexMatrix gram_matrix(const VectorSystem& sys) {
    const ComplexMatrix theta = analysis_matrix(sys);
    return theta * theta.adjoint();
}

FrameReport classify(const VectorSystem& sys) {
    FrameReport r;
    const Index n = sys.size();
    const ComplexMatrix s = frame_operator(sys);
    const numeric::EigResult eig = numeric::hermitian_eig(s);

    const double lmax = std::max(eig.eigenvalues.maxCoeff(), 0.0);
    const double tau = numeric::kRankRelTol * lmax;
    double lmin_span = 0.0;
    Index rank = 0;
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda > tau) {
            ++rank;
            // ascending order: the first eigenvalue above the cutoff is A
            if (lmin_span == 0.0) lmin_span = lambda;
        }
    }

    r.span_dim = rank;
    r.lower_bound = lmin_span;
    r.upper_bound = rank > 0 ? lmax : 0.0;
    r.is_complete = rank == sys.dim;
    r.is_frame = r.is_complete && rank > 0;
    r.is_tight = r.is_frame && (r.upper_bound - r.lower_bound) <= kTightRelTol * r.upper_bound;
    r.is_parseval = r.is_tight && std::abs(r.lower_bound - 1.0) <= kTightRelTol;

    // Gram and S share their nonzero spectrum, so the Riesz bounds follow
    // from the S eigenvalues plus the rank: the Gram is invertible iff the
    // system is linearly independent (rank == n). The spectral-equality
    // property test compares this against a direct Gram decomposition.
    r.riesz_upper = r.upper_bound;
    r.riesz_lower = (rank == n) ? lmin_span : 0.0;
    r.is_riesz_sequence = (rank == n) && rank > 0;

    const ComplexMatrix gram = gram_matrix(sys);
    double max_diag = 0.0;
    bool has_zero_vector = false;
    for (Index i = 0; i < n; ++i) {
        const double d = gram(i, i).real();
        max_diag = std::max(max_diag, d);
        if (d == 0.0) has_zero_vector = true;
    }
    double max_off = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) max_off = std::max(max_off, std::abs(gram(i, j)));
    r.is_orthogonal =
        max_diag > 0.0 && !has_zero_vector && max_off <= kOrthogonalRelTol * max_diag;
    return r;
}

ComplexVector canonical_dual(const VectorSystem& sys, const ComplexVector& x) {
    if (x.size() != sys.dim)
        throw Error("DimensionMismatch", "canonical_dual: vector not in C^dim");
    const ComplexMatrix s = frame_operator(sys);
    const numeric::EigResult eig = numeric::hermitian_eig(s);
    const double lmax = std::max(eig.eigenvalues.maxCoeff(), 0.0);
    const double tau = numeric::kRankRelTol * lmax;

    ComplexVector coeffs = eig.eigenvectors.adjoint() * x;
    ComplexVector solved = ComplexVector::Zero(coeffs.size());
    double outside_sq = 0.0;
    Index rank = 0;
    for (Index i = 0; i < coeffs.size(); ++i) {
        if (eig.eigenvalues(i) > tau) {
            solved(i) = coeffs(i) / eig.eigenvalues(i);
            ++rank;
        } else {
            outside_sq += std::norm(coeffs(i));
        }
    }
    if (rank == 0) throw Error("NotAFrame", "canonical_dual: system spans nothing");
    if (std::sqrt(outside_sq) > kSpanMembershipRelTol * (1.0 + x.norm()))
        throw Error("NotAFrame",
                    "canonical_dual: vector leaves the span and S is not invertible there");
    return eig.eigenvectors * solved;
}

VectorSystem canonical_parseval(const VectorSystem& sys) {
    const ComplexMatrix s = frame_operator(sys);
    const numeric::EigResult eig = numeric::hermitian_eig(s);
    const double lmax = std::max(eig.eigenvalues.maxCoeff(), 0.0);
    const double tau = numeric::kRankRelTol * lmax;

    RealVector inv_sqrt = RealVector::Zero(eig.eigenvalues.size());
    for (Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > tau) inv_sqrt(i) = 1.0 / std::sqrt(eig.eigenvalues(i));
    const ComplexMatrix root =
        eig.eigenvectors * inv_sqrt.cast<cd>().asDiagonal() * eig.eigenvectors.adjoint();

    std::vector<ComplexVector> out;
    out.reserve(sys.vectors.size());
    for (const auto& v : sys.vectors) out.push_back(root * v);
    return VectorSystem::make(sys.dim, std::move(out), sys.labels);
}

ComplexMatrix cross_operator(const VectorSystem& a, const VectorSystem& b) {
    if (a.size() != b.size())
        throw Error("IndexMismatch", "cross_operator: index sets of size " +
                                         std::to_string(a.size()) + " vs " +
                                         std::to_string(b.size()));
    ComplexMatrix m = ComplexMatrix::Zero(a.dim, b.dim);
    for (Index k = 0; k < a.size(); ++k) m += a.vectors[k] * b.vectors[k].adjoint();
    return m;
}

bool ranges_orthogonal(const VectorSystem& a, const VectorSystem& b) {
    const ComplexMatrix m = cross_operator(a, b);
    double na = 0.0, nb = 0.0;
    for (const auto& v : a.vectors) na = std::max(na, v.norm());
    for (const auto& v : b.vectors) nb = std::max(nb, v.norm());
    return numeric::max_abs(m) <= kRangeRelTol * (1.0 + na * nb);
}

}  // namespace framedual
