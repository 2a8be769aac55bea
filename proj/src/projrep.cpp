#include "framedual/projrep.hpp"

#include <cmath>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace framedual {

namespace {

constexpr double kRepTol = 1e-10;
constexpr double kPairTol = 1e-8;
constexpr double kParsevalSpanTol = 1e-8;

ComplexVector vec(const ComplexMatrix& m) {
    return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index d) {
    return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

}  // namespace

ProjectiveRep ProjectiveRep::make(FiniteGroup group, Multiplier multiplier,
                                  std::vector<ComplexMatrix> matrices) {
    const int n = group.order;
    if (static_cast<int>(matrices.size()) != n)
        throw Error("DimensionMismatch", "ProjectiveRep: need one matrix per group element");
    if (multiplier.values.rows() != n)
        throw Error("DimensionMismatch", "ProjectiveRep: multiplier table size != group order");
    const Index d = matrices[0].rows();
    for (const auto& m : matrices)
        if (m.rows() != d || m.cols() != d)
            throw Error("DimensionMismatch", "ProjectiveRep: matrices must share a square shape");

    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (int g = 0; g < n; ++g)
        if (numeric::max_abs(matrices[g].adjoint() * matrices[g] - id) > kRepTol)
            throw Error("NotUnitary", "ProjectiveRep: matrix " + std::to_string(g) +
                                          " is not unitary");

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const ComplexMatrix expected = multiplier.at(g, h) * matrices[group.op(g, h)];
            if (numeric::max_abs(matrices[g] * matrices[h] - expected) > kRepTol)
                throw Error("RelationViolation",
                            "ProjectiveRep: pi(g)pi(h) != mu(g,h) pi(gh) at (" +
                                std::to_string(g) + "," + std::to_string(h) + ")");
        }

    ProjectiveRep rep{std::move(group), std::move(multiplier), d, std::move(matrices)};
    return rep;
}

ProjectiveRep regular_representation(const FiniteGroup& group, const Multiplier& mu, Side side) {
    const int n = group.order;
    std::vector<ComplexMatrix> mats;
    mats.reserve(n);
    for (int g = 0; g < n; ++g) {
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        for (int h = 0; h < n; ++h) {
            if (side == Side::left) {
                m(group.op(g, h), h) = mu.at(g, h);
            } else {
                const int hg = group.op(h, group.inverse(g));
                m(hg, h) = std::conj(mu.at(hg, g));
            }
        }
        mats.push_back(std::move(m));
    }
    // The right action twists by the conjugate multiplier.
    Multiplier effective = (side == Side::left) ? mu : mu.conjugated();
    return ProjectiveRep::make(group, std::move(effective), std::move(mats));
}

VectorSystem orbit(const ProjectiveRep& rep, const ComplexVector& xi) {
    if (xi.size() != rep.dim)
        throw Error("DimensionMismatch", "orbit: vector not in the representation space");
    std::vector<ComplexVector> vecs;
    vecs.reserve(rep.group.order);
    for (int g = 0; g < rep.group.order; ++g) vecs.push_back(rep.at(g) * xi);
    return VectorSystem::make(rep.dim, std::move(vecs));
}

VectorSystem orbit_union(const ProjectiveRep& rep, const std::vector<ComplexVector>& xis) {
    if (xis.empty()) throw Error("DimensionMismatch", "orbit_union: no vectors");
    std::vector<ComplexVector> vecs;
    vecs.reserve(xis.size() * rep.group.order);
    for (const auto& xi : xis) {
        if (xi.size() != rep.dim)
            throw Error("DimensionMismatch", "orbit_union: vector not in the rep space");
        for (int g = 0; g < rep.group.order; ++g) vecs.push_back(rep.at(g) * xi);
    }
    return VectorSystem::make(rep.dim, std::move(vecs));
}

VectorSystem direct_sum_orbit(const ProjectiveRep& rep, const std::vector<ComplexVector>& xis) {
    if (xis.empty()) throw Error("DimensionMismatch", "direct_sum_orbit: no vectors");
    const Index k = static_cast<Index>(xis.size());
    std::vector<ComplexVector> vecs;
    vecs.reserve(rep.group.order);
    for (int g = 0; g < rep.group.order; ++g) {
        ComplexVector stacked(k * rep.dim);
        for (Index i = 0; i < k; ++i) {
            if (xis[i].size() != rep.dim)
                throw Error("DimensionMismatch", "direct_sum_orbit: vector not in the rep space");
            stacked.segment(i * rep.dim, rep.dim) = rep.at(g) * xis[i];
        }
        vecs.push_back(std::move(stacked));
    }
    return VectorSystem::make(k * rep.dim, std::move(vecs));
}

ProjectiveRep direct_sum_rep(const ProjectiveRep& rep, int copies) {
    if (copies < 1) throw Error("DimensionMismatch", "direct_sum_rep: copies must be >= 1");
    std::vector<ComplexMatrix> mats;
    mats.reserve(rep.group.order);
    for (int g = 0; g < rep.group.order; ++g) {
        ComplexMatrix m = ComplexMatrix::Zero(copies * rep.dim, copies * rep.dim);
        for (int i = 0; i < copies; ++i)
            m.block(i * rep.dim, i * rep.dim, rep.dim, rep.dim) = rep.at(g);
        mats.push_back(std::move(m));
    }
    return ProjectiveRep::make(rep.group, rep.multiplier, std::move(mats));
}

ComplexMatrix OperatorAlgebraBasis::span_projector() const {
    const Index dd = ambient_dim * ambient_dim;
    ComplexMatrix v(dd, size());
    for (Index i = 0; i < size(); ++i) v.col(i) = vec(basis[i]);
    return v * v.adjoint();
}

OperatorAlgebraBasis commutant_basis(const std::vector<ComplexMatrix>& mats) {
    if (mats.empty()) throw Error("DimensionMismatch", "commutant_basis: no matrices given");
    const Index d = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != d || m.cols() != d)
            throw Error("DimensionMismatch", "commutant_basis: matrices must share a square shape");

    const Index dd = d * d;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    // vec(AM - MA) = (M^T kron I - I kron M) vec(A), column-major vec.
    ComplexMatrix stacked(static_cast<Index>(mats.size()) * dd, dd);
    for (Index i = 0; i < static_cast<Index>(mats.size()); ++i)
        stacked.middleRows(i * dd, dd) =
            Eigen::kroneckerProduct(mats[i].transpose(), id) - Eigen::kroneckerProduct(id, mats[i]);

    const ComplexMatrix null = numeric::nullspace(stacked);
    OperatorAlgebraBasis out;
    out.ambient_dim = d;
    out.basis.reserve(null.cols());
    for (Index j = 0; j < null.cols(); ++j) out.basis.push_back(unvec(null.col(j), d));
    return out;
}

OperatorAlgebraBasis double_commutant_basis(const std::vector<ComplexMatrix>& mats) {
    return commutant_basis(commutant_basis(mats).basis);
}

CommutantPairReport is_commutant_pair(const ProjectiveRep& pi, const ProjectiveRep& sigma) {
    if (pi.dim != sigma.dim)
        throw Error("DimensionMismatch", "is_commutant_pair: representations on different spaces");
    const OperatorAlgebraBasis comm = commutant_basis(pi.matrices);
    const OperatorAlgebraBasis dcomm = double_commutant_basis(sigma.matrices);
    const ComplexMatrix diff = comm.span_projector() - dcomm.span_projector();
    const numeric::EigResult eig = numeric::hermitian_eig(diff);
    CommutantPairReport report;
    report.projector_distance =
        eig.eigenvalues.size() > 0 ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    report.commutant_dim = comm.size();
    report.double_commutant_dim = dcomm.size();
    report.equal = report.projector_distance <= kPairTol;
    return report;
}

cd TraceFunctional::operator()(const ComplexMatrix& a) const {
    cd acc = 0.0;
    for (const auto& xi : vectors) acc += inner(a * xi, xi);
    return acc;
}

TraceFunctional trace_on_commutant(const ProjectiveRep& pi,
                                   const std::vector<ComplexVector>& parseval_vectors) {
    const FrameReport report = classify(orbit_union(pi, parseval_vectors));
    if (!report.is_parseval)
        throw Error("NotParseval",
                    "trace_on_commutant: orbit union is not a Parseval frame (bounds " +
                        std::to_string(report.lower_bound) + ", " +
                        std::to_string(report.upper_bound) + ")");
    TraceFunctional f;
    f.vectors = parseval_vectors;
    f.trace_of_identity = 0.0;
    for (const auto& xi : parseval_vectors) f.trace_of_identity += xi.squaredNorm();
    return f;
}

const ComplexMatrix& ParametrizationResult::require() const {
    if (!within_tolerance)
        throw Error("NoSolution", "parametrizing operator residual " + std::to_string(residual) +
                                      " exceeds tolerance " + std::to_string(tolerance));
    return op;
}

ParametrizationResult find_parametrizing_operator(const ProjectiveRep& pi,
                                                  const ComplexVector& xi,
                                                  const ComplexVector& eta, double tol) {
    if (xi.size() != pi.dim || eta.size() != pi.dim)
        throw Error("DimensionMismatch", "find_parametrizing_operator: vectors not in C^dim");
    const FrameReport report = classify(orbit(pi, xi));
    if (report.span_dim == 0 || std::abs(report.lower_bound - 1.0) > kParsevalSpanTol ||
        std::abs(report.upper_bound - 1.0) > kParsevalSpanTol)
        throw Error("NotParseval",
                    "find_parametrizing_operator: orbit of xi is not Parseval on its span");

    const OperatorAlgebraBasis alg = double_commutant_basis(pi.matrices);
    ComplexMatrix w(pi.dim, alg.size());
    for (Index j = 0; j < alg.size(); ++j) w.col(j) = alg.basis[j] * xi;
    const ComplexVector c = w.completeOrthogonalDecomposition().solve(eta);

    ComplexMatrix u = ComplexMatrix::Zero(pi.dim, pi.dim);
    for (Index j = 0; j < alg.size(); ++j) u += c(j) * alg.basis[j];

    ParametrizationResult result;
    result.op = std::move(u);
    result.residual = (result.op * xi - eta).norm();
    result.tolerance = tol;
    result.within_tolerance = result.residual <= tol * eta.norm();
    return result;
}

}  // namespace framedual
