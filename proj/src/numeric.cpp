#include "framedual/numeric.hpp"

#include <Eigen/SVD>

namespace framedual::numeric {

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermitian_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

namespace {

void require_square(const ComplexMatrix& m, const char* where) {
    if (m.rows() != m.cols())
        throw Error("NotSquare", std::string(where) + ": matrix is " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_hermitian(const ComplexMatrix& m, const char* where) {
    const double defect = hermitian_defect(m);
    const double bound = 1e-12 * (1.0 + max_abs(m));
    if (defect > bound)
        throw Error("NotHermitian", std::string(where) + ": deviation " + std::to_string(defect) +
                                        " exceeds " + std::to_string(bound));
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m) {
    require_square(m, "hermitian_eig");
    require_hermitian(m, "hermitian_eig");
    // Symmetrize before solving so roundoff in the input cannot leak into
    // complex eigenvalue parts.
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw Error("NotHermitian", "hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix nullspace(const ComplexMatrix& m, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw Error("InvalidTolerance", "nullspace: rel_tol must lie in (0,1)");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();  // descending
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * smax) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

ComplexVector solve_psd(const ComplexMatrix& s, const ComplexVector& b, double rel_tol) {
    if (s.rows() != b.size())
        throw Error("DimensionMismatch", "solve_psd: matrix rows " + std::to_string(s.rows()) +
                                             " vs vector size " + std::to_string(b.size()));
    const EigResult eig = hermitian_eig(s);
    const double lmax = eig.eigenvalues.size() > 0 ? eig.eigenvalues.maxCoeff() : 0.0;
    const double lmin = eig.eigenvalues.size() > 0 ? eig.eigenvalues.minCoeff() : 0.0;
    if (lmax <= 0.0 || lmin <= rel_tol * lmax)
        throw Error("Singular", "solve_psd: eigenvalue range [" + std::to_string(lmin) + ", " +
                                    std::to_string(lmax) + "] is not positive definite");
    const ComplexVector coeffs = eig.eigenvectors.adjoint() * b;
    const ComplexVector scaled =
        (coeffs.array() / eig.eigenvalues.cast<cd>().array()).matrix();
    return eig.eigenvectors * scaled;
}

ComplexMatrix range_projector(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > kRankRelTol * smax) ++rank;
    const ComplexMatrix u = svd.matrixU().leftCols(rank);
    return u * u.adjoint();
}

}  // namespace framedual::numeric
