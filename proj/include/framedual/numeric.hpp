#pragma once

#include <Eigen/Dense>
#include <complex>

#include "framedual/error.hpp"

namespace framedual {

using cd = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// <a,b> = sum_i a_i conj(b_i); linear in the first slot. Eigen's dot()
// conjugates its *left* operand, hence the swap.
inline cd inner(const ComplexVector& a, const ComplexVector& b) { return b.dot(a); }

namespace numeric {

// Relative cutoff below which singular/eigenvalues count as zero.
inline constexpr double kRankRelTol = 1e-10;

double max_abs(const ComplexMatrix& m);

// Largest entrywise deviation from Hermitian symmetry, max |M_ij - conj(M_ji)|.
double hermitian_defect(const ComplexMatrix& m);

struct EigResult {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // orthonormal columns, column i pairs with eigenvalue i
};

// Full spectral decomposition of a Hermitian matrix.
// Errors: NotSquare, NotHermitian (defect above 1e-12 * (1 + max_abs)).
EigResult hermitian_eig(const ComplexMatrix& m);

// Orthonormal basis, as columns, of { v : |Mv| <= rel_tol * sigma_max * |v| }.
// A full-column-rank matrix yields zero columns; the zero matrix yields a
// full orthonormal basis of the domain.
ComplexMatrix nullspace(const ComplexMatrix& m, double rel_tol = kRankRelTol);

// x = S^{-1} b for Hermitian positive definite S, via the spectral
// decomposition. Errors: NotSquare, NotHermitian, Singular (smallest
// eigenvalue at or below rel_tol times the largest), DimensionMismatch.
ComplexVector solve_psd(const ComplexMatrix& s, const ComplexVector& b,
                        double rel_tol = kRankRelTol);

// Projector onto the column space of m (numerical rank at kRankRelTol).
ComplexMatrix range_projector(const ComplexMatrix& m);

}  // namespace numeric
}  // namespace framedual
