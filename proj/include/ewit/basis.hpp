#ifndef EWIT_BASIS_HPP
#define EWIT_BASIS_HPP

#include "ewit/types.hpp"

namespace ewit {

// Orthonormal Hermitian operator basis {B_i} of the D x D Hermitian matrices
// under the Hilbert-Schmidt inner product, Tr(B_i B_j) = delta_ij, with
// B_0 = I/sqrt(D). Enumeration order (fixed; the three routines below and
// hermitian_basis must agree):
//   index 0:                I/sqrt(D)
//   pairs (j,k), j<k, lexicographic; each pair contributes
//       (|j><k| + |k><j|)/sqrt(2)   then   (i|k><j| - i|j><k|)/sqrt(2)
//   l = 1..D-1:             (sum_{t<l} |t><t| - l|l><l|)/sqrt(l(l+1))
// Any Hermitian W expands uniquely as W = sum_i x_i B_i with real x.

std::vector<Mat> hermitian_basis(int dim);

// a_i = <psi|B_i|psi> for all D^2 basis elements (psi need not be normalized;
// values scale with |psi|^2).
RVec basis_expectations(const Vec& psi);

// x_i = Tr(B_i H) for Hermitian H.
RVec basis_coefficients(const Mat& h);

// W = sum_i x_i B_i.
Mat operator_from_coefficients(const RVec& x, int dim);

}  // namespace ewit

#endif  // EWIT_BASIS_HPP
