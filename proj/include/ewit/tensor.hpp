#ifndef EWIT_TENSOR_HPP
#define EWIT_TENSOR_HPP

#include "ewit/kernels.hpp"
#include "ewit/types.hpp"

namespace ewit {

inline constexpr double kHermitianTol = 1e-9;

// Kronecker product. Dimensions multiply; the result is rejected when the
// product dimension exceeds max_dim.
Mat tensor_product(const Mat& a, const Mat& b, int max_dim = kMaxDimension);

// Trace out every subsystem not listed in `keep`. Trace is preserved.
Mat partial_trace(const Mat& m, const DimensionVector& dims, std::vector<int> keep);

// Transpose the listed subsystems' indices only. Involution; preserves
// Hermiticity and trace of Hermitian inputs.
Mat partial_transpose(const Mat& m, const DimensionVector& dims, std::vector<int> transposed);

// Reorder subsystems; perm[k] names the old party placed at new slot k.
Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm);

struct Eigensystem {
  RVec eigenvalues;  // increasing
  Mat eigenvectors;  // orthonormal columns, matching order
};

// Dense Hermitian eigendecomposition. Input must be Hermitian within
// kHermitianTol (max entry deviation of m - m^dag).
Eigensystem hermitian_eigensystem(const Mat& m);

double min_eigenvalue(const Mat& hermitian);

struct SchmidtDecomposition {
  RVec coefficients;   // decreasing, sum of squares = 1
  Mat left_vectors;    // orthonormal columns on the first factor
  Mat right_vectors;   // orthonormal columns on the second factor
};

// Schmidt decomposition of a normalized bipartite vector (dims must hold
// exactly two subsystems; multipartite callers regroup into a bipartition
// first). Coefficients are the singular values of the d_A x d_B coefficient
// matrix C(a,b) = psi(a*d_B + b).
SchmidtDecomposition schmidt_decompose(const Vec& psi, const DimensionVector& dims);

}  // namespace ewit

#endif  // EWIT_TENSOR_HPP
