#include "ewit/tensor.hpp"

#include <algorithm>

namespace ewit {

namespace {

void check_square(const Mat& m, const DimensionVector& dims) {
  if (m.rows() != m.cols()) throw DimensionError("operator must be square");
  if (m.rows() != dims.total())
    throw DimensionError("operator dimension " + std::to_string(m.rows()) +
                         " does not match dims product " + std::to_string(dims.total()));
}

std::vector<int> sorted_unique(std::vector<int> v, const DimensionVector& dims, const char* what) {
  dims.check_parties(v);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw DimensionError(std::string(what) + ": repeated subsystem index");
  return v;
}

}  // namespace

Mat tensor_product(const Mat& a, const Mat& b, int max_dim) {
  if (a.size() == 0 || b.size() == 0) throw DimensionError("tensor_product: empty factor");
  const long rows = static_cast<long>(a.rows()) * b.rows();
  const long cols = static_cast<long>(a.cols()) * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw OversizedError("tensor_product: result dimension " + std::to_string(std::max(rows, cols)) +
                         " exceeds limit " + std::to_string(max_dim));
  return kernels::tensor_product(a, b);
}

Mat partial_trace(const Mat& m, const DimensionVector& dims, std::vector<int> keep) {
  check_square(m, dims);
  if (keep.empty()) throw DimensionError("partial_trace: keep set must be nonempty");
  keep = sorted_unique(std::move(keep), dims, "partial_trace");
  return kernels::partial_trace(m, dims, keep);
}

Mat partial_transpose(const Mat& m, const DimensionVector& dims, std::vector<int> transposed) {
  check_square(m, dims);
  transposed = sorted_unique(std::move(transposed), dims, "partial_transpose");
  if (transposed.empty()) return m;
  return kernels::partial_transpose(m, dims, transposed);
}

Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm) {
  check_square(m, dims);
  if (static_cast<int>(perm.size()) != dims.parties())
    throw DimensionError("permute_subsystems: permutation length mismatch");
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    dims.check_parties({p});
    if (seen[static_cast<size_t>(p)]++) throw DimensionError("permute_subsystems: not a permutation");
  }
  return kernels::permute_subsystems(m, dims, perm);
}

Eigensystem hermitian_eigensystem(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_eigensystem: matrix must be square");
  const double dev = hermiticity_deviation(m);
  if (dev > kHermitianTol) throw ValidationError("hermitian", dev);
  Mat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericalError("hermitian_eigensystem: iteration failed");
  return Eigensystem{es.eigenvalues(), es.eigenvectors()};
}

double min_eigenvalue(const Mat& hermitian) {
  if (hermitian.rows() != hermitian.cols())
    throw DimensionError("min_eigenvalue: matrix must be square");
  Mat sym = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("min_eigenvalue: iteration failed");
  return es.eigenvalues()(0);
}

SchmidtDecomposition schmidt_decompose(const Vec& psi, const DimensionVector& dims) {
  if (dims.parties() != 2) throw DimensionError("schmidt_decompose: exactly two subsystems required");
  if (psi.size() != dims.total()) throw DimensionError("schmidt_decompose: vector length mismatch");
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-9) throw ValidationError("normalized", std::abs(n - 1.0));
  const int da = dims.dim(0), db = dims.dim(1);
  Mat c(da, db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) c(a, b) = psi(static_cast<long>(a) * db + b);
  Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left_vectors = svd.matrixU();
  out.right_vectors = svd.matrixV().conjugate();
  return out;
}

}  // namespace ewit
