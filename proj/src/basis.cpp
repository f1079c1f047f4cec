#include "ewit/basis.hpp"

namespace ewit {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

std::vector<Mat> hermitian_basis(int dim) {
  if (dim < 2) throw DimensionError("hermitian_basis: dimension must be >= 2");
  std::vector<Mat> basis;
  basis.reserve(static_cast<size_t>(dim) * dim);
  basis.push_back(Mat::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      Mat sym = Mat::Zero(dim, dim);
      sym(j, k) = sym(k, j) = kInvSqrt2;
      basis.push_back(sym);
      Mat asym = Mat::Zero(dim, dim);
      asym(k, j) = cplx(0.0, kInvSqrt2);
      asym(j, k) = cplx(0.0, -kInvSqrt2);
      basis.push_back(asym);
    }
  for (int l = 1; l < dim; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    Mat d = Mat::Zero(dim, dim);
    for (int t = 0; t < l; ++t) d(t, t) = norm;
    d(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(d);
  }
  return basis;
}

RVec basis_expectations(const Vec& psi) {
  const int dim = static_cast<int>(psi.size());
  RVec a(static_cast<long>(dim) * dim);
  long idx = 0;
  a(idx++) = psi.squaredNorm() / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      const cplx z = std::conj(psi(j)) * psi(k);
      a(idx++) = 2.0 * kInvSqrt2 * z.real();
      a(idx++) = 2.0 * kInvSqrt2 * z.imag();
    }
  double prefix = 0.0;  // sum_{t<l} |psi_t|^2
  for (int l = 1; l < dim; ++l) {
    prefix += std::norm(psi(l - 1));
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    a(idx++) = norm * (prefix - static_cast<double>(l) * std::norm(psi(l)));
  }
  return a;
}

RVec basis_coefficients(const Mat& h) {
  const int dim = static_cast<int>(h.rows());
  if (h.cols() != dim) throw DimensionError("basis_coefficients: matrix must be square");
  RVec x(static_cast<long>(dim) * dim);
  long idx = 0;
  x(idx++) = h.trace().real() / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      // Tr(sym H) = sqrt(2) Re H_jk,  Tr(asym H) = -sqrt(2) Im H_jk  (H Hermitian)
      x(idx++) = 2.0 * kInvSqrt2 * h(j, k).real();
      x(idx++) = -2.0 * kInvSqrt2 * h(j, k).imag();
    }
  double prefix = 0.0;
  for (int l = 1; l < dim; ++l) {
    prefix += h(l - 1, l - 1).real();
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    x(idx++) = norm * (prefix - static_cast<double>(l) * h(l, l).real());
  }
  return x;
}

Mat operator_from_coefficients(const RVec& x, int dim) {
  if (x.size() != static_cast<long>(dim) * dim)
    throw DimensionError("operator_from_coefficients: coefficient count must be dim^2");
  Mat w = Mat::Zero(dim, dim);
  long idx = 0;
  const double id_coeff = x(idx++) / std::sqrt(static_cast<double>(dim));
  for (int t = 0; t < dim; ++t) w(t, t) = id_coeff;
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      const double xs = x(idx++);
      const double xa = x(idx++);
      const cplx off = kInvSqrt2 * cplx(xs, -xa);
      w(j, k) += off;
      w(k, j) += std::conj(off);
    }
  for (int l = 1; l < dim; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    const double xl = x(idx++);
    for (int t = 0; t < l; ++t) w(t, t) += xl * norm;
    w(l, l) -= xl * static_cast<double>(l) * norm;
  }
  return w;
}

}  // namespace ewit
