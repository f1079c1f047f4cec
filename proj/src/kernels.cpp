#include "ewit/kernels.hpp"

#include <cstdint>

namespace ewit {

std::vector<long> subset_offsets(const DimensionVector& dims, const std::vector<int>& parties) {
  // full-space strides, leftmost party most significant
  const int n = dims.parties();
  std::vector<long> stride(static_cast<size_t>(n));
  long s = 1;
  for (int p = n - 1; p >= 0; --p) {
    stride[static_cast<size_t>(p)] = s;
    s *= dims.dim(p);
  }
  long local = subset_dim(dims, parties);
  std::vector<long> off(static_cast<size_t>(local), 0);
  // odometer over the subset digits, leftmost listed party most significant
  std::vector<int> digit(parties.size(), 0);
  for (long t = 0; t < local; ++t) {
    long o = 0;
    for (size_t k = 0; k < parties.size(); ++k)
      o += digit[k] * stride[static_cast<size_t>(parties[k])];
    off[static_cast<size_t>(t)] = o;
    for (size_t k = parties.size(); k-- > 0;) {
      if (++digit[k] < dims.dim(parties[k])) break;
      digit[k] = 0;
    }
  }
  return off;
}

long subset_dim(const DimensionVector& dims, const std::vector<int>& parties) {
  long d = 1;
  for (int p : parties) d *= dims.dim(p);
  return d;
}

std::vector<int> complement_parties(const DimensionVector& dims, const std::vector<int>& parties) {
  std::vector<int> comp;
  size_t k = 0;
  for (int p = 0; p < dims.parties(); ++p) {
    if (k < parties.size() && parties[k] == p) {
      ++k;
    } else {
      comp.push_back(p);
    }
  }
  return comp;
}

double hermiticity_deviation(const Mat& m) {
  double dev = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

bool all_finite(const Mat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

}  // namespace ewit

namespace ewit::kernels {

Mat tensor_product(const Mat& a, const Mat& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Mat out(ra * rb, ca * cb);
#pragma omp parallel for collapse(2) schedule(static)
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index k = 0; k < rb; ++k)
      for (Eigen::Index j = 0; j < ca; ++j) {
        const cplx aij = a(i, j);
        for (Eigen::Index l = 0; l < cb; ++l)
          out(i * rb + k, j * cb + l) = aij * b(k, l);
      }
  return out;
}

Mat partial_trace(const Mat& m, const DimensionVector& dims, const std::vector<int>& keep) {
  const std::vector<int> traced = complement_parties(dims, keep);
  const std::vector<long> offK = subset_offsets(dims, keep);
  const std::vector<long> offT = subset_offsets(dims, traced);
  const long dk = static_cast<long>(offK.size());
  const long dt = static_cast<long>(offT.size());
  Mat out(dk, dk);
#pragma omp parallel for collapse(2) schedule(static)
  for (long a = 0; a < dk; ++a)
    for (long b = 0; b < dk; ++b) {
      cplx s(0.0, 0.0);
      for (long x = 0; x < dt; ++x) s += m(offK[a] + offT[x], offK[b] + offT[x]);
      out(a, b) = s;
    }
  return out;
}

Mat partial_transpose(const Mat& m, const DimensionVector& dims, const std::vector<int>& transposed) {
  const std::vector<int> rest = complement_parties(dims, transposed);
  const std::vector<long> offT = subset_offsets(dims, transposed);
  const std::vector<long> offR = subset_offsets(dims, rest);
  const long dt = static_cast<long>(offT.size());
  const long dr = static_cast<long>(offR.size());
  Mat out(dims.total(), dims.total());
#pragma omp parallel for collapse(2) schedule(static)
  for (long ti = 0; ti < dt; ++ti)
    for (long ri = 0; ri < dr; ++ri) {
      const long row = offT[ti] + offR[ri];
      for (long tj = 0; tj < dt; ++tj)
        for (long rj = 0; rj < dr; ++rj)
          out(row, offT[tj] + offR[rj]) = m(offT[tj] + offR[ri], offT[ti] + offR[rj]);
    }
  return out;
}

Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm) {
  const int n = dims.parties();
  const long D = dims.total();
  // new-space strides from permuted dims
  std::vector<long> new_stride(static_cast<size_t>(n));
  long s = 1;
  for (int k = n - 1; k >= 0; --k) {
    new_stride[static_cast<size_t>(k)] = s;
    s *= dims.dim(perm[static_cast<size_t>(k)]);
  }
  // map[I_old] = I_new via digit permutation
  std::vector<long> map(static_cast<size_t>(D));
  std::vector<int> digit(static_cast<size_t>(n), 0);
  for (long I = 0; I < D; ++I) {
    long J = 0;
    for (int k = 0; k < n; ++k)
      J += static_cast<long>(digit[static_cast<size_t>(perm[static_cast<size_t>(k)])]) *
           new_stride[static_cast<size_t>(k)];
    map[static_cast<size_t>(I)] = J;
    for (int p = n; p-- > 0;) {
      if (++digit[static_cast<size_t>(p)] < dims.dim(p)) break;
      digit[static_cast<size_t>(p)] = 0;
    }
  }
  Mat out(D, D);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < D; ++i)
    for (long j = 0; j < D; ++j) out(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) = m(i, j);
  return out;
}

}  // namespace ewit::kernels

namespace ewit::reference {

namespace {

// digits of full index I, leftmost party most significant
std::vector<int> to_digits(long I, const DimensionVector& dims) {
  const int n = dims.parties();
  std::vector<int> g(static_cast<size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    g[static_cast<size_t>(p)] = static_cast<int>(I % dims.dim(p));
    I /= dims.dim(p);
  }
  return g;
}

long from_digits(const std::vector<int>& g, const DimensionVector& dims) {
  long I = 0;
  for (int p = 0; p < dims.parties(); ++p) I = I * dims.dim(p) + g[static_cast<size_t>(p)];
  return I;
}

bool contains(const std::vector<int>& v, int x) {
  for (int y : v)
    if (y == x) return true;
  return false;
}

}  // namespace

Mat tensor_product(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r)
    for (Eigen::Index c = 0; c < out.cols(); ++c)
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
  return out;
}

Mat partial_trace(const Mat& m, const DimensionVector& dims, const std::vector<int>& keep) {
  const long D = dims.total();
  const long dk = subset_dim(dims, keep);
  Mat out = Mat::Zero(dk, dk);
  for (long I = 0; I < D; ++I) {
    for (long J = 0; J < D; ++J) {
      std::vector<int> gi = to_digits(I, dims), gj = to_digits(J, dims);
      bool diag = true;
      for (int p = 0; p < dims.parties(); ++p)
        if (!contains(keep, p) && gi[static_cast<size_t>(p)] != gj[static_cast<size_t>(p)]) {
          diag = false;
          break;
        }
      if (!diag) continue;
      long a = 0, b = 0;
      for (int p : keep) {
        a = a * dims.dim(p) + gi[static_cast<size_t>(p)];
        b = b * dims.dim(p) + gj[static_cast<size_t>(p)];
      }
      out(a, b) += m(I, J);
    }
  }
  return out;
}

Mat partial_transpose(const Mat& m, const DimensionVector& dims, const std::vector<int>& transposed) {
  const long D = dims.total();
  Mat out(D, D);
  for (long I = 0; I < D; ++I)
    for (long J = 0; J < D; ++J) {
      std::vector<int> gi = to_digits(I, dims), gj = to_digits(J, dims);
      for (int p : transposed) std::swap(gi[static_cast<size_t>(p)], gj[static_cast<size_t>(p)]);
      out(from_digits(gi, dims), from_digits(gj, dims)) = m(I, J);
    }
  return out;
}

Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm) {
  const long D = dims.total();
  std::vector<int> new_dims;
  for (int k = 0; k < dims.parties(); ++k) new_dims.push_back(dims.dim(perm[static_cast<size_t>(k)]));
  DimensionVector nd(new_dims);
  Mat out(D, D);
  for (long I = 0; I < D; ++I)
    for (long J = 0; J < D; ++J) {
      std::vector<int> gi = to_digits(I, dims), gj = to_digits(J, dims);
      std::vector<int> hi(gi.size()), hj(gj.size());
      for (int k = 0; k < dims.parties(); ++k) {
        hi[static_cast<size_t>(k)] = gi[static_cast<size_t>(perm[static_cast<size_t>(k)])];
        hj[static_cast<size_t>(k)] = gj[static_cast<size_t>(perm[static_cast<size_t>(k)])];
      }
      out(from_digits(hi, nd), from_digits(hj, nd)) = m(I, J);
    }
  return out;
}

}  // namespace ewit::reference
