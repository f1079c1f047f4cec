#ifndef EWIT_TYPES_HPP
#define EWIT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ewit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;   // dense complex operator
using Vec = Eigen::VectorXcd;   // state vector
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Largest total Hilbert-space dimension handled by the dense routines.
inline constexpr int kMaxDimension = 4096;

// ---------------------------------------------------------------------------
// errors

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

class OversizedError : public Error {
 public:
  explicit OversizedError(const std::string& what) : Error(what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

// Raised when a candidate operator fails a typed invariant; carries the
// violated invariant's name and the measured deviation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& invariant, double deviation)
      : Error("validation failed: " + invariant +
              " (deviation " + std::to_string(deviation) + ")"),
        invariant_(invariant),
        deviation_(deviation) {}
  const std::string& invariant() const { return invariant_; }
  double deviation() const { return deviation_; }

 private:
  std::string invariant_;
  double deviation_;
};

// ---------------------------------------------------------------------------
// multipartite dimension bookkeeping

// Ordered local dimensions d_0..d_{n-1} of a multipartite system, leftmost
// factor most significant (subsystem indices are 0-based throughout).
class DimensionVector {
 public:
  explicit DimensionVector(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw DimensionError("DimensionVector: need at least one subsystem");
    long total = 1;
    for (int d : dims_) {
      if (d < 2) throw DimensionError("DimensionVector: local dimensions must be >= 2");
      total *= d;
      if (total > kMaxDimension)
        throw OversizedError("DimensionVector: total dimension exceeds " +
                             std::to_string(kMaxDimension));
    }
    total_ = static_cast<int>(total);
  }

  int parties() const { return static_cast<int>(dims_.size()); }
  int total() const { return total_; }
  int dim(int party) const { return dims_.at(static_cast<size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const DimensionVector& o) const { return dims_ == o.dims_; }
  bool operator!=(const DimensionVector& o) const { return !(*this == o); }

  // Checks 0 <= p < parties for every listed subsystem.
  void check_parties(const std::vector<int>& parties_list) const {
    for (int p : parties_list)
      if (p < 0 || p >= parties())
        throw DimensionError("subsystem index " + std::to_string(p) + " out of range");
  }

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(dims_[i]);
    }
    return s;
  }

 private:
  std::vector<int> dims_;
  int total_ = 0;
};

// ---------------------------------------------------------------------------
// multi-index helpers (row-major tensor ordering)

// Full-space offsets of the local basis states of a subsystem subset.
// `parties` must be sorted ascending; offsets[t] is the full-space index
// contribution of local index t, so a full index decomposes uniquely as
// offsets_S[t_S] + offsets_complement[t_C].
std::vector<long> subset_offsets(const DimensionVector& dims, const std::vector<int>& parties);

// Product of local dimensions over a subset.
long subset_dim(const DimensionVector& dims, const std::vector<int>& parties);

// Sorted complement of `parties` in {0..n-1}.
std::vector<int> complement_parties(const DimensionVector& dims, const std::vector<int>& parties);

inline bool is_sorted_unique(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

// Max entrywise deviation from Hermiticity, max_ij |m(i,j) - conj(m(j,i))|.
double hermiticity_deviation(const Mat& m);

// True iff every entry is finite.
bool all_finite(const Mat& m);

}  // namespace ewit

#endif  // EWIT_TYPES_HPP
