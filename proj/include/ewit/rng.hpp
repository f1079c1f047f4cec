#ifndef EWIT_RNG_HPP
#define EWIT_RNG_HPP

#include <cstdint>
#include <random>

#include "ewit/types.hpp"

namespace ewit {

// SplitMix64 finalizer; used only to spread seeds for child streams.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic child seed for worker/sample k of a parent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  return mix_seed(seed ^ mix_seed(k + 1));
}

// Reproducible random stream: std::mt19937_64 with an explicit Box-Muller
// Gaussian so the value sequence is identical on every platform
// (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cplx complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return cplx(re, im);
  }

  // Haar-uniform unit vector in dimension d.
  Vec unit_vector(int d) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = complex_gaussian();
    double n = v.norm();
    while (n == 0.0) {  // probability zero, but keep the contract total
      for (int i = 0; i < d; ++i) v(i) = complex_gaussian();
      n = v.norm();
    }
    return v / n;
  }

  // Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
  Mat unitary(int d) {
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = complex_gaussian();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
      cplx rii = r(i, i);
      double a = std::abs(rii);
      cplx phase = (a > 0.0) ? rii / a : cplx(1.0, 0.0);
      q.col(i) *= phase;
    }
    return q;
  }

  // Weights on the probability simplex (normalized exponentials).
  RVec simplex_weights(int k) {
    RVec w(k);
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
      double u = uniform();
      if (u <= 0.0) u = 0x1.0p-53;
      w(i) = -std::log(u);
      s += w(i);
    }
    return w / s;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ewit

#endif  // EWIT_RNG_HPP
