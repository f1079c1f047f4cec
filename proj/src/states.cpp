#include "ewit/states.hpp"

namespace ewit {

ValidationReport check_density(const Mat& m, const DimensionVector& dims) {
  ValidationReport r;
  auto fail = [&](const std::string& inv, double dev) {
    r.ok = false;
    r.invariant = inv;
    r.deviation = dev;
    return r;
  };
  if (m.rows() != m.cols() || m.rows() != dims.total())
    return fail("dimension match", static_cast<double>(m.rows() - dims.total()));
  if (!all_finite(m)) return fail("finite entries", std::numeric_limits<double>::infinity());
  const double hdev = hermiticity_deviation(m);
  if (hdev > kHermitianTol) return fail("hermitian", hdev);
  const double tdev = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (tdev > kTraceTol) return fail("unit trace", tdev);
  const double lmin = min_eigenvalue(m);
  if (lmin < -kPsdTol) return fail("positive semidefinite", lmin);
  return r;
}

DensityOperator make_density(Mat m, const DimensionVector& dims) {
  const ValidationReport r = check_density(m, dims);
  if (!r.ok) throw ValidationError(r.invariant, r.deviation);
  return DensityOperator{std::move(m), dims};
}

DensityOperator make_pure_density(const Vec& psi, const DimensionVector& dims) {
  if (psi.size() != dims.total()) throw DimensionError("make_pure_density: vector length mismatch");
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-9) throw ValidationError("normalized", std::abs(n - 1.0));
  return DensityOperator{psi * psi.adjoint(), dims};
}

// ---------------------------------------------------------------------------

Vec bell_vector() {
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

Vec ghz_vector() {
  Vec v = Vec::Zero(8);
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return v;
}

Vec w_vector() {
  Vec v = Vec::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return v;
}

DensityOperator bell_state() { return make_pure_density(bell_vector(), DimensionVector({2, 2})); }
DensityOperator ghz_state() { return make_pure_density(ghz_vector(), DimensionVector({2, 2, 2})); }
DensityOperator w_state() { return make_pure_density(w_vector(), DimensionVector({2, 2, 2})); }

DensityOperator wghz_mixture(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("wghz_mixture: p must lie in [0,1]");
  return mix(ghz_state(), w_state(), p);
}

DensityOperator werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("werner_state: p must lie in [0,1]");
  DimensionVector dims({2, 2});
  Mat m = p * (bell_vector() * bell_vector().adjoint()) + (1.0 - p) * 0.25 * Mat::Identity(4, 4);
  return DensityOperator{std::move(m), dims};
}

DensityOperator mix(const DensityOperator& rho, const DensityOperator& sigma, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("mix: lambda must lie in [0,1]");
  if (rho.dims != sigma.dims) throw DimensionError("mix: dimension mismatch");
  return DensityOperator{lambda * rho.matrix + (1.0 - lambda) * sigma.matrix, rho.dims};
}

// ---------------------------------------------------------------------------

Vec random_pure_state(const DimensionVector& dims, std::uint64_t seed) {
  Rng rng(seed);
  return rng.unit_vector(dims.total());
}

ProductVector random_product_state(const DimensionVector& dims, const Partition& blocks,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return random_product_vector(dims, blocks, rng);
}

DensityOperator random_density_operator(const DimensionVector& dims, std::uint64_t seed, int rank) {
  const int d = dims.total();
  if (rank <= 0 || rank > d) rank = d;
  Rng rng(seed);
  Mat g(d, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_gaussian();
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator{std::move(m), dims};
}

DensityOperator random_separable_state(const DimensionVector& dims, const Partition& blocks,
                                       int terms, std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("random_separable_state: terms must be >= 1");
  Rng rng(seed);
  RVec w = rng.simplex_weights(terms);
  Mat m = Mat::Zero(dims.total(), dims.total());
  for (int k = 0; k < terms; ++k) {
    ProductVector pv = random_product_vector(dims, blocks, rng);
    m += w(k) * (pv.assembled * pv.assembled.adjoint());
  }
  return DensityOperator{std::move(m), dims};
}

// ---------------------------------------------------------------------------

DensityOperator conjugate_local_unitaries(const DensityOperator& rho, const std::vector<Mat>& locals) {
  if (static_cast<int>(locals.size()) != rho.dims.parties())
    throw DimensionError("conjugate_local_unitaries: one unitary per party required");
  Mat u = locals[0];
  for (size_t p = 1; p < locals.size(); ++p) u = tensor_product(u, locals[p]);
  if (u.rows() != rho.dims.total())
    throw DimensionError("conjugate_local_unitaries: local dimensions mismatch");
  return DensityOperator{u * rho.matrix * u.adjoint(), rho.dims};
}

std::vector<Mat> random_local_unitaries(const DimensionVector& dims, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mat> us;
  us.reserve(static_cast<size_t>(dims.parties()));
  for (int p = 0; p < dims.parties(); ++p) us.push_back(rng.unitary(dims.dim(p)));
  return us;
}

DensityOperator dephase_party(const DensityOperator& rho, int party) {
  rho.dims.check_parties({party});
  const std::vector<long> offP = subset_offsets(rho.dims, {party});
  const std::vector<long> offC = subset_offsets(rho.dims, complement_parties(rho.dims, {party}));
  Mat out = Mat::Zero(rho.dims.total(), rho.dims.total());
  for (size_t k = 0; k < offP.size(); ++k)
    for (size_t x = 0; x < offC.size(); ++x)
      for (size_t y = 0; y < offC.size(); ++y)
        out(offP[k] + offC[x], offP[k] + offC[y]) = rho.matrix(offP[k] + offC[x], offP[k] + offC[y]);
  return DensityOperator{std::move(out), rho.dims};
}

DensityOperator mix_random_local_unitaries(const DensityOperator& rho, int terms, std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("mix_random_local_unitaries: terms must be >= 1");
  Mat acc = Mat::Zero(rho.dims.total(), rho.dims.total());
  for (int k = 0; k < terms; ++k) {
    auto us = random_local_unitaries(rho.dims, derive_seed(seed, static_cast<std::uint64_t>(k)));
    acc += conjugate_local_unitaries(rho, us).matrix;
  }
  acc /= static_cast<double>(terms);
  return DensityOperator{std::move(acc), rho.dims};
}

double purity(const DensityOperator& rho) { return rho.matrix.squaredNorm(); }

}  // namespace ewit
