#include "ewit/witness.hpp"

#include "ewit/tensor.hpp"

namespace ewit {

Witness make_witness(Mat m, const DimensionVector& dims) {
  if (m.rows() != m.cols() || m.rows() != dims.total())
    throw DimensionError("make_witness: dimension mismatch");
  const double hdev = hermiticity_deviation(m);
  if (hdev > kHermitianTol) throw ValidationError("hermitian", hdev);
  const double tdev = std::abs(m.trace() - cplx(1.0, 0.0));
  if (tdev > kTraceTol) throw ValidationError("unit trace", tdev);
  return Witness{std::move(m), dims};
}

double evaluate(const Witness& w, const DensityOperator& rho) {
  if (w.dims != rho.dims) throw DimensionError("evaluate: dimension mismatch");
  const cplx t = (w.matrix * rho.matrix).trace();
  if (std::abs(t.imag()) > 1e-10)
    throw NumericalError("evaluate: Tr(W rho) has imaginary part " + std::to_string(t.imag()));
  return t.real();
}

Mat assemble_decomposable(const DecomposableWitness& dw, const DimensionVector& dims) {
  if (dw.P.rows() != dims.total() || dw.Q.rows() != dims.total())
    throw DimensionError("assemble_decomposable: dimension mismatch");
  return dw.p * dw.P + (1.0 - dw.p) * partial_transpose(dw.Q, dims, dw.cut);
}

void check_decomposable(const DecomposableWitness& dw, const DimensionVector& dims) {
  if (dw.p < 0.0 || dw.p > 1.0) throw std::invalid_argument("decomposable witness: p outside [0,1]");
  const double lp = min_eigenvalue(dw.P);
  if (lp < -kPsdTol) throw ValidationError("P positive semidefinite", lp);
  const double lq = min_eigenvalue(dw.Q);
  if (lq < -kPsdTol) throw ValidationError("Q positive semidefinite", lq);
  const Mat m = assemble_decomposable(dw, dims);
  const double hdev = hermiticity_deviation(m);
  if (hdev > kHermitianTol) throw ValidationError("assembled hermitian", hdev);
}

OdwResult optimal_decomposable_witness(const DensityOperator& rho, const std::vector<int>& cut) {
  const Mat pt = partial_transpose(rho.matrix, rho.dims, cut);
  const Eigensystem es = hermitian_eigensystem(pt);
  const double lmin = es.eigenvalues(0);
  // projector onto the (near-)degenerate minimum eigenspace
  Mat proj = Mat::Zero(rho.dims.total(), rho.dims.total());
  int mult = 0;
  for (long i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) <= lmin + 1e-9) {
      proj += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
      ++mult;
    }
  }
  Mat w = partial_transpose(proj, rho.dims, cut) / static_cast<double>(mult);
  return OdwResult{make_witness(std::move(w), rho.dims), lmin < 0.0, lmin};
}

double e_dw(const DensityOperator& rho, const std::vector<int>& cut) {
  const Mat pt = partial_transpose(rho.matrix, rho.dims, cut);
  return std::abs(std::min(min_eigenvalue(pt), 0.0));
}

double negativity(const DensityOperator& rho, const std::vector<int>& cut) {
  const Mat pt = partial_transpose(rho.matrix, rho.dims, cut);
  const Eigensystem es = hermitian_eigensystem(pt);
  double neg = 0.0;
  for (long i = 0; i < es.eigenvalues.size(); ++i)
    if (es.eigenvalues(i) < 0.0) neg -= es.eigenvalues(i);
  return neg;
}

SampledCheck is_witness_sampled(const Witness& w, const PartitionScheme& scheme, long samples,
                                std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("is_witness_sampled: samples must be >= 1");
  if (w.dims != scheme.dims()) throw DimensionError("is_witness_sampled: dimension mismatch");
  const auto& partitions = scheme.partitions();
  const long nparts = static_cast<long>(partitions.size());

  // Chunked sampling: chunk c owns samples [c*kChunk, ...) and its own child
  // stream, so the value sequence is independent of the thread count.
  constexpr long kChunk = 512;
  const long nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> values(static_cast<size_t>(samples));
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < nchunks; ++c) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
    const long hi = std::min(samples, (c + 1) * kChunk);
    for (long s = c * kChunk; s < hi; ++s) {
      const ProductVector pv =
          random_product_vector(w.dims, partitions[static_cast<size_t>(s % nparts)], rng);
      values[static_cast<size_t>(s)] = quadratic_form(w.matrix, pv.assembled);
    }
  }
  long best = 0;
  for (long s = 1; s < samples; ++s)
    if (values[static_cast<size_t>(s)] < values[static_cast<size_t>(best)]) best = s;

  SampledCheck out;
  out.min_value = values[static_cast<size_t>(best)];
  if (out.min_value < -1e-9) {
    // regenerate the violating sample deterministically
    const long c = best / kChunk;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
    ProductVector pv;
    for (long s = c * kChunk; s <= best; ++s)
      pv = random_product_vector(w.dims, partitions[static_cast<size_t>(s % nparts)], rng);
    out.violator = std::move(pv);
  }
  return out;
}

}  // namespace ewit
