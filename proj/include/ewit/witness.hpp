#ifndef EWIT_WITNESS_HPP
#define EWIT_WITNESS_HPP

#include <optional>

#include "ewit/partitions.hpp"
#include "ewit/states.hpp"

namespace ewit {

// Hermitian operator normalized to unit trace. Entanglement witnesses are
// the trace-one Hermitian operators with nonnegative expectation on every
// separable state; the normalization makes witness expectation values of
// different operators comparable.
struct Witness {
  Mat matrix;
  DimensionVector dims;
};

// Checks Hermiticity (1e-9) and unit trace (1e-9).
Witness make_witness(Mat m, const DimensionVector& dims);

// Tr(W rho) as a real number. The imaginary part must vanish within 1e-10
// (both operators Hermitian); anything larger signals corrupted inputs.
double evaluate(const Witness& w, const DensityOperator& rho);

// W = p P + (1-p) Q^{T_A} with P, Q positive semidefinite: the decomposable
// witnesses, blind to PPT entanglement by construction.
struct DecomposableWitness {
  double p = 0.5;
  Mat P;
  Mat Q;
  std::vector<int> cut;  // subsystem set A
};

// Raw assembled matrix p P + (1-p) Q^{T_A} (not trace-normalized).
Mat assemble_decomposable(const DecomposableWitness& dw, const DimensionVector& dims);

// Validates the decomposable structure: P, Q PSD within 1e-9, p in [0,1],
// assembled matrix Hermitian.
void check_decomposable(const DecomposableWitness& dw, const DimensionVector& dims);

struct OdwResult {
  Witness witness;
  bool detects;       // lambda_min(rho^{T_A}) < 0
  double lambda_min;  // the minimum partial-transpose eigenvalue
};

// Closed-form optimal decomposable witness: P^{T_A}/Tr(P) with P the
// projector onto the eigenspace of lambda_min(rho^{T_A}) (eigenvectors
// within 1e-9 of the minimum). When the state is PPT the projector is still
// returned, flagged as detecting nothing.
OdwResult optimal_decomposable_witness(const DensityOperator& rho, const std::vector<int>& cut);

// Decomposable witnessed entanglement |min(lambda_min(rho^{T_A}), 0)|.
double e_dw(const DensityOperator& rho, const std::vector<int>& cut);

// Sum of |negative eigenvalues| of rho^{T_A}; equals (||rho^{T_A}||_1 - 1)/2
// for unit-trace rho.
double negativity(const DensityOperator& rho, const std::vector<int>& cut);

struct SampledCheck {
  double min_value = 0.0;
  std::optional<ProductVector> violator;  // worst sample below -1e-9, if any
};

// Monte-Carlo witness audit: evaluates <pi|W|pi> over `samples` random
// product vectors conforming to the scheme's partitions (cycled by sample
// index) and reports the minimum plus a violator below -1e-9 when one
// exists. Deterministic in (samples, seed) regardless of thread count.
SampledCheck is_witness_sampled(const Witness& w, const PartitionScheme& scheme, long samples,
                                std::uint64_t seed);

}  // namespace ewit

#endif  // EWIT_WITNESS_HPP
