#ifndef EWIT_STATES_HPP
#define EWIT_STATES_HPP

#include "ewit/partitions.hpp"
#include "ewit/tensor.hpp"
#include "ewit/types.hpp"

namespace ewit {

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;

// Validated multipartite mixed state: Hermitian, unit trace, positive
// semidefinite up to kPsdTol.
struct DensityOperator {
  Mat matrix;
  DimensionVector dims;
};

struct ValidationReport {
  bool ok = true;
  std::string invariant;  // first violated invariant when !ok
  double deviation = 0.0;
};

ValidationReport check_density(const Mat& m, const DimensionVector& dims);

// Returns the typed operator iff all invariants pass; throws ValidationError
// (carrying the violated invariant and deviation) otherwise.
DensityOperator make_density(Mat m, const DimensionVector& dims);

DensityOperator make_pure_density(const Vec& psi, const DimensionVector& dims);

// ---------------------------------------------------------------------------
// builtin families

DensityOperator bell_state();                 // |Phi+> on 2 qubits
DensityOperator ghz_state();                  // (|000>+|111>)/sqrt(2)
DensityOperator w_state();                    // (|100>+|010>+|001>)/sqrt(3)
DensityOperator wghz_mixture(double p);       // (1-p) W + p GHZ
DensityOperator werner_state(double p);       // p |Phi+><Phi+| + (1-p) I/4

Vec bell_vector();
Vec ghz_vector();
Vec w_vector();

// convex mixture lambda*rho + (1-lambda)*sigma
DensityOperator mix(const DensityOperator& rho, const DensityOperator& sigma, double lambda);

// ---------------------------------------------------------------------------
// random states (deterministic in the seed; see Rng for the stream contract)

// Haar-uniform pure state on the full space.
Vec random_pure_state(const DimensionVector& dims, std::uint64_t seed);

// Independent Haar-random pure state per partition block.
ProductVector random_product_state(const DimensionVector& dims, const Partition& blocks,
                                   std::uint64_t seed);

// G G^dag / Tr(G G^dag) with G a D x rank Ginibre matrix (rank 0 = full).
DensityOperator random_density_operator(const DimensionVector& dims, std::uint64_t seed, int rank = 0);

// Random mixture of `terms` partition-product pure states with random
// simplex weights.
DensityOperator random_separable_state(const DimensionVector& dims, const Partition& blocks,
                                       int terms, std::uint64_t seed);

// ---------------------------------------------------------------------------
// local channels and unitaries (test and invariant machinery)

// U rho U^dag with U = tensor of per-party unitaries (one per party).
DensityOperator conjugate_local_unitaries(const DensityOperator& rho, const std::vector<Mat>& locals);

std::vector<Mat> random_local_unitaries(const DimensionVector& dims, std::uint64_t seed);

// Kill coherences of one party in the computational basis. Unital,
// implementable by local operations.
DensityOperator dephase_party(const DensityOperator& rho, int party);

// Equal-weight mixture of `terms` random local-unitary conjugations. Unital
// and LOCC (shared randomness + local unitaries).
DensityOperator mix_random_local_unitaries(const DensityOperator& rho, int terms, std::uint64_t seed);

double purity(const DensityOperator& rho);

}  // namespace ewit

#endif  // EWIT_STATES_HPP
