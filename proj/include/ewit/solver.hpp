#ifndef EWIT_SOLVER_HPP
#define EWIT_SOLVER_HPP

#include "ewit/witness.hpp"

namespace ewit {

struct SolverConfig {
  double eps_feasibility = 1e-6;  // accepted witness infeasibility on product states
  double eps_objective = 1e-6;    // stagnation threshold per cut
  int max_cuts = 5000;
  int restarts = 20;       // separation-oracle restarts per partition
  double trust_bound = 0;  // kappa box on basis coefficients; 0 = total dimension
  std::uint64_t seed = 0;
  int oracle_max_sweeps = 200;
  double oracle_tol = 1e-10;
  int seed_cut_factor = 10;  // initial constraints = factor * D^2

  void validate() const {
    if (eps_feasibility <= 0 || eps_objective <= 0)
      throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (restarts < 1) throw std::invalid_argument("SolverConfig: restarts must be >= 1");
    if (max_cuts < 1) throw std::invalid_argument("SolverConfig: max_cuts must be >= 1");
  }
};

// One optimal-witness optimization instance: minimize Tr(W rho) over
// trace-one Hermitian W subject to <pi|W|pi> >= 0 for every product vector
// pi conforming to the scheme's partitions.
struct WitnessProblem {
  DensityOperator rho;
  PartitionScheme scheme;
  SolverConfig config;
};

struct WitnessResult {
  Witness witness;
  double e_w = 0.0;  // max(0, -Tr(W rho))
  bool converged = false;
  int cuts_used = 0;                    // separation cuts added after seeding
  ProductVector certificate;            // worst product vector at termination
  double certificate_value = 0.0;       // <pi|W|pi> of the certificate
  std::vector<double> objective_history;  // Tr(W rho) after each LP solve
  double trust_bound_final = 0.0;
  int lp_iterations = 0;
};

struct OracleResult {
  double value = 0.0;
  ProductVector argmin;
};

// Approximate minimizer of <pi|W|pi> over scheme-conforming product vectors:
// block-coordinate descent (each block set to the minimum eigenvector of its
// effective operator) from `restarts` random starts per partition. The value
// is an upper bound on the true minimum; deterministic for a fixed seed.
OracleResult violation_oracle(const Witness& w, const PartitionScheme& scheme, int restarts,
                              std::uint64_t seed);

// Cutting-plane solve of the optimal-witness LP; returns the witness, the
// witnessed entanglement max(0, -Tr(W rho)), and the termination
// certificate. converged means the final separation value is within
// -eps_feasibility.
WitnessResult solve(const WitnessProblem& problem);

// Convenience wrapper returning only the entanglement value.
double e_w(const DensityOperator& rho, const PartitionScheme& scheme, const SolverConfig& config = {});

}  // namespace ewit

#endif  // EWIT_SOLVER_HPP
