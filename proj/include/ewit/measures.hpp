#ifndef EWIT_MEASURES_HPP
#define EWIT_MEASURES_HPP

#include <map>
#include <set>

#include "ewit/solver.hpp"

namespace ewit {

enum class Measure { EW, EDW, Negativity, RandomRobustness, SchmidtProduct };

struct MeasureReport {
  std::optional<double> e_w;
  std::optional<double> e_dw;
  std::optional<double> negativity;
  std::optional<double> random_robustness;
  std::optional<double> schmidt_product;
  std::string scheme;
  bool converged = true;  // meaningful when the solver ran
  int cuts_used = 0;
  std::vector<std::string> flags;               // consistency warnings
  std::map<std::string, double> wall_seconds;   // per computed measure
};

// Minimal identity-mixing that destroys the entanglement: D * E_W. The state
// (rho + s I/D)/(1+s) at s = random_robustness sits on the separability
// boundary of the scheme.
double random_robustness(const DensityOperator& rho, const PartitionScheme& scheme,
                         const SolverConfig& config = {});

// Product of the two largest Schmidt coefficients of a normalized pure state
// across the bipartition (cut vs complement); 0 for product states.
double pure_state_e_w(const Vec& psi, const DimensionVector& dims, const std::vector<int>& cut);

// Computes the requested measures. e_dw / negativity / schmidt_product need
// a bipartition: the scheme's fixed cut, or party {0} on two-party systems.
// schmidt_product additionally requires purity >= 1 - 1e-9.
MeasureReport full_report(const DensityOperator& rho, const PartitionScheme& scheme,
                          const SolverConfig& config, const std::set<Measure>& which);

}  // namespace ewit

#endif  // EWIT_MEASURES_HPP
