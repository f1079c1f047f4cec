#include "ewit/measures.hpp"

#include <chrono>

#include "ewit/tensor.hpp"

namespace ewit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> bipartite_cut_for(const DensityOperator& rho, const PartitionScheme& scheme,
                                   const char* measure) {
  if (scheme.fixed_cut()) return *scheme.fixed_cut();
  if (rho.dims.parties() == 2) return {0};
  throw std::invalid_argument(std::string(measure) +
                              " needs a bipartition (use a cut scheme on >2 parties)");
}

}  // namespace

double random_robustness(const DensityOperator& rho, const PartitionScheme& scheme,
                         const SolverConfig& config) {
  return static_cast<double>(rho.dims.total()) * e_w(rho, scheme, config);
}

double pure_state_e_w(const Vec& psi, const DimensionVector& dims, const std::vector<int>& cut) {
  if (psi.size() != dims.total()) throw DimensionError("pure_state_e_w: vector length mismatch");
  std::vector<int> a = cut;
  std::sort(a.begin(), a.end());
  dims.check_parties(a);
  const std::vector<int> b = complement_parties(dims, a);
  if (a.empty() || b.empty()) throw DimensionError("pure_state_e_w: cut must be a proper bipartition");
  // regroup into a two-party vector in (cut, complement) order
  const std::vector<long> offA = subset_offsets(dims, a);
  const std::vector<long> offB = subset_offsets(dims, b);
  const long da = static_cast<long>(offA.size());
  const long db = static_cast<long>(offB.size());
  Vec grouped(da * db);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < db; ++j) grouped(i * db + j) = psi(offA[i] + offB[j]);
  const SchmidtDecomposition sd =
      schmidt_decompose(grouped, DimensionVector({static_cast<int>(da), static_cast<int>(db)}));
  if (sd.coefficients.size() < 2) return 0.0;
  return sd.coefficients(0) * sd.coefficients(1);
}

MeasureReport full_report(const DensityOperator& rho, const PartitionScheme& scheme,
                          const SolverConfig& config, const std::set<Measure>& which) {
  MeasureReport rep;
  rep.scheme = scheme.description();

  if (which.count(Measure::EW) || which.count(Measure::RandomRobustness)) {
    const auto t0 = std::chrono::steady_clock::now();
    WitnessResult wr = solve(WitnessProblem{rho, scheme, config});
    const double dt = seconds_since(t0);
    rep.converged = wr.converged;
    rep.cuts_used = wr.cuts_used;
    if (which.count(Measure::EW)) {
      rep.e_w = wr.e_w;
      rep.wall_seconds["e_w"] = dt;
    }
    if (which.count(Measure::RandomRobustness)) {
      rep.random_robustness = static_cast<double>(rho.dims.total()) * wr.e_w;
      rep.wall_seconds["random_robustness"] = which.count(Measure::EW) ? 0.0 : dt;
    }
    if (!wr.converged) rep.flags.push_back("e_w did not converge");
  }
  if (which.count(Measure::EDW)) {
    const auto cut = bipartite_cut_for(rho, scheme, "e_dw");
    const auto t0 = std::chrono::steady_clock::now();
    rep.e_dw = e_dw(rho, cut);
    rep.wall_seconds["e_dw"] = seconds_since(t0);
  }
  if (which.count(Measure::Negativity)) {
    const auto cut = bipartite_cut_for(rho, scheme, "negativity");
    const auto t0 = std::chrono::steady_clock::now();
    rep.negativity = negativity(rho, cut);
    rep.wall_seconds["negativity"] = seconds_since(t0);
  }
  if (which.count(Measure::SchmidtProduct)) {
    const auto cut = bipartite_cut_for(rho, scheme, "schmidt_product");
    const auto t0 = std::chrono::steady_clock::now();
    const double pur = purity(rho);
    if (pur < 1.0 - 1e-9)
      throw std::invalid_argument("schmidt_product requires a pure state (purity " +
                                  std::to_string(pur) + ")");
    const Eigensystem es = hermitian_eigensystem(rho.matrix);
    const Vec psi = es.eigenvectors.col(es.eigenvalues.size() - 1);
    rep.schmidt_product = pure_state_e_w(psi, rho.dims, cut);
    rep.wall_seconds["schmidt_product"] = seconds_since(t0);
  }

  if (rep.e_w && rep.e_dw && rep.converged && *rep.e_w < *rep.e_dw - 1e-3)
    rep.flags.push_back("e_w below e_dw beyond tolerance (solver failure indicator)");
  if (rep.e_w && rep.negativity && rep.converged && *rep.e_w < *rep.negativity - 1e-3)
    rep.flags.push_back("e_w below negativity beyond tolerance");
  return rep;
}

}  // namespace ewit
