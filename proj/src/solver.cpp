#include "ewit/solver.hpp"

#include "ewit/basis.hpp"
#include "ewit/simplex.hpp"
#include "ewit/tensor.hpp"

namespace ewit {

namespace {

// Deterministic minimum-eigenvector selection. Near-degenerate minimum
// eigenspaces (within 1e-9 relative) are resolved by the lexicographically
// largest absolute-component sequence; the phase is fixed so the first
// nonzero component is real positive.
std::pair<double, Vec> min_eigvec_deterministic(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) throw NumericalError("oracle eigen-step failed");
  const RVec& vals = es.eigenvalues();
  const double lmin = vals(0);
  const double tol = 1e-9 * std::max(1.0, std::abs(lmin));
  int pick = 0;
  for (long i = 1; i < vals.size() && vals(i) <= lmin + tol; ++i) {
    const Vec& a = es.eigenvectors().col(pick);
    const Vec& b = es.eigenvectors().col(i);
    for (long k = 0; k < a.size(); ++k) {
      const double da = std::abs(a(k)), db = std::abs(b(k));
      if (std::abs(da - db) > 1e-12) {
        if (db > da) pick = static_cast<int>(i);
        break;
      }
    }
  }
  Vec v = es.eigenvectors().col(pick);
  for (long k = 0; k < v.size(); ++k) {
    const double a = std::abs(v(k));
    if (a > 1e-12) {
      v *= std::conj(v(k)) / a;
      break;
    }
  }
  return {lmin, std::move(v)};
}

struct BlockGeometry {
  std::vector<int> parties;
  std::vector<int> comp;
  long dim;
};

// One block-coordinate descent run on a fixed partition.
std::pair<double, std::vector<ProductBlock>> descend(const Mat& w, const DimensionVector& dims,
                                                     const Partition& partition, Rng& rng,
                                                     int max_sweeps, double tol) {
  std::vector<BlockGeometry> geo;
  std::vector<ProductBlock> blocks;
  for (const auto& parties : partition) {
    BlockGeometry g;
    g.parties = parties;
    g.comp = complement_parties(dims, parties);
    g.dim = subset_dim(dims, parties);
    geo.push_back(g);
    blocks.push_back(ProductBlock{parties, rng.unit_vector(static_cast<int>(g.dim))});
  }
  double obj = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double last = 0.0;
    for (size_t j = 0; j < blocks.size(); ++j) {
      std::vector<ProductBlock> others;
      for (size_t k = 0; k < blocks.size(); ++k)
        if (k != j) others.push_back(blocks[k]);
      const Vec phi = assemble_blocks(dims, others, geo[j].comp);
      const Mat mj = effective_operator(w, dims, geo[j].parties, phi);
      auto [lmin, vec] = min_eigvec_deterministic(mj);
      blocks[j].amplitudes = std::move(vec);
      last = lmin;
    }
    if (obj - last < tol) {
      obj = std::min(obj, last);
      break;
    }
    obj = last;
  }
  return {obj, std::move(blocks)};
}

}  // namespace

OracleResult violation_oracle(const Witness& w, const PartitionScheme& scheme, int restarts,
                              std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("violation_oracle: restarts must be >= 1");
  if (w.dims != scheme.dims()) throw DimensionError("violation_oracle: dimension mismatch");
  const auto& partitions = scheme.partitions();
  const long tasks = static_cast<long>(partitions.size()) * restarts;

  std::vector<double> values(static_cast<size_t>(tasks));
  std::vector<std::vector<ProductBlock>> results(static_cast<size_t>(tasks));
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    const auto& partition = partitions[static_cast<size_t>(t / restarts)];
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    auto [val, blocks] = descend(w.matrix, w.dims, partition, rng, 200, 1e-10);
    values[static_cast<size_t>(t)] = val;
    results[static_cast<size_t>(t)] = std::move(blocks);
  }
  long best = 0;
  for (long t = 1; t < tasks; ++t)
    if (values[static_cast<size_t>(t)] < values[static_cast<size_t>(best)]) best = t;

  OracleResult out;
  out.argmin = make_product_vector(w.dims, std::move(results[static_cast<size_t>(best)]));
  // evaluate on the assembled vector so the reported value matches the cut
  out.value = quadratic_form(w.matrix, out.argmin.assembled);
  return out;
}

WitnessResult solve(const WitnessProblem& problem) {
  problem.config.validate();
  const DimensionVector& dims = problem.rho.dims;
  if (dims != problem.scheme.dims()) throw DimensionError("solve: scheme dimension mismatch");
  const int D = dims.total();
  const long nb = static_cast<long>(D) * D;  // basis size
  const SolverConfig& cfg = problem.config;
  const double inv_d = 1.0 / static_cast<double>(D);

  // objective: Tr(W rho) = x'c + 1/D with x the non-identity coefficients
  const RVec rho_coeffs = basis_coefficients(problem.rho.matrix);
  const RVec c = rho_coeffs.tail(nb - 1);

  double kappa = cfg.trust_bound > 0 ? cfg.trust_bound : static_cast<double>(D);
  const double kappa_cap = 1048576.0 * D;
  BoxLp lp(c, kappa);

  const auto& partitions = problem.scheme.partitions();
  auto add_product_cut = [&](const Vec& assembled) {
    const RVec a = basis_expectations(assembled);
    lp.add_cut(a.tail(nb - 1), -inv_d);
  };

  // seed the constraint set with random product vectors
  const long seeds = static_cast<long>(cfg.seed_cut_factor) * D * D;
  {
    std::vector<Vec> seed_vecs(static_cast<size_t>(seeds));
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < seeds; ++s) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
      seed_vecs[static_cast<size_t>(s)] =
          random_product_vector(dims, partitions[static_cast<size_t>(s % partitions.size())], rng)
              .assembled;
    }
    for (const Vec& v : seed_vecs) add_product_cut(v);
  }

  WitnessResult res;
  res.trust_bound_final = kappa;
  RVec coeffs(nb);
  coeffs(0) = 1.0 / std::sqrt(static_cast<double>(D));  // fixes Tr(W) = 1
  int stagnant = 0;
  double prev_obj = std::numeric_limits<double>::quiet_NaN();
  const std::uint64_t oracle_seed_base = mix_seed(cfg.seed ^ 0x6f72636cull);

  for (int iter = 0;; ++iter) {
    BoxLp::Solution sol = lp.solve();
    res.lp_iterations += sol.iterations;
    coeffs.tail(nb - 1) = sol.x;
    Mat wm = operator_from_coefficients(coeffs, D);
    res.witness = Witness{std::move(wm), dims};
    const double obj = sol.objective + inv_d;  // Tr(W rho)
    res.objective_history.push_back(obj);

    OracleResult oracle = violation_oracle(res.witness, problem.scheme, cfg.restarts,
                                           derive_seed(oracle_seed_base, static_cast<std::uint64_t>(iter)));
    res.certificate = oracle.argmin;
    res.certificate_value = oracle.value;

    const bool violated = oracle.value < -cfg.eps_feasibility;
    bool escalated = false;
    if (violated && res.cuts_used < cfg.max_cuts) {
      add_product_cut(oracle.argmin.assembled);
      ++res.cuts_used;
    }
    if (sol.on_box && kappa < kappa_cap) {
      kappa *= 2.0;
      lp.set_kappa(kappa);
      res.trust_bound_final = kappa;
      escalated = true;
    }

    if (!violated && !escalated) {
      res.converged = true;
      break;
    }
    if (violated && !escalated) {
      if (!std::isnan(prev_obj) && std::abs(obj - prev_obj) < cfg.eps_objective) {
        if (++stagnant >= 3) break;  // cuts no longer move the objective
      } else {
        stagnant = 0;
      }
      prev_obj = obj;
    }
    if (violated && res.cuts_used >= cfg.max_cuts) break;
  }

  res.e_w = std::max(0.0, -evaluate(res.witness, problem.rho));
  return res;
}

double e_w(const DensityOperator& rho, const PartitionScheme& scheme, const SolverConfig& config) {
  return solve(WitnessProblem{rho, scheme, config}).e_w;
}

}  // namespace ewit
