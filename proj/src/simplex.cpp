#include "ewit/simplex.hpp"

namespace ewit {

namespace {
constexpr double kOptTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr long kRefactorEvery = 100;
constexpr int kStallLimit = 60;
}  // namespace

BoxLp::BoxLp(RVec c, double kappa) : n_(static_cast<int>(c.size())), kappa_(kappa), c_(std::move(c)) {
  if (n_ < 1) throw DimensionError("BoxLp: need at least one variable");
  if (!(kappa_ > 0.0)) throw std::invalid_argument("BoxLp: kappa must be positive");
  cut_cols_.resize(n_, 64);
  cut_rhs_.resize(64);
}

void BoxLp::add_cut(const RVec& a, double b) {
  if (a.size() != n_) throw DimensionError("BoxLp: cut length mismatch");
  if (cuts_ == cut_cols_.cols()) {
    RMat grown(n_, cut_cols_.cols() * 2);
    grown.leftCols(cuts_) = cut_cols_.leftCols(cuts_);
    cut_cols_.swap(grown);
    RVec rhs_grown(cut_rhs_.size() * 2);
    rhs_grown.head(cuts_) = cut_rhs_.head(cuts_);
    cut_rhs_.swap(rhs_grown);
  }
  cut_cols_.col(cuts_) = a;
  cut_rhs_(cuts_) = b;
  ++cuts_;
}

void BoxLp::set_kappa(double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("BoxLp: kappa must be positive");
  kappa_ = kappa;  // basis stays feasible; only objective coefficients move
}

double BoxLp::obj_coeff(int id) const {
  if (id < 2 * n_) return -kappa_;
  return cut_rhs_(id - 2 * n_);
}

RVec BoxLp::column(int id) const {
  if (id < n_) {
    RVec e = RVec::Zero(n_);
    e(id) = 1.0;
    return e;
  }
  if (id < 2 * n_) {
    RVec e = RVec::Zero(n_);
    e(id - n_) = -1.0;
    return e;
  }
  return cut_cols_.col(id - 2 * n_);
}

RVec BoxLp::multipliers() const {
  RVec gb(n_);
  for (int k = 0; k < n_; ++k) gb(k) = obj_coeff(basis_[static_cast<size_t>(k)]);
  return binv_.transpose() * gb;
}

void BoxLp::reset_basis() {
  basis_.resize(static_cast<size_t>(n_));
  binv_ = RMat::Zero(n_, n_);
  zb_ = RVec(n_);
  for (int i = 0; i < n_; ++i) {
    const bool pos = c_(i) >= 0.0;
    basis_[static_cast<size_t>(i)] = pos ? i : n_ + i;
    binv_(i, i) = pos ? 1.0 : -1.0;
    zb_(i) = std::abs(c_(i));
  }
  basis_ready_ = true;
  pivots_since_refactor_ = 0;
}

void BoxLp::refactor() {
  RMat b(n_, n_);
  for (int k = 0; k < n_; ++k) b.col(k) = column(basis_[static_cast<size_t>(k)]);
  Eigen::PartialPivLU<RMat> lu(b);
  binv_ = lu.inverse();
  const double resid = (b * binv_ - RMat::Identity(n_, n_)).cwiseAbs().maxCoeff();
  bool ok = std::isfinite(resid) && resid <= 1e-7;
  if (ok) {
    zb_ = binv_ * c_;
    for (int k = 0; k < n_; ++k) {
      if (zb_(k) < -1e-7) ok = false;
      if (zb_(k) < 0.0) zb_(k) = 0.0;
    }
  }
  if (!ok) {
    // the slack basis (p/q diagonal) is always feasible; restart from it
    reset_basis();
    return;
  }
  pivots_since_refactor_ = 0;
}

BoxLp::Solution BoxLp::solve() {
  if (!basis_ready_) reset_basis();

  const long iter_cap = 20000 + 200L * (n_ + cuts_);
  long iters = 0;
  int stall = 0;
  bool bland = false;

  while (true) {
    if (++iters > iter_cap) throw NumericalError("BoxLp: iteration limit exceeded");
    const RVec pi = multipliers();

    // pricing
    int entering = -1;
    double best = kOptTol;
    // p and q columns
    for (int i = 0; i < n_ && (!bland || entering < 0); ++i) {
      const double dp = -kappa_ - pi(i);
      const double dq = -kappa_ + pi(i);
      if (dp > best) {
        best = dp;
        entering = i;
        if (bland) break;
      }
      if (dq > best) {
        best = dq;
        entering = n_ + i;
        if (bland) break;
      }
    }
    if (cuts_ > 0 && (!bland || entering < 0)) {
      const RVec red = cut_rhs_.head(cuts_) - cut_cols_.leftCols(cuts_).transpose() * pi;
      for (int j = 0; j < cuts_; ++j) {
        if (red(j) > best) {
          best = red(j);
          entering = 2 * n_ + j;
          if (bland) break;
        }
      }
    }

    if (entering < 0) {
      if (pivots_since_refactor_ > 0) {
        refactor();  // confirm optimality on a fresh inverse
        continue;
      }
      Solution sol;
      sol.x = pi;
      sol.objective = c_.dot(pi);
      sol.iterations = static_cast<int>(iters);
      const double edge = kappa_ * (1.0 - 1e-9) - 1e-12;
      for (int i = 0; i < n_; ++i)
        if (std::abs(pi(i)) >= edge) sol.on_box = true;
      return sol;
    }

    // ratio test
    const RVec w = binv_ * column(entering);
    int leave = -1;
    double theta = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_; ++k) {
      if (w(k) > kPivotTol) {
        const double r = zb_(k) / w(k);
        if (r < theta - 1e-12 ||
            (r < theta + 1e-12 &&
             (leave < 0 || basis_[static_cast<size_t>(k)] < basis_[static_cast<size_t>(leave)]))) {
          theta = r;
          leave = k;
        }
      }
    }
    if (leave < 0)
      throw NumericalError("BoxLp: dual unbounded (primal infeasible) — internal inconsistency");

    // pivot: product-form update of the basis inverse
    zb_ -= theta * w;
    zb_(leave) = theta;
    for (int k = 0; k < n_; ++k)
      if (k != leave && zb_(k) < 0.0) zb_(k) = 0.0;
    const double piv = w(leave);
    binv_.row(leave) /= piv;
    for (int k = 0; k < n_; ++k) {
      if (k == leave) continue;
      const double f = w(k);
      if (f != 0.0) binv_.row(k) -= f * binv_.row(leave);
    }
    basis_[static_cast<size_t>(leave)] = entering;

    if (theta < 1e-13) {
      if (++stall > kStallLimit) bland = true;
    } else {
      stall = 0;
    }
    if (++pivots_since_refactor_ >= kRefactorEvery) refactor();
  }
}

}  // namespace ewit
