#ifndef EWIT_SIMPLEX_HPP
#define EWIT_SIMPLEX_HPP

#include "ewit/types.hpp"

namespace ewit {

// Dense LP
//
//     minimize    c'x
//     subject to  a_j'x >= b_j   (j = 0..cuts-1)
//                 |x_i| <= kappa
//
// solved through its dual
//
//     maximize    b'y - kappa * sum(p + q)
//     subject to  A'y + p - q = c,   y, p, q >= 0
//
// with a revised primal simplex. The dual keeps the basis at n x n however
// many cuts accumulate, every new cut is one new column (so the basis stays
// feasible and solves warm-start), and the simplex multipliers at optimality
// are exactly the primal minimizer x. x = 0 is always primal-feasible here
// (b < 0 in the witness LP), so a dual-unbounded outcome signals an internal
// bug rather than a data condition.
//
// Termination: all reduced costs <= 1e-9. Dantzig pricing with a Bland
// fallback after a run of degenerate pivots; periodic refactorization of the
// basis inverse.
class BoxLp {
 public:
  BoxLp(RVec c, double kappa);

  void add_cut(const RVec& a, double b);
  void set_kappa(double kappa);
  double kappa() const { return kappa_; }
  int cuts() const { return cuts_; }
  int vars() const { return n_; }

  struct Solution {
    RVec x;
    double objective = 0.0;
    bool on_box = false;  // some |x_i| within tolerance of kappa
    int iterations = 0;
  };

  // Optimizes from the current basis (cold start on first call).
  Solution solve();

 private:
  int col_count() const { return 2 * n_ + cuts_; }
  double obj_coeff(int id) const;
  RVec column(int id) const;
  RVec multipliers() const;
  void reset_basis();
  void refactor();

  int n_;
  double kappa_;
  RVec c_;
  RMat cut_cols_;  // n x capacity, first cuts_ columns in use
  RVec cut_rhs_;
  int cuts_ = 0;

  std::vector<int> basis_;  // ids: [0,n) p_i, [n,2n) q_i, [2n,..) cut j
  RMat binv_;
  RVec zb_;
  bool basis_ready_ = false;
  long pivots_since_refactor_ = 0;
};

}  // namespace ewit

#endif  // EWIT_SIMPLEX_HPP
