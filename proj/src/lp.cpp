#include "flagstab/lp.hpp"

#include <stdexcept>

namespace flagstab {

namespace {

// Phase-1 tableau for min(sum of artificials) subject to [A | I] (x, a) = b,
// b >= 0 after row sign flips. Bland's rule on both the entering and leaving
// choices guarantees termination without anti-cycling heuristics.
struct Phase1 {
  std::size_t m, n;                 // constraints, structural variables
  std::vector<QVector> t;           // m rows, n + m + 1 columns (rhs last)
  QVector obj;                      // n + m + 1: reduced costs + objective value
  std::vector<std::size_t> basis;   // column index of the basic variable per row

  Phase1(const QMatrix& a, const QVector& b, const std::vector<int>& row_sign) {
    m = a.nrows();
    n = a.ncols();
    t.assign(m, qvec_zero(n + m + 1));
    basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rat s(row_sign[i]);
      for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a.rows[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = s * b[i];
      basis[i] = n + i;
    }
    // Objective row expresses w = sum of artificials in terms of the
    // non-basic variables: w = sum(rhs) - sum_i(row_i restricted to x).
    obj = qvec_zero(n + m + 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= n + m; ++j) obj[j] += t[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = Rat(1) / t[row][col];
    for (Rat& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rat f = t[i][col];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      const Rat f = obj[col];
      for (std::size_t j = 0; j <= n + m; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Runs to optimality; returns the optimal objective value (>= 0).
  Rat run() {
    for (;;) {
      // Bland: smallest structural column with positive objective-row entry
      // (entering it decreases w). Artificials never re-enter.
      std::size_t enter = n + m;
      for (std::size_t j = 0; j < n; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == n + m) return obj[n + m];
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][n + m] / t[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) throw std::logic_error("phase-1 objective unbounded below zero");
      pivot(leave, enter);
    }
  }
};

void verify_solution(const QMatrix& a, const QVector& b, const QVector& x) {
  for (const Rat& xi : x)
    if (xi < 0) throw std::logic_error("lp internal: negative solution entry");
  const QVector ax = mat_vec(a, x);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (ax[i] != b[i]) throw std::logic_error("lp internal: solution fails equality");
}

void verify_farkas(const QMatrix& a, const QVector& b, const QVector& y) {
  Rat yb = qvec_dot(y, b);
  if (yb <= 0) throw std::logic_error("lp internal: farkas fails y.b > 0");
  for (std::size_t j = 0; j < a.ncols(); ++j)
    if (qvec_dot(y, a.column(j)) > 0) throw std::logic_error("lp internal: farkas fails y.A <= 0");
}

}  // namespace

LpFeasibility lp_feasible_eq_nonneg(const QMatrix& a, const QVector& b) {
  if (a.nrows() != b.size()) throw std::invalid_argument("lp size mismatch");
  const std::size_t m = a.nrows(), n = a.ncols();
  LpFeasibility out;
  if (m == 0) {
    out.feasible = true;
    out.solution = qvec_zero(n);
    return out;
  }
  std::vector<int> row_sign(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) row_sign[i] = -1;
  Phase1 tab(a, b, row_sign);
  const Rat opt = tab.run();
  if (opt == 0) {
    out.feasible = true;
    out.solution = qvec_zero(n);
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] < n) out.solution[tab.basis[i]] = tab.t[i][n + m];
    verify_solution(a, b, out.solution);
  } else {
    // The objective row stores the negated reduced costs; for artificial i
    // that is y_i - 1, so the multiplier is 1 plus the stored entry. Undo the
    // row sign flips to express the certificate against the original system.
    out.feasible = false;
    out.farkas = qvec_zero(m);
    for (std::size_t i = 0; i < m; ++i) out.farkas[i] = Rat(row_sign[i]) * (Rat(1) + tab.obj[n + i]);
    verify_farkas(a, b, out.farkas);
  }
  return out;
}

ConeMembership cone_member(const QVector& target, const std::vector<QVector>& generators) {
  const std::size_t dim = target.size();
  for (const QVector& g : generators)
    if (g.size() != dim) throw std::invalid_argument("cone_member generator dimension mismatch");
  const QMatrix a = QMatrix::from_columns(generators, dim);
  const LpFeasibility lp = lp_feasible_eq_nonneg(a, target);
  ConeMembership out;
  out.inside = lp.feasible;
  if (lp.feasible) {
    out.coefficients = lp.solution;
  } else {
    // y^T A <= 0 and y^T target > 0, so -y separates.
    out.separator = qvec_neg(lp.farkas);
  }
  return out;
}

std::optional<QVector> lp_feasible_system(const QMatrix& ineq_lhs, const QVector& ineq_rhs,
                                          const QMatrix& eq_lhs, const QVector& eq_rhs) {
  const std::size_t mi = ineq_lhs.nrows(), me = eq_lhs.nrows();
  const std::size_t n = mi ? ineq_lhs.ncols() : eq_lhs.ncols();
  if ((mi && ineq_lhs.ncols() != n) || (me && eq_lhs.ncols() != n))
    throw std::invalid_argument("lp_feasible_system column mismatch");
  // x = p - q with p, q >= 0; inequality rows get a slack: N(p-q) - s = rhs.
  QMatrix a = QMatrix::zero(mi + me, 2 * n + mi);
  QVector b = qvec_zero(mi + me);
  for (std::size_t i = 0; i < mi; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.rows[i][j] = ineq_lhs.rows[i][j];
      a.rows[i][n + j] = -ineq_lhs.rows[i][j];
    }
    a.rows[i][2 * n + i] = -1;
    b[i] = ineq_rhs[i];
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.rows[mi + i][j] = eq_lhs.rows[i][j];
      a.rows[mi + i][n + j] = -eq_lhs.rows[i][j];
    }
    b[mi + i] = eq_rhs[i];
  }
  const LpFeasibility lp = lp_feasible_eq_nonneg(a, b);
  if (!lp.feasible) return std::nullopt;
  QVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = lp.solution[j] - lp.solution[n + j];
  return x;
}

}  // namespace flagstab
