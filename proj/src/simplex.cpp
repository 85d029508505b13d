#include "flagtoric/simplex.hpp"

#include <stdexcept>

namespace flagtoric {

namespace {

// Dense tableau: rows[r] holds the constraint coefficients, rhs[r] the
// right-hand side, basis[r] the basic column of row r.
struct Tableau {
  RatMat rows;
  RatVec rhs;
  std::vector<int> basis;

  void pivot(int r, int c) {
    const Rat piv = rows[r][c];
    for (auto& x : rows[r]) x /= piv;
    rhs[r] /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Bland's rule; cost is the full cost vector over columns.
  // Returns false when unbounded.
  bool run(const RatVec& cost, const std::vector<bool>& allowed) {
    const int m = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(cost.size());
    while (true) {
      RatVec red = cost;
      for (int r = 0; r < m; ++r) {
        if (cost[basis[r]] == 0) continue;
        const Rat f = cost[basis[r]];
        for (int j = 0; j < ncols; ++j) red[j] -= f * rows[r][j];
      }
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[j] && red[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m; ++r) {
        if (rows[r][enter] <= 0) continue;
        const Rat ratio = rhs[r] / rows[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(RatMat A, RatVec b, RatVec c) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());
  for (int r = 0; r < m; ++r)
    if (b[r] < 0) {
      for (auto& x : A[r]) x = -x;
      b[r] = -b[r];
    }

  Tableau t;
  t.rows = std::move(A);
  t.rhs = std::move(b);
  t.basis.resize(m);
  // Phase 1: artificial variable per row.
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < m; ++i) t.rows[i].push_back(i == r ? Rat(1) : Rat(0));
    t.basis[r] = n + r;
  }
  RatVec cost1(n + m, Rat(0));
  for (int r = 0; r < m; ++r) cost1[n + r] = 1;
  std::vector<bool> allowed(n + m, true);
  t.run(cost1, allowed);
  Rat phase1(0);
  for (int r = 0; r < m; ++r)
    if (t.basis[r] >= n) phase1 += t.rhs[r];
  if (phase1 != 0) return {LpStatus::infeasible, Rat(0), {}};
  // Drive leftover artificials out of the basis (or the row is redundant and
  // stays at zero; exclude artificial columns from now on).
  for (int r = 0; r < m; ++r) {
    if (t.basis[r] < n) continue;
    int c2 = -1;
    for (int j = 0; j < n; ++j)
      if (t.rows[r][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 >= 0) t.pivot(r, c2);
  }
  for (int j = n; j < n + m; ++j) allowed[j] = false;

  RatVec cost2(n + m, Rat(0));
  for (int j = 0; j < n; ++j) cost2[j] = c[j];
  if (!t.run(cost2, allowed)) return {LpStatus::unbounded, Rat(0), {}};

  RatVec x(n, Rat(0));
  Rat obj(0);
  for (int r = 0; r < m; ++r)
    if (t.basis[r] < n) x[t.basis[r]] = t.rhs[r];
  for (int j = 0; j < n; ++j) obj += c[j] * x[j];
  return {LpStatus::optimal, obj, std::move(x)};
}

std::optional<RatVec> feasible_point(const RatMat& ineq_A, const RatVec& ineq_b,
                                     const RatMat& eq_A, const RatVec& eq_b) {
  const int nfree =
      !ineq_A.empty() ? static_cast<int>(ineq_A[0].size())
                      : (!eq_A.empty() ? static_cast<int>(eq_A[0].size()) : 0);
  const int mi = static_cast<int>(ineq_A.size());
  const int me = static_cast<int>(eq_A.size());
  // Free x written as xp - xm; slack per inequality.
  const int ncols = 2 * nfree + mi;
  RatMat A(mi + me, RatVec(ncols, Rat(0)));
  RatVec b(mi + me);
  for (int r = 0; r < mi; ++r) {
    for (int j = 0; j < nfree; ++j) {
      A[r][j] = ineq_A[r][j];
      A[r][nfree + j] = -ineq_A[r][j];
    }
    A[r][2 * nfree + r] = 1;
    b[r] = ineq_b[r];
  }
  for (int r = 0; r < me; ++r) {
    for (int j = 0; j < nfree; ++j) {
      A[mi + r][j] = eq_A[r][j];
      A[mi + r][nfree + j] = -eq_A[r][j];
    }
    b[mi + r] = eq_b[r];
  }
  LpResult res = solve_lp(std::move(A), std::move(b), RatVec(ncols, Rat(0)));
  if (res.status != LpStatus::optimal) return std::nullopt;
  RatVec x(nfree);
  for (int j = 0; j < nfree; ++j) x[j] = res.solution[j] - res.solution[nfree + j];
  return x;
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  const int d = static_cast<int>(p.size());
  const int k = static_cast<int>(points.size());
  RatMat A(d + 1, RatVec(k));
  RatVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) A[i][j] = points[j][i];
    b[i] = p[i];
  }
  for (int j = 0; j < k; ++j) A[d][j] = 1;
  b[d] = 1;
  return solve_lp(std::move(A), std::move(b), RatVec(k, Rat(0))).status ==
         LpStatus::optimal;
}

bool in_cone(const std::vector<RatVec>& generators, const RatVec& p) {
  const int d = static_cast<int>(p.size());
  const int k = static_cast<int>(generators.size());
  RatMat A(d, RatVec(k, Rat(0)));
  RatVec b(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) A[i][j] = generators[j][i];
    b[i] = p[i];
  }
  return solve_lp(std::move(A), std::move(b), RatVec(k, Rat(0))).status ==
         LpStatus::optimal;
}

}  // namespace flagtoric
