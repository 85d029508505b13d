#include "flagtoric/linalg.hpp"

#include <cassert>
#include <numeric>

namespace flagtoric {

RatMat rat_mat(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rat(0)));
}

namespace {

// Returns pivot columns; m is reduced to row echelon form in place.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

Rat det(RatMat m) {
  const std::size_t n = m.size();
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::vector<RatVec> kernel(const RatMat& m) {
  if (m.empty()) return {};
  RatMat e = m;
  std::vector<int> pivots = echelon(e);
  const std::size_t cols = m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(cols, Rat(0));
    x[free] = 1;
    // back substitution over the echelon rows
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      const int pc = pivots[i];
      Rat s(0);
      for (std::size_t j = pc + 1; j < cols; ++j) s += e[i][j] * x[j];
      x[pc] = -s / e[i][pc];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat m, RatVec b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  RatMat e = m;
  std::vector<int> pivots = echelon(e);
  for (int c : pivots)
    if (static_cast<std::size_t>(c) == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int pc = pivots[i];
    Rat s = e[i][cols];
    for (std::size_t j = pc + 1; j < cols; ++j) s -= e[i][j] * x[j];
    x[pc] = s / e[i][pc];
  }
  return x;
}

int rank_int(std::vector<IntVec> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  // Fraction-free Gaussian elimination (Bareiss).
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int affine_rank(const std::vector<IntVec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<IntVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank_int(std::move(diffs));
}

IntVec primitive(IntVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::int64_t det_int(std::vector<IntVec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

IntVec hyperplane_normal(const std::vector<IntVec>& pts) {
  const std::size_t d = pts[0].size();
  assert(pts.size() == d);
  // Normal components are signed maximal minors of the (d-1) x d matrix of
  // differences.
  std::vector<IntVec> diff(d - 1, IntVec(d));
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = 0; j < d; ++j) diff[i][j] = pts[i + 1][j] - pts[0][j];
  IntVec normal(d, 0);
  std::int64_t s = 1;
  for (std::size_t skip = 0; skip < d; ++skip) {
    std::vector<IntVec> minor(d - 1, IntVec(d - 1));
    for (std::size_t i = 0; i + 1 < d; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == skip) continue;
        minor[i][jj++] = diff[i][j];
      }
    }
    normal[skip] = s * det_int(std::move(minor));
    s = -s;
  }
  bool zero = true;
  for (auto x : normal) zero = zero && x == 0;
  if (zero) return {};
  return normal;
}

}  // namespace flagtoric
