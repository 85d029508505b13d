#include "flagtoric/orbit.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

#include "flagtoric/simplex.hpp"

namespace flagtoric {

FlagMatrix::FlagMatrix(RatMat entries) : m_(std::move(entries)) {
  n_ = static_cast<int>(m_.size());
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("flag matrix must be square");
  if (det(m_) == 0) throw std::invalid_argument("flag matrix is singular");
}

FlagMatrix FlagMatrix::shifted_by(const Perm& u) const {
  RatMat out(n_, RatVec(n_));
  for (int i = 1; i <= n_; ++i) out[i - 1] = m_[u(i) - 1];
  return FlagMatrix(std::move(out));
}

bool PluckerSupport::contains(int d, const std::vector<int>& tuple) const {
  const auto& v = sets[d - 1];
  return std::binary_search(v.begin(), v.end(), tuple);
}

namespace {

Rat minor(const RatMat& m, const std::vector<int>& rows, int d) {
  RatMat sub(rows.size(), RatVec(d));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < d; ++j) sub[i][j] = m[rows[i]][j];
  return det(std::move(sub));
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PluckerSupport plucker_support(const FlagMatrix& x) {
  const int n = x.n();
  PluckerSupport out;
  out.n = n;
  out.sets.resize(n);
  for (int d = 1; d <= n; ++d) {
    combinations(n, d, [&](const std::vector<int>& rows) {
      if (minor(x.entries(), rows, d) != 0) {
        std::vector<int> tuple(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) tuple[i] = rows[i] + 1;
        out.sets[d - 1].push_back(std::move(tuple));
      }
    });
    std::sort(out.sets[d - 1].begin(), out.sets[d - 1].end());
  }
  return out;
}

CoxeterSubset fixed_points(const FlagMatrix& x) {
  const int n = x.n();
  const PluckerSupport supp = plucker_support(x);
  std::vector<Perm> elems;
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    std::vector<int> prefix;
    for (int d = 1; d <= n && ok; ++d) {
      prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), w(d)), w(d));
      if (!supp.contains(d, prefix)) ok = false;
    }
    if (ok) elems.push_back(w);
  }
  return CoxeterSubset(std::move(elems));
}

LatticePolytope moment_polytope(const FlagMatrix& x) {
  const CoxeterSubset fp = fixed_points(x);
  std::vector<IntVec> verts;
  std::vector<std::string> labels;
  for (const auto& u : fp.elements()) {
    verts.push_back(moment_point(u));
    labels.push_back(u.str());
  }
  return LatticePolytope(std::move(verts), std::move(labels));
}

Perm opposite_cell_of(const FlagMatrix& y) {
  const int n = y.n();
  // r(i, j) = rank of the upper-left i x j block; z(j) is the first row where
  // column j increases the rank.
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      RatMat sub(i, RatVec(j));
      for (int a = 0; a < i; ++a)
        for (int b = 0; b < j; ++b) sub[a][b] = y.entries()[a][b];
      r[i][j] = rank(std::move(sub));
    }
  std::vector<int> img(n);
  for (int j = 1; j <= n; ++j) {
    int row = 0;
    for (int i = 1; i <= n; ++i)
      if (r[i][j] > r[i][j - 1]) {
        row = i;
        break;
      }
    img[j - 1] = row;
  }
  return Perm(std::move(img));
}

Perm geometric_retraction(const FlagMatrix& x, const Perm& u) {
  return u * opposite_cell_of(x.shifted_by(u));
}

Perm OrbitFan::target_of(const Perm& u) const {
  for (const auto& [y, us] : fibers)
    if (std::binary_search(us.begin(), us.end(), u)) return y;
  throw std::invalid_argument("element not covered by the fan");
}

bool OrbitFan::fibers_connected() const {
  for (const auto& [y, us] : fibers) {
    if (us.size() <= 1) continue;
    std::set<Perm> todo(us.begin() + 1, us.end());
    std::queue<Perm> q;
    q.push(us[0]);
    while (!q.empty()) {
      Perm cur = q.front();
      q.pop();
      for (int i = 1; i < n; ++i) {
        Perm nb = cur * Perm::s(n, i);  // adjacent chamber across one wall
        auto it = todo.find(nb);
        if (it != todo.end()) {
          todo.erase(it);
          q.push(nb);
        }
      }
    }
    if (!todo.empty()) return false;
  }
  return true;
}

namespace {

// Chamber of u: directions with coordinates increasing along u's one-line;
// generated in the quotient lattice by -(e_{u(1)}+...+e_{u(k)}).
std::vector<IntVec> chamber_rays(const Perm& u) {
  const int n = u.n();
  std::vector<IntVec> rays;
  for (int k = 1; k < n; ++k) {
    IntVec ambient(n, 0);
    for (int i = 1; i <= k; ++i) ambient[u(i) - 1] = -1;
    rays.push_back(primitive(quotient_coords(ambient)));
  }
  return rays;
}

// A point interior to the chamber of v.
RatVec chamber_interior_point(const Perm& v) {
  const int n = v.n();
  IntVec ambient(n);
  for (int i = 1; i <= n; ++i) ambient[v(i) - 1] = i;  // increasing along v
  IntVec q = quotient_coords(ambient);
  RatVec out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = Rat(q[i]);
  return out;
}

}  // namespace

bool OrbitFan::fibers_convex() const {
  std::vector<Perm> all = all_perms(n);
  for (const auto& [y, us] : fibers) {
    if (us.size() <= 1) continue;
    std::vector<RatVec> gens;
    for (const auto& u : us)
      for (const auto& ray : chamber_rays(u)) {
        RatVec g(ray.size());
        for (std::size_t i = 0; i < ray.size(); ++i) g[i] = Rat(ray[i]);
        gens.push_back(std::move(g));
      }
    for (const auto& v : all) {
      if (std::binary_search(us.begin(), us.end(), v)) continue;
      if (in_cone(gens, chamber_interior_point(v))) return false;
    }
  }
  return true;
}

Fan OrbitFan::to_fan() const {
  Fan fan;
  fan.rank = n - 1;
  fan.complete = true;
  for (const auto& [y, us] : fibers) {
    std::vector<int> cone;
    for (const auto& u : us)
      for (const auto& ray : chamber_rays(u)) {
        int idx = fan.ray_index(ray);
        if (idx < 0) {
          idx = static_cast<int>(fan.rays.size());
          fan.rays.push_back(ray);
        }
        cone.push_back(idx);
      }
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

OrbitFan orbit_fan(const FlagMatrix& x) {
  OrbitFan out;
  out.n = x.n();
  for (const Perm& u : all_perms(x.n()))
    out.fibers[geometric_retraction(x, u)].push_back(u);
  for (auto& [y, us] : out.fibers) std::sort(us.begin(), us.end());
  return out;
}

FlagMatrix random_flag(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  while (true) {
    RatMat m(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Rat(num(rng), den(rng));
    if (det(m) != 0) return FlagMatrix(std::move(m));
  }
}

}  // namespace flagtoric
