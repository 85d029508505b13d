#include "flagtoric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "flagtoric/simplex.hpp"

namespace flagtoric {

int Fan::ray_index(const IntVec& r) const {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == r) return static_cast<int>(i);
  return -1;
}

IntVec quotient_coords(const IntVec& ambient) {
  IntVec c(ambient.size() - 1);
  for (std::size_t j = 0; j + 1 < ambient.size(); ++j)
    c[j] = ambient[j] - ambient[j + 1];
  return c;
}

namespace {

// Pairing of a quotient covector c with a sum-zero direction y:
// sum_k c_k (y_1 + ... + y_k).
std::int64_t quotient_pairing(const IntVec& c, const IntVec& y) {
  std::int64_t acc = 0, prefix = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    prefix += y[k];
    acc += c[k] * prefix;
  }
  return acc;
}

IntVec rat_kernel_to_int(const RatVec& v) {
  Int lcm = 1;
  for (const auto& x : v) {
    Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int val = numerator(v[i]) * (lcm / denominator(v[i]));
    out[i] = static_cast<std::int64_t>(val);
  }
  return primitive(std::move(out));
}

}  // namespace

namespace {

// Inward facet normal as a class in Z^n/Z(1,...,1), written in the basis of
// images of e_1+...+e_i.
IntVec quotient_facet_normal(const LatticePolytope& p, const LatticePolytope::Facet& f) {
  const int n = p.ambient_dim();
  const auto& verts = p.vertices();
  const IntVec& base = verts[f.verts[0]];
  RatMat sys;
  for (std::size_t i = 1; i < f.verts.size(); ++i) {
    RatVec row(n - 1);
    std::int64_t prefix = 0;
    for (int k = 0; k < n - 1; ++k) {
      prefix += verts[f.verts[i]][k] - base[k];
      row[k] = Rat(prefix);
    }
    sys.push_back(std::move(row));
  }
  std::vector<RatVec> ker = kernel(sys);
  if (ker.size() != 1)
    throw std::runtime_error("facet normal is not unique in the quotient lattice");
  IntVec ray = rat_kernel_to_int(ker[0]);
  std::set<int> on(f.verts.begin(), f.verts.end());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (on.count(static_cast<int>(i))) continue;
    IntVec y(n);
    for (int j = 0; j < n; ++j) y[j] = verts[i][j] - base[j];
    if (quotient_pairing(ray, y) < 0)
      for (auto& x : ray) x = -x;
    break;
  }
  return ray;
}

}  // namespace

Fan normal_fan(const LatticePolytope& p) {
  if (p.dim() == 0) throw std::invalid_argument("normal fan needs dimension >= 1");
  const int n = p.ambient_dim();
  const auto& verts = p.vertices();

  bool constant_sum = true;
  std::int64_t sum0 = 0;
  for (int j = 0; j < n; ++j) sum0 += verts[0][j];
  for (const auto& v : verts) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += v[j];
    if (s != sum0) constant_sum = false;
  }
  const bool quotient = constant_sum && p.dim() == n - 1;
  if (!quotient && p.dim() != n)
    throw std::invalid_argument(
        "normal fan needs a full-dimensional polytope or one in a constant-sum hyperplane");

  Fan fan;
  fan.rank = p.dim();
  fan.complete = true;

  const auto& facets = p.facets();
  std::vector<int> facet_ray(facets.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    IntVec ray = quotient ? quotient_facet_normal(p, facets[fi])
                          : primitive(facets[fi].normal);
    int idx = fan.ray_index(ray);
    if (idx < 0) {
      idx = static_cast<int>(fan.rays.size());
      fan.rays.push_back(std::move(ray));
    }
    facet_ray[fi] = idx;
  }

  // maximal cone per vertex: normals of the incident facets
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::vector<int> cone;
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
      if (std::find(facets[fi].verts.begin(), facets[fi].verts.end(),
                    static_cast<int>(v)) != facets[fi].verts.end())
        cone.push_back(facet_ray[fi]);
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

bool fan_is_smooth(const Fan& f) {
  for (const auto& cone : f.cones) {
    if (static_cast<int>(cone.size()) != f.rank) return false;
    std::vector<IntVec> m;
    for (int r : cone) m.push_back(f.rays[r]);
    const std::int64_t d = det_int(std::move(m));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool fan_is_complete_simplicial(const Fan& f) {
  std::map<std::vector<int>, int> walls;
  for (const auto& cone : f.cones) {
    if (static_cast<int>(cone.size()) != f.rank) return false;
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<int> wall;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != skip) wall.push_back(cone[i]);
      ++walls[wall];
    }
  }
  for (const auto& [wall, cnt] : walls)
    if (cnt != 2) return false;
  return !f.cones.empty();
}

bool fan_interiors_disjoint(const Fan& f) {
  // Two full-dimensional cones share interior points iff an LP finds x with
  // strictly positive slack in both generator descriptions; test by
  // maximizing nothing over combined strict systems via an epsilon trick on
  // sampled facet descriptions. At desk scale a direct check suffices:
  // interior overlap of cone(A) and cone(B) is nonempty iff there is a point
  // in cone(A) interior that lies in cone(B) interior; we sample via LP on
  // barycenters of generator subsets.
  const std::size_t k = f.cones.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      // strict feasibility: x = A la = B mu, sum(la) = 1, la, mu >= eps
      // handled as: la,mu >= 1 (cones are scale invariant)
      const auto& ca = f.cones[a];
      const auto& cb = f.cones[b];
      const int na = static_cast<int>(ca.size());
      const int nb = static_cast<int>(cb.size());
      RatMat A(f.rank, RatVec(na + nb, Rat(0)));
      RatVec rhs(f.rank, Rat(0));
      for (int i = 0; i < f.rank; ++i) {
        for (int j = 0; j < na; ++j) A[i][j] = Rat(f.rays[ca[j]][i]);
        for (int j = 0; j < nb; ++j) A[i][na + j] = Rat(-f.rays[cb[j]][i]);
      }
      // substitute la = 1 + la', mu = 1 + mu' with la', mu' >= 0
      RatVec shift(f.rank, Rat(0));
      for (int i = 0; i < f.rank; ++i) {
        Rat s(0);
        for (int j = 0; j < na; ++j) s += Rat(f.rays[ca[j]][i]);
        for (int j = 0; j < nb; ++j) s -= Rat(f.rays[cb[j]][i]);
        rhs[i] = -s;
      }
      if (solve_lp(A, rhs, RatVec(na + nb, Rat(0))).status == LpStatus::optimal)
        return false;
    }
  return true;
}

namespace {

bool is_face(const Fan& f, const std::vector<int>& rays) {
  for (const auto& cone : f.cones)
    if (std::includes(cone.begin(), cone.end(), rays.begin(), rays.end()))
      return true;
  return false;
}

void subsets_rec(int from, int k, int limit, std::vector<int>& cur,
                 const Fan& f, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    // minimal non-face: not a face, every proper subset a face
    if (is_face(f, cur)) return;
    for (std::size_t skip = 0; skip < cur.size(); ++skip) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (i != skip) sub.push_back(cur[i]);
      if (!is_face(f, sub)) return;
    }
    out.push_back(cur);
    return;
  }
  for (int r = from; r < limit; ++r) {
    cur.push_back(r);
    subsets_rec(r + 1, k, limit, cur, f, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> primitive_collections(const Fan& f) {
  if (!fan_is_smooth(f)) throw std::invalid_argument("primitive collections need a smooth fan");
  std::vector<std::vector<int>> out;
  const int nrays = static_cast<int>(f.rays.size());
  for (int k = 2; k <= f.rank + 1; ++k) {
    std::vector<int> cur;
    subsets_rec(0, k, nrays, cur, f, out);
  }
  return out;
}

std::int64_t batyrev_degree(const Fan& f, const std::vector<int>& collection) {
  IntVec s(f.rank, 0);
  for (int r : collection)
    for (int i = 0; i < f.rank; ++i) s[i] += f.rays[r][i];
  bool zero = true;
  for (auto x : s) zero = zero && x == 0;
  const std::int64_t ell = static_cast<std::int64_t>(collection.size());
  if (zero) return ell;
  // unique cone containing s in its relative interior; solve on each maximal
  // cone and keep the nonnegative representation
  RatVec target(f.rank);
  for (int i = 0; i < f.rank; ++i) target[i] = Rat(s[i]);
  for (const auto& cone : f.cones) {
    RatMat A(f.rank, RatVec(cone.size()));
    for (int i = 0; i < f.rank; ++i)
      for (std::size_t j = 0; j < cone.size(); ++j) A[i][j] = Rat(f.rays[cone[j]][i]);
    auto sol = solve(A, target);
    if (!sol) continue;
    bool nonneg = true;
    Rat total(0);
    for (const auto& a : *sol) {
      if (a < 0) nonneg = false;
      total += a;
    }
    if (!nonneg) continue;
    Rat deg = Rat(ell) - total;
    if (denominator(deg) != 1)
      throw std::runtime_error("non-integral primitive relation degree");
    return static_cast<std::int64_t>(numerator(deg));
  }
  throw std::runtime_error("primitive collection sum lies in no cone; fan not complete?");
}

bool is_fano(const Fan& f) {
  for (const auto& pc : primitive_collections(f))
    if (batyrev_degree(f, pc) <= 0) return false;
  return true;
}

bool is_weak_fano(const Fan& f) {
  for (const auto& pc : primitive_collections(f))
    if (batyrev_degree(f, pc) < 0) return false;
  return true;
}

namespace {

std::vector<int> incidence_profile(const Fan& f) {
  std::vector<int> deg(f.rays.size(), 0);
  for (const auto& cone : f.cones)
    for (int r : cone) ++deg[r];
  return deg;
}

// linearly independent subset of the cone's rays spanning Q^rank
std::vector<int> independent_subset(const Fan& f, const std::vector<int>& cone) {
  std::vector<int> chosen;
  std::vector<IntVec> acc;
  for (int r : cone) {
    acc.push_back(f.rays[r]);
    if (rank_int(acc) == static_cast<int>(acc.size())) chosen.push_back(r);
    else acc.pop_back();
    if (static_cast<int>(chosen.size()) == f.rank) break;
  }
  return chosen;
}

}  // namespace

bool fan_isomorphic(const Fan& a, const Fan& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch in fan comparison");
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size()) return false;
  {
    std::vector<std::size_t> sa, sb;
    for (const auto& c : a.cones) sa.push_back(c.size());
    for (const auto& c : b.cones) sb.push_back(c.size());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> da = incidence_profile(a), db = incidence_profile(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
  }
  if (a.cones.empty()) return true;
  const int r = a.rank;
  const std::vector<int>& sigma = a.cones[0];
  std::vector<int> base = independent_subset(a, sigma);
  if (static_cast<int>(base.size()) != r)
    throw std::invalid_argument("maximal cone is not full dimensional");

  RatMat B(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) B[i][j] = Rat(a.rays[base[j]][i]);

  std::set<std::vector<int>> a_cones(a.cones.begin(), a.cones.end());
  std::set<std::vector<int>> b_cones(b.cones.begin(), b.cones.end());
  std::set<IntVec> b_rays(b.rays.begin(), b.rays.end());

  for (const auto& tau : b.cones) {
    if (tau.size() != sigma.size()) continue;
    std::vector<int> sel(r);
    std::vector<bool> used(tau.size(), false);
    // ordered injections of base into tau's rays
    std::vector<int> stack;
    std::function<bool(int)> rec = [&](int pos) -> bool {
      if (pos == r) {
        // M with M * base_j = tau_sel_j: columns solve via B
        RatMat M(r, RatVec(r));
        // Solve M B = T  =>  M = T B^{-1}; compute column by column of B^{-1}
        // using solve on transposed systems.
        // Build T
        RatMat T(r, RatVec(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) T[i][j] = Rat(b.rays[tau[sel[j]]][i]);
        // For each row i of M: M_i B = T_i  =>  B^T M_i^T = T_i^T
        RatMat Bt(r, RatVec(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) Bt[i][j] = B[j][i];
        for (int i = 0; i < r; ++i) {
          RatVec rhs(r);
          for (int j = 0; j < r; ++j) rhs[j] = T[i][j];
          auto row = solve(Bt, rhs);
          if (!row) return false;
          M[i] = *row;
        }
        // integrality and unimodularity
        RatMat Mcopy = M;
        Rat d = det(Mcopy);
        if (d != 1 && d != -1) return false;
        for (const auto& row : M)
          for (const auto& x : row)
            if (denominator(x) != 1) return false;
        // map rays
        std::vector<int> image(a.rays.size());
        for (std::size_t k = 0; k < a.rays.size(); ++k) {
          IntVec img(r, 0);
          for (int i = 0; i < r; ++i) {
            Rat acc(0);
            for (int j = 0; j < r; ++j) acc += M[i][j] * Rat(a.rays[k][j]);
            img[i] = static_cast<std::int64_t>(numerator(acc));
          }
          if (!b_rays.count(img)) return false;
          image[k] = b.ray_index(img);
        }
        std::set<int> distinct(image.begin(), image.end());
        if (distinct.size() != image.size()) return false;
        // cones map onto cones
        std::set<std::vector<int>> mapped;
        for (const auto& cone : a.cones) {
          std::vector<int> mc;
          for (int x : cone) mc.push_back(image[x]);
          std::sort(mc.begin(), mc.end());
          if (!b_cones.count(mc)) return false;
          mapped.insert(std::move(mc));
        }
        return mapped.size() == b_cones.size();
      }
      for (std::size_t t = 0; t < tau.size(); ++t) {
        if (used[t]) continue;
        used[t] = true;
        sel[pos] = static_cast<int>(t);
        if (rec(pos + 1)) return true;
        used[t] = false;
      }
      return false;
    };
    if (rec(0)) return true;
  }
  return false;
}

}  // namespace flagtoric
