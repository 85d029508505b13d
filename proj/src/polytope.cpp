#include "flagtoric/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "flagtoric/simplex.hpp"

namespace flagtoric {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
bool get_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void and_bits(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}
int count_bits(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}
std::vector<int> bits_to_list(const Bits& b) {
  std::vector<int> out;
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t x = b[w]; x; x &= x - 1)
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
  return out;
}

struct HyperplaneKey {
  IntVec normal;
  std::int64_t offset;
  bool operator==(const HyperplaneKey&) const = default;
};

struct HyperplaneKeyHash {
  std::size_t operator()(const HyperplaneKey& k) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    for (auto v : k.normal) mix(v);
    mix(k.offset);
    return h;
  }
};

// True when all points are permutations of one common strictly increasing
// vector; such point sets are in convex position.
bool common_orbit_fast_path(const std::vector<IntVec>& pts) {
  if (pts.empty()) return false;
  IntVec base = pts[0];
  std::sort(base.begin(), base.end());
  for (std::size_t i = 1; i < base.size(); ++i)
    if (base[i - 1] >= base[i]) return false;
  for (const auto& p : pts) {
    IntVec s = p;
    std::sort(s.begin(), s.end());
    if (s != base) return false;
  }
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<IntVec> vertices,
                                 std::vector<std::string> labels)
    : verts_(std::move(vertices)), labels_(std::move(labels)) {
  if (verts_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  ambient_ = static_cast<int>(verts_[0].size());
  for (const auto& v : verts_)
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("inconsistent ambient dimension");
  if (!labels_.empty() && labels_.size() != verts_.size())
    throw std::invalid_argument("label count mismatch");

  {
    std::set<IntVec> seen(verts_.begin(), verts_.end());
    if (seen.size() != verts_.size())
      throw std::invalid_argument("duplicate vertices");
  }
  dim_ = affine_rank(verts_);

  // Projection to dim_ coordinates in which the polytope stays full
  // dimensional: pivot columns of the difference matrix.
  if (dim_ == 0) {
    proj_cols_ = {};
    proj_.assign(verts_.size(), IntVec{});
  } else {
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < verts_.size(); ++i) {
      IntVec d(ambient_);
      for (int j = 0; j < ambient_; ++j) d[j] = verts_[i][j] - verts_[0][j];
      diffs.push_back(std::move(d));
    }
    for (int c = 0; c < ambient_ && static_cast<int>(proj_cols_.size()) < dim_; ++c) {
      // greedily keep columns while they stay independent
      std::vector<IntVec> cols;
      for (int used : proj_cols_) {
        IntVec col(diffs.size());
        for (std::size_t r = 0; r < diffs.size(); ++r) col[r] = diffs[r][used];
        cols.push_back(std::move(col));
      }
      IntVec col(diffs.size());
      for (std::size_t r = 0; r < diffs.size(); ++r) col[r] = diffs[r][c];
      cols.push_back(std::move(col));
      if (rank_int(cols) == static_cast<int>(cols.size())) proj_cols_.push_back(c);
    }
    proj_.reserve(verts_.size());
    for (const auto& v : verts_) {
      IntVec p(dim_);
      for (int k = 0; k < dim_; ++k) p[k] = v[proj_cols_[k]];
      proj_.push_back(std::move(p));
    }
  }

  // Extreme-point verification. Points of a common torus orbit are always in
  // convex position; anything else is checked by LP at desk scale.
  if (!common_orbit_fast_path(verts_) && verts_.size() > 1) {
    if (verts_.size() > 512)
      throw std::invalid_argument(
          "extremality verification beyond desk scale; supply an orbit-style vertex set");
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      std::vector<RatVec> others;
      for (std::size_t j = 0; j < proj_.size(); ++j)
        if (j != i) others.push_back(to_rat(proj_[j]));
      if (in_convex_hull(others, to_rat(proj_[i])))
        throw std::invalid_argument("vertex " + std::to_string(i) +
                                    " is not an extreme point");
    }
  }
}

int LatticePolytope::vertex_index(const IntVec& p) const {
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == p) return static_cast<int>(i);
  return -1;
}

void LatticePolytope::ensure_facets() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->facets) return;
  std::vector<Facet> out;
  const int d = dim_;
  const int m = static_cast<int>(verts_.size());
  if (d < 1) {
    cache_->facets = std::move(out);
    return;
  }

  // Brute force over d-subsets of vertices spanning hyperplanes in the
  // projected coordinates, with memoized dedupe.
  double combos = 1;
  for (int i = 0; i < d; ++i) combos *= static_cast<double>(m - i) / (i + 1);
  if (combos > 2.5e8)
    throw std::runtime_error("facet enumeration beyond desk scale");

  std::unordered_set<HyperplaneKey, HyperplaneKeyHash> seen;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::vector<IntVec> pts(d);
  while (true) {
    for (int i = 0; i < d; ++i) pts[i] = proj_[idx[i]];
    IntVec normal = hyperplane_normal(pts);
    if (!normal.empty()) {
      normal = primitive(std::move(normal));
      std::int64_t offset = 0;
      for (int j = 0; j < d; ++j) offset += normal[j] * pts[0][j];
      // canonical sign: first nonzero entry positive
      for (auto v : normal) {
        if (v == 0) continue;
        if (v < 0) {
          for (auto& x : normal) x = -x;
          offset = -offset;
        }
        break;
      }
      HyperplaneKey key{normal, offset};
      if (seen.insert(key).second) {
        bool pos = false, neg = false;
        std::vector<int> on;
        for (int i = 0; i < m; ++i) {
          std::int64_t s = -offset;
          for (int j = 0; j < d; ++j) s += normal[j] * proj_[i][j];
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else on.push_back(i);
          if (pos && neg) break;
        }
        if (!(pos && neg)) {
          Facet f;
          f.normal = normal;
          f.offset = offset;
          if (neg) {
            for (auto& x : f.normal) x = -x;
            f.offset = -f.offset;
          }
          f.verts = std::move(on);
          out.push_back(std::move(f));
        }
      }
    }
    // next combination
    int i = d - 1;
    while (i >= 0 && idx[i] == m - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  cache_->facets = std::move(out);
}

const std::vector<LatticePolytope::Facet>& LatticePolytope::facets() const {
  if (dim_ < 1) throw std::invalid_argument("facets need dimension >= 1");
  ensure_facets();
  return *cache_->facets;
}

std::vector<int> LatticePolytope::minimal_face(const std::vector<int>& contains) const {
  // Intersection of all facets containing the given vertices; the whole
  // vertex set when no facet does.
  const auto& fs = *cache_->facets;
  const int m = static_cast<int>(verts_.size());
  Bits mask = make_bits(m);
  for (int i = 0; i < m; ++i) set_bit(mask, i);
  for (const auto& f : fs) {
    Bits fb = make_bits(m);
    for (int v : f.verts) set_bit(fb, v);
    bool all = true;
    for (int v : contains)
      if (!get_bit(fb, v)) {
        all = false;
        break;
      }
    if (all) and_bits(mask, fb);
  }
  return bits_to_list(mask);
}

void LatticePolytope::ensure_edges() const {
  ensure_facets();
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->edges) return;
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(verts_.size());
  if (dim_ >= 1) {
    const auto& fs = *cache_->facets;
    std::vector<Bits> fbits;
    fbits.reserve(fs.size());
    for (const auto& f : fs) {
      Bits b = make_bits(m);
      for (int v : f.verts) set_bit(b, v);
      fbits.push_back(std::move(b));
    }
    Bits all = make_bits(m);
    for (int i = 0; i < m; ++i) set_bit(all, i);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        Bits cur = all;
        for (std::size_t k = 0; k < fs.size(); ++k)
          if (get_bit(fbits[k], u) && get_bit(fbits[k], v)) and_bits(cur, fbits[k]);
        if (count_bits(cur) == 2) out.emplace_back(u, v);
      }
  }
  cache_->edges = std::move(out);
}

const std::vector<std::pair<int, int>>& LatticePolytope::edges() const {
  if (verts_.size() < 2) throw std::invalid_argument("edges need at least two vertices");
  ensure_edges();
  return *cache_->edges;
}

void LatticePolytope::ensure_faces() const {
  ensure_facets();
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->faces) return;
  const int m = static_cast<int>(verts_.size());
  std::vector<Bits> fbits;
  for (const auto& f : *cache_->facets) {
    Bits b = make_bits(m);
    for (int v : f.verts) set_bit(b, v);
    fbits.push_back(std::move(b));
  }
  Bits all = make_bits(m);
  for (int i = 0; i < m; ++i) set_bit(all, i);

  std::set<Bits> known;
  known.insert(all);
  std::vector<Bits> frontier{all};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& face : frontier)
      for (const auto& fb : fbits) {
        Bits g = face;
        and_bits(g, fb);
        if (count_bits(g) == 0) continue;
        if (known.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }

  std::vector<Face> out;
  for (const auto& b : known) {
    Face f;
    f.verts = bits_to_list(b);
    std::vector<IntVec> pts;
    for (int v : f.verts) pts.push_back(proj_[v]);
    f.dim = affine_rank(pts);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  cache_->faces = std::move(out);
}

const std::vector<LatticePolytope::Face>& LatticePolytope::faces() const {
  ensure_faces();
  return *cache_->faces;
}

IntPoly LatticePolytope::f_polynomial() const {
  std::vector<std::int64_t> cnt(dim_ + 1, 0);
  if (dim_ == 0) return IntPoly({1});
  for (const auto& f : faces()) ++cnt[f.dim];
  return IntPoly(std::move(cnt));
}

IntPoly LatticePolytope::h_polynomial() const { return f_polynomial().shift_arg(-1); }

std::vector<int> LatticePolytope::neighbors(int vertex) const {
  std::vector<int> out;
  if (verts_.size() < 2) return out;
  for (const auto& [a, b] : edges()) {
    if (a == vertex) out.push_back(b);
    if (b == vertex) out.push_back(a);
  }
  return out;
}

int LatticePolytope::edge_degree(int vertex) const {
  return static_cast<int>(neighbors(vertex).size());
}

bool LatticePolytope::is_simple_at(int vertex) const {
  return edge_degree(vertex) == dim_;
}

bool LatticePolytope::is_simple() const {
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (!is_simple_at(static_cast<int>(i))) return false;
  return true;
}

bool LatticePolytope::is_cube() const {
  if (dim_ >= 62 || num_vertices() != (1ull << dim_)) return false;
  if (dim_ <= 1) return true;
  if (!is_simple()) return false;
  for (const auto& f : faces())
    if (f.dim == 2 && f.verts.size() != 4) return false;
  return true;
}

bool LatticePolytope::edge_directions_are_roots() const {
  if (verts_.size() < 2) return true;
  for (const auto& [a, b] : edges()) {
    int nonzero = 0;
    std::int64_t c = 0;
    bool ok = true;
    for (int j = 0; j < ambient_; ++j) {
      const std::int64_t d = verts_[b][j] - verts_[a][j];
      if (d == 0) continue;
      ++nonzero;
      if (nonzero == 1) c = d;
      else if (nonzero == 2 && d != -c) ok = false;
      else if (nonzero > 2) ok = false;
    }
    if (!(ok && nonzero == 2)) return false;
  }
  return true;
}

LatticePolytope::AscentProfile LatticePolytope::ascent_profile(const IntVec& a) const {
  if (static_cast<int>(a.size()) != ambient_)
    throw std::invalid_argument("functional dimension mismatch");
  std::vector<std::int64_t> h(verts_.size(), 0);
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (int j = 0; j < ambient_; ++j) h[i] += a[j] * verts_[i][j];
  const auto& es = edges();
  for (const auto& [u, v] : es)
    if (h[u] == h[v])
      throw std::invalid_argument("functional is not generic: an edge is level");

  AscentProfile prof;
  prof.ascents.assign(verts_.size(), 0);
  for (std::size_t u = 0; u < verts_.size(); ++u) {
    std::vector<int> asc;
    for (int v : neighbors(static_cast<int>(u)))
      if (h[v] > h[u]) asc.push_back(v);
    prof.ascents[u] = static_cast<int>(asc.size());
    if (asc.empty()) continue;
    // ascending edge directions must be independent and span a face in which
    // u sees exactly these edges
    std::vector<IntVec> dirs;
    for (int v : asc) {
      IntVec d(dim_);
      for (int k = 0; k < dim_; ++k) d[k] = proj_[v][k] - proj_[u][k];
      dirs.push_back(std::move(d));
    }
    if (rank_int(dirs) != static_cast<int>(asc.size())) {
      prof.face_condition = false;
      continue;
    }
    std::vector<int> members = asc;
    members.push_back(static_cast<int>(u));
    std::vector<int> mf = minimal_face(members);
    std::vector<IntVec> pts;
    for (int v : mf) pts.push_back(proj_[v]);
    if (affine_rank(pts) != static_cast<int>(asc.size())) {
      prof.face_condition = false;
      continue;
    }
    std::set<int> mfset(mf.begin(), mf.end());
    for (int v : neighbors(static_cast<int>(u)))
      if (mfset.count(v) && h[v] < h[u]) prof.face_condition = false;
  }
  return prof;
}

std::optional<RatVec> LatticePolytope::edge_certificate(int u, int v) const {
  const int d = dim_;
  if (d == 0) return std::nullopt;
  // functional g over projected coordinates: g.(x - p_u) <= -1 for others,
  // g.(p_v - p_u) = 0
  RatMat ineq;
  RatVec ineq_b;
  for (std::size_t i = 0; i < proj_.size(); ++i) {
    if (static_cast<int>(i) == u || static_cast<int>(i) == v) continue;
    RatVec row(d);
    for (int k = 0; k < d; ++k) row[k] = Rat(proj_[i][k] - proj_[u][k]);
    ineq.push_back(std::move(row));
    ineq_b.push_back(Rat(-1));
  }
  RatMat eq;
  RatVec eq_b;
  {
    RatVec row(d);
    for (int k = 0; k < d; ++k) row[k] = Rat(proj_[v][k] - proj_[u][k]);
    eq.push_back(std::move(row));
    eq_b.push_back(Rat(0));
  }
  auto g = feasible_point(ineq, ineq_b, eq, eq_b);
  if (!g) return std::nullopt;
  // lift to an ambient functional supported on the projection columns
  RatVec ambient(ambient_, Rat(0));
  for (int k = 0; k < d; ++k) ambient[proj_cols_[k]] = (*g)[k];
  return ambient;
}

bool LatticePolytope::midpoint_in_rest(int u, int v) const {
  RatVec mid(dim_);
  for (int k = 0; k < dim_; ++k) mid[k] = Rat(proj_[u][k] + proj_[v][k], 2);
  std::vector<RatVec> rest;
  for (std::size_t i = 0; i < proj_.size(); ++i)
    if (static_cast<int>(i) != u && static_cast<int>(i) != v)
      rest.push_back(to_rat(proj_[i]));
  return in_convex_hull(rest, mid);
}

GradedPoset LatticePolytope::face_poset() const {
  const auto& fs = faces();
  const int m = static_cast<int>(fs.size());
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<int> ranks(m);
  for (int i = 0; i < m; ++i) {
    ranks[i] = fs[i].dim;
    for (int j = 0; j < m; ++j)
      leq[i][j] = std::includes(fs[j].verts.begin(), fs[j].verts.end(),
                                fs[i].verts.begin(), fs[i].verts.end());
  }
  return GradedPoset(std::move(leq), std::move(ranks));
}

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<IntVec> verts;
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) {
      IntVec v = va;
      v.insert(v.end(), vb.begin(), vb.end());
      verts.push_back(std::move(v));
    }
  return LatticePolytope(std::move(verts));
}

bool combinatorially_equivalent(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices()) return false;
  return GradedPoset::isomorphic(a.face_poset(), b.face_poset());
}

LatticePolytope unit_cube(int d) {
  std::vector<IntVec> verts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    IntVec v(d);
    for (int k = 0; k < d; ++k) v[k] = (mask >> k) & 1;
    verts.push_back(std::move(v));
  }
  return LatticePolytope(std::move(verts));
}

}  // namespace flagtoric
