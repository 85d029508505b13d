#include "flagtoric/richardson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace flagtoric {

LatticePolytope interval_polytope(const Perm& v, const Perm& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("interval polytope needs v <= w");
  std::vector<IntVec> verts;
  std::vector<std::string> labels;
  for (const Perm& u : interval_elements(v, w)) {
    verts.push_back(moment_point(u));
    labels.push_back(u.str());
  }
  return LatticePolytope(std::move(verts), std::move(labels));
}

bool interval_polytope_toric(const Perm& v, const Perm& w) {
  std::vector<IntVec> pts;
  for (const Perm& u : interval_elements(v, w)) pts.push_back(moment_point(u));
  if (pts.empty()) throw std::invalid_argument("needs v <= w");
  return affine_rank(pts) == w.length() - v.length();
}

bool faces_are_subintervals(const Perm& v, const Perm& w) {
  if (!interval_polytope_toric(v, w))
    throw std::invalid_argument("face correspondence requires a toric interval");
  const LatticePolytope q = interval_polytope(v, w);
  std::set<std::vector<int>> face_sets;
  for (const auto& f : q.faces()) face_sets.insert(f.verts);

  const std::vector<Perm> inv_elems = interval_elements(v.inverse(), w.inverse());
  for (const Perm& x : inv_elems)
    for (const Perm& y : inv_elems) {
      if (!bruhat_leq(x, y)) continue;
      std::vector<int> verts;
      for (const Perm& u : interval_elements(x.inverse(), y.inverse()))
        verts.push_back(q.vertex_index(moment_point(u)));
      std::sort(verts.begin(), verts.end());
      if (!face_sets.count(verts)) return false;
    }
  return true;
}

CubeReport cube_theorem_check(const Perm& v, const Perm& w) {
  CubeReport r;
  r.toric = interval_polytope_toric(v, w);
  r.boolean_interval = interval_is_boolean(v, w);
  r.cube = interval_polytope(v, w).is_cube();
  r.consistent = r.cube == (r.toric && r.boolean_interval);
  return r;
}

std::string MinimalExpression::str() const {
  std::string out;
  for (const auto& f : factors)
    out += "s(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
  return out;
}

Word run_word(const RunFactor& f) {
  Word out;
  const int step = f.p <= f.q ? 1 : -1;
  for (int i = f.p;; i += step) {
    out.push_back(i);
    if (i == f.q) break;
  }
  return out;
}

MinimalExpression minimal_expression(const Word& letters) {
  {
    std::set<int> distinct(letters.begin(), letters.end());
    if (distinct.size() != letters.size())
      throw std::invalid_argument("minimal expression needs distinct letters");
  }
  MinimalExpression out;
  if (letters.empty()) return out;

  std::map<int, int> position;
  for (std::size_t i = 0; i < letters.size(); ++i)
    position[letters[i]] = static_cast<int>(i);

  // maximal intervals of consecutive letters in the support
  std::vector<int> sorted(letters.begin(), letters.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<int, int>> blocks;
  int lo = sorted[0], hi = sorted[0];
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == hi + 1) {
      hi = sorted[i];
    } else {
      blocks.emplace_back(lo, hi);
      lo = hi = sorted[i];
    }
  }
  blocks.emplace_back(lo, hi);

  struct Segment {
    int lo, hi;
    bool ascending;
  };
  std::vector<Segment> segments;
  std::vector<std::pair<int, int>> order;  // (earlier segment, later segment)

  for (const auto& [a, b] : blocks) {
    // bit at i: letter i occurs before letter i+1
    std::vector<bool> asc(std::max(0, b - a));
    for (int i = a; i < b; ++i) asc[i - a] = position[i] < position[i + 1];
    // minimal cuts: every adjacent pair of differing bits must be split
    std::vector<bool> cut(std::max(0, b - a), false);
    for (int i = 0; i + 1 < b - a; ++i)
      if (asc[i] != asc[i + 1] && !cut[i] && !cut[i + 1]) cut[i + 1] = true;
    int start = a;
    std::vector<int> seg_of(b - a + 1, 0);
    for (int i = a; i <= b; ++i) {
      const bool boundary = i == b || (i < b && cut[i - a]);
      if (boundary) {
        const bool ascending = start < i ? asc[start - a] : true;
        segments.push_back({start, i, ascending});
        for (int k = start; k <= i; ++k) seg_of[k - a] = static_cast<int>(segments.size()) - 1;
        start = i + 1;
      }
    }
    // cut bits become ordering constraints between adjacent segments
    for (int i = a; i < b; ++i) {
      const int sa = seg_of[i - a], sb = seg_of[i + 1 - a];
      if (sa == sb) continue;
      if (asc[i - a]) order.emplace_back(sa, sb);
      else order.emplace_back(sb, sa);
    }
  }

  // topological order (constraints orient a disjoint union of paths)
  const int m = static_cast<int>(segments.size());
  std::vector<int> indeg(m, 0);
  std::vector<std::vector<int>> succ(m);
  for (const auto& [x, y] : order) {
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> topo;
  std::set<std::pair<int, int>> avail;  // (interval start, segment)
  for (int i = 0; i < m; ++i)
    if (indeg[i] == 0) avail.insert({segments[i].lo, i});
  while (!avail.empty()) {
    const int cur = avail.begin()->second;
    avail.erase(avail.begin());
    topo.push_back(cur);
    for (int nxt : succ[cur])
      if (--indeg[nxt] == 0) avail.insert({segments[nxt].lo, nxt});
  }
  if (static_cast<int>(topo.size()) != m)
    throw std::logic_error("cyclic ordering constraints in run decomposition");

  for (int idx : topo) {
    const Segment& s = segments[idx];
    RunFactor f;
    if (s.ascending) {
      f.p = s.lo;
      f.q = s.hi;
    } else {
      f.p = s.hi;
      f.q = s.lo;
    }
    out.factors.push_back(f);
  }

  // validate: the run product equals the letter product
  const int n = *std::max_element(letters.begin(), letters.end()) + 1;
  Perm expect = word_product(n, letters);
  Word flat;
  for (const auto& f : out.factors) {
    Word rw = run_word(f);
    flat.insert(flat.end(), rw.begin(), rw.end());
  }
  if (word_product(n, flat) != expect)
    throw std::logic_error("run decomposition failed to reproduce the product");

  out.proper = true;
  for (std::size_t i = 0; i < out.factors.size() && out.proper; ++i)
    for (std::size_t j = i + 1; j < out.factors.size() && out.proper; ++j) {
      const int gap = std::max(out.factors[i].lo(), out.factors[j].lo()) -
                      std::min(out.factors[i].hi(), out.factors[j].hi());
      if (gap <= 1) out.proper = false;  // overlapping or adjacent intervals
    }
  return out;
}

ProperPairReport proper_pair_check(const Perm& v, const Word& letters, Side side) {
  const int n = v.n();
  const Perm prod = word_product(n, letters);
  ProperPairReport r;
  r.w = side == Side::left ? prod * v : v * prod;
  if (r.w.length() != v.length() + static_cast<int>(letters.size()))
    throw std::invalid_argument("length condition ell(w) = ell(v) + m violated");
  const MinimalExpression expr = minimal_expression(letters);
  r.proper = expr.proper;
  r.toric = interval_polytope_toric(v, r.w);
  r.cube = interval_polytope(v, r.w).is_cube();
  r.toric_as_expected = r.toric;               // distinct letters force toric
  r.cube_as_expected = !r.proper || r.cube;    // proper forces cube
  return r;
}

}  // namespace flagtoric
