#include "flagtoric/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>


namespace flagtoric {

namespace {

std::vector<std::vector<bool>> reach_matrix(const Digraph& g) {
  std::vector<std::vector<bool>> reach(g.vertices + 1,
                                       std::vector<bool>(g.vertices + 1, false));
  for (const auto& [a, b] : g.edges) reach[a][b] = true;
  for (int k = 1; k <= g.vertices; ++k)
    for (int i = 1; i <= g.vertices; ++i)
      if (reach[i][k])
        for (int j = 1; j <= g.vertices; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

bool Digraph::acyclic() const {
  auto reach = reach_matrix(*this);
  for (int i = 1; i <= vertices; ++i)
    if (reach[i][i]) return false;
  return true;
}

Digraph Digraph::transitive_reduction() const {
  if (!acyclic()) throw std::invalid_argument("transitive reduction needs a DAG");
  auto reach = reach_matrix(*this);
  Digraph out;
  out.vertices = vertices;
  for (const auto& [a, b] : edges) {
    bool redundant = false;
    for (int c = 1; c <= vertices && !redundant; ++c)
      if (c != a && c != b && reach[a][c] && reach[c][b]) redundant = true;
    if (!redundant) out.edges.emplace_back(a, b);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool Digraph::underlying_forest() const {
  // union-find on the undirected support
  std::vector<int> parent(vertices + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<int, int>> und;
  for (auto [a, b] : edges) und.insert({std::min(a, b), std::max(a, b)});
  for (const auto& [a, b] : und) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

int Digraph::out_degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v) ++d;
  return d;
}

bool Digraph::isomorphic_to(const Digraph& o) const {
  if (vertices != o.vertices || edges.size() != o.edges.size()) return false;
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::pair<int, int>> target(o.edges.begin(), o.edges.end());
  do {
    bool ok = true;
    for (const auto& [a, b] : edges)
      if (!target.count({perm[a - 1], perm[b - 1]})) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LatticePolytope schubert_polytope(const Perm& w) {
  std::vector<IntVec> verts;
  std::vector<std::string> labels;
  for (const Perm& u : interval_elements(Perm::identity(w.n()), w)) {
    verts.push_back(moment_point(u));
    labels.push_back(u.str());
  }
  return LatticePolytope(std::move(verts), std::move(labels));
}

Digraph admissible_digraph(const Perm& w, const Perm& u) {
  if (!bruhat_leq(u, w)) throw std::invalid_argument("u must lie below w");
  const int n = w.n();
  Digraph g;
  g.vertices = n;
  const int lu = u.length();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> img = u.one_line();
      std::swap(img[i - 1], img[j - 1]);
      Perm tu(std::move(img));  // t_{u(i),u(j)} u
      const int lt = tu.length();
      if (lt != lu + 1 && lt != lu - 1) continue;
      if (!bruhat_leq(tu, w)) continue;
      g.edges.emplace_back(u(i), u(j));
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Digraph edge_digraph(const Perm& w, const Perm& u) {
  return admissible_digraph(w, u).transitive_reduction();
}

bool is_smooth_at(const Perm& w, const Perm& u) {
  return edge_digraph(w, u).underlying_forest();
}

bool orbit_closure_smooth(const Perm& w) {
  for (const Perm& u : interval_elements(Perm::identity(w.n()), w))
    if (!is_smooth_at(w, u)) return false;
  return true;
}

bool locally_factorial_pattern_test(const Perm& w) {
  return count_pattern(w, Perm({4, 2, 3, 1})) == 0 && avoids_45bar312(w);
}

IntPoly ascent_polynomial(const Perm& w) {
  std::map<int, std::int64_t> hist;
  for (const Perm& u : interval_elements(Perm::identity(w.n()), w)) {
    int asc = 0;
    for (const auto& [a, b] : edge_digraph(w, u).edges)
      if (a < b) ++asc;
    ++hist[asc];
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& [k, c] : hist) {
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = c;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly poincare_polynomial(const Perm& w) { return ascent_polynomial(w).stretch(2); }

IntPoly eulerian(int n) {
  if (n < 1) throw std::invalid_argument("eulerian needs n >= 1");
  std::vector<std::int64_t> coeffs(n, 0);
  for (const Perm& w : all_perms(n)) {
    int asc = 0;
    for (int i = 1; i < n; ++i)
      if (w(i) < w(i + 1)) ++asc;
    ++coeffs[asc];
  }
  return IntPoly(std::move(coeffs));
}

int complexity(const Perm& w) {
  std::vector<IntVec> pts;
  for (const Perm& u : interval_elements(Perm::identity(w.n()), w))
    pts.push_back(moment_point(u));
  return w.length() - affine_rank(pts);
}

ToricReport toric_schubert_report(const Perm& w) {
  ToricReport r;
  r.complexity_zero = complexity(w) == 0;
  r.pattern_avoiding = count_pattern(w, Perm({3, 2, 1})) == 0 &&
                       count_pattern(w, Perm({3, 4, 1, 2})) == 0;
  r.distinct_letter_word =
      static_cast<int>(support(w).size()) == w.length();
  r.interval_boolean = interval_is_boolean(Perm::identity(w.n()), w);
  r.polytope_cube = schubert_polytope(w).is_cube();
  r.consistent = r.complexity_zero == r.pattern_avoiding &&
                 r.pattern_avoiding == r.distinct_letter_word &&
                 r.distinct_letter_word == r.interval_boolean &&
                 r.interval_boolean == r.polytope_cube;
  return r;
}

std::vector<IntVec> reduced_char_matrix(const Word& word) {
  const int m = static_cast<int>(word.size());
  {
    std::set<int> letters(word.begin(), word.end());
    if (static_cast<int>(letters.size()) != m)
      throw std::invalid_argument("reduced characteristic matrix needs distinct letters");
  }
  std::vector<IntVec> a(m, IntVec(m, 0));
  for (int j = 0; j < m; ++j) {
    a[j][j] = -1;
    for (int k = 0; k < j; ++k)
      if (std::abs(word[j] - word[k]) == 1) a[j][k] = 1;  // -c_{i_j, i_k}
  }
  return a;
}

Fan schubert_fan(int n, const Word& word) {
  if (!is_reduced(n, word))
    throw std::invalid_argument("word is not reduced");
  const int m = static_cast<int>(word.size());
  const std::vector<IntVec> a = reduced_char_matrix(word);
  Fan fan;
  fan.rank = m;
  fan.complete = true;
  for (int j = 0; j < m; ++j) {
    IntVec e(m, 0);
    e[j] = 1;
    fan.rays.push_back(std::move(e));
  }
  for (int j = 0; j < m; ++j) {
    IntVec col(m, 0);
    for (int i = 0; i < m; ++i) col[i] = a[i][j];
    fan.rays.push_back(std::move(col));
  }
  // maximal cones: for each index pick the left or the right column
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> cone;
    for (int j = 0; j < m; ++j) cone.push_back((mask >> j) & 1 ? m + j : j);
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

Digraph letter_adjacency_digraph(const Word& word) {
  Digraph g;
  g.vertices = static_cast<int>(word.size());
  for (int k = 0; k < g.vertices; ++k)
    for (int j = k + 1; j < g.vertices; ++j)
      if (std::abs(word[k] - word[j]) == 1) g.edges.emplace_back(k + 1, j + 1);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

FanoClass fano_class(const Word& word) {
  const Digraph g = letter_adjacency_digraph(word);
  for (int v = 1; v <= g.vertices; ++v)
    if (g.out_degree(v) > 1) return FanoClass::weak_fano_not_fano;
  return FanoClass::fano;
}

std::vector<Perm> coxeter_elements(int n) {
  std::vector<int> letters(n - 1);
  std::iota(letters.begin(), letters.end(), 1);
  std::set<Perm> out;
  std::sort(letters.begin(), letters.end());
  do {
    out.insert(word_product(n, letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return {out.begin(), out.end()};
}

std::vector<std::vector<Perm>> coxeter_element_classes(int n) {
  if (n < 3) throw std::invalid_argument("coxeter_element_classes needs n >= 3");
  const Perm w0 = Perm::longest(n);
  std::vector<Perm> elems = coxeter_elements(n);
  std::set<Perm> seen;
  std::vector<std::vector<Perm>> classes;
  for (const auto& w : elems) {
    if (seen.count(w)) continue;
    const Perm flip = w0 * w * w0;
    std::vector<Perm> cls{w};
    seen.insert(w);
    if (flip != w && !seen.count(flip)) {
      cls.push_back(flip);
      seen.insert(flip);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

GradedPoset interval_poset(const Perm& v, const Perm& w) {
  std::vector<Perm> elems = interval_elements(v, w);
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<int> ranks(m);
  for (int i = 0; i < m; ++i) {
    ranks[i] = elems[i].length() - v.length();
    for (int j = 0; j < m; ++j) leq[i][j] = bruhat_leq(elems[i], elems[j]);
  }
  return GradedPoset(std::move(leq), std::move(ranks));
}

namespace {

// Searches the reduced words for one whose letter multiset has exactly the
// given repeated pattern as a contiguous factor and no other repeated letter.
bool has_word_factor(const Perm& w, const std::vector<int>& offsets) {
  // offsets describe the factor relative to i, e.g. {0,1,0} for s_i s_{i+1} s_i
  const int flen = static_cast<int>(offsets.size());
  for (const Word& word : reduced_words(w)) {
    const int m = static_cast<int>(word.size());
    for (int start = 0; start + flen <= m; ++start) {
      const int base = word[start] - offsets[0];
      if (base < 1) continue;
      bool match = true;
      for (int k = 0; k < flen; ++k)
        if (word[start + k] != base + offsets[k]) {
          match = false;
          break;
        }
      if (!match) continue;
      // all letters outside the factor distinct and unrepeated
      std::map<int, int> freq;
      for (int letter : word) ++freq[letter];
      std::map<int, int> expected;
      for (int k = 0; k < flen; ++k) ++expected[base + offsets[k]];
      bool ok = true;
      for (const auto& [letter, count] : freq) {
        auto it = expected.find(letter);
        const int want = it == expected.end() ? 1 : it->second;
        if (count != want) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

ComplexityOneReport complexity_one_report(const Perm& w) {
  ComplexityOneReport r;
  const int ell = w.length();
  r.c_one = complexity(w) == 1;
  r.smooth = r.c_one && orbit_closure_smooth(w);
  r.pattern_smooth = count_pattern(w, Perm({3, 2, 1})) == 1 &&
                     count_pattern(w, Perm({3, 4, 1, 2})) == 0;
  r.pattern_singular = count_pattern(w, Perm({3, 4, 1, 2})) == 1 &&
                       count_pattern(w, Perm({3, 2, 1})) == 0;

  // one letter repeats exactly twice in either factor shape
  const int nsupport = static_cast<int>(support(w).size());
  if (ell == nsupport + 1 && ell >= 3)
    r.word_factor_smooth = has_word_factor(w, {0, 1, 0});
  if (ell == nsupport + 1 && ell >= 4)
    r.word_factor_singular = has_word_factor(w, {1, 0, 2, 1});

  const Perm e = Perm::identity(w.n());
  const auto elems = interval_elements(e, w);
  if (ell >= 3 && elems.size() == 6ull << (ell - 3))
    r.interval_smooth = GradedPoset::isomorphic(
        interval_poset(e, w),
        GradedPoset::product(interval_poset(Perm::identity(3), Perm::longest(3)),
                             GradedPoset::boolean_lattice(ell - 3)));
  if (ell >= 4 && elems.size() == 14ull << (ell - 4))
    r.interval_singular = GradedPoset::isomorphic(
        interval_poset(e, w),
        GradedPoset::product(interval_poset(Perm::identity(4), Perm({3, 4, 1, 2})),
                             GradedPoset::boolean_lattice(ell - 4)));

  if (r.c_one) {
    const LatticePolytope q = schubert_polytope(w);
    if (ell >= 3 && q.num_vertices() == 6ull << (ell - 3))
      r.polytope_smooth = combinatorially_equivalent(
          q, product(schubert_polytope(Perm::longest(3)), unit_cube(ell - 3)));
    if (ell >= 4 && q.num_vertices() == 14ull << (ell - 4))
      r.polytope_singular = combinatorially_equivalent(
          q, product(schubert_polytope(Perm({3, 4, 1, 2})), unit_cube(ell - 4)));
  }

  const bool smooth_case = r.c_one && r.smooth;
  const bool singular_case = r.c_one && !r.smooth;
  if (smooth_case) r.kind = ComplexityOneKind::smooth_c1;
  else if (singular_case) r.kind = ComplexityOneKind::singular_c1;
  else r.kind = ComplexityOneKind::neither;

  r.consistent =
      smooth_case == r.pattern_smooth && r.pattern_smooth == r.word_factor_smooth &&
      r.word_factor_smooth == r.interval_smooth &&
      r.interval_smooth == r.polytope_smooth &&
      singular_case == r.pattern_singular &&
      r.pattern_singular == r.word_factor_singular &&
      r.word_factor_singular == r.interval_singular &&
      r.interval_singular == r.polytope_singular;
  return r;
}

}  // namespace flagtoric
