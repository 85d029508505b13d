#include "flagtoric/catalan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagtoric {

namespace {

bool pairs_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

Triangulation::Triangulation(int n, std::vector<std::pair<int, int>> diagonals)
    : n_(n), diags_(std::move(diagonals)) {
  if (n_ < 1) throw std::invalid_argument("triangulation needs n >= 1");
  for (auto& [a, b] : diags_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > n_ + 1 || b - a < 2 || (a == 0 && b == n_ + 1))
      throw std::invalid_argument("not a diagonal of the polygon");
  }
  std::sort(diags_.begin(), diags_.end());
  diags_.erase(std::unique(diags_.begin(), diags_.end()), diags_.end());
  if (static_cast<int>(diags_.size()) != n_ - 1)
    throw std::invalid_argument("a triangulation needs exactly n-1 diagonals");
  for (std::size_t i = 0; i < diags_.size(); ++i)
    for (std::size_t j = i + 1; j < diags_.size(); ++j)
      if (pairs_cross(diags_[i], diags_[j]))
        throw std::invalid_argument("diagonals cross");
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  auto is_side = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == n_ + 1)) return true;
    return std::binary_search(diags_.begin(), diags_.end(), std::make_pair(a, b));
  };
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= n_ + 1; ++a)
    for (int b = a + 1; b <= n_ + 1; ++b) {
      if (!is_side(a, b)) continue;
      for (int c = b + 1; c <= n_ + 1; ++c)
        if (is_side(b, c) && is_side(a, c)) out.push_back({a, b, c});
    }
  if (static_cast<int>(out.size()) != n_)
    throw std::logic_error("triangle count mismatch");
  return out;
}

namespace {

void enumerate_rec(int lo, int hi, std::vector<std::pair<int, int>>& diags,
                   const std::function<void()>& emit) {
  if (hi - lo < 2) {
    if (hi - lo == 1) emit();
    return;
  }
  if (hi - lo == 2) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    int added = 0;
    if (k - lo >= 2) {
      diags.emplace_back(lo, k);
      ++added;
    }
    if (hi - k >= 2) {
      diags.emplace_back(k, hi);
      ++added;
    }
    // recurse on both sub-polygons
    std::function<void()> inner = [&]() {
      enumerate_rec(k, hi, diags, emit);
    };
    enumerate_rec(lo, k, diags, inner);
    while (added--) diags.pop_back();
  }
}

}  // namespace

std::vector<Triangulation> triangulations(int n) {
  std::vector<Triangulation> out;
  std::vector<std::pair<int, int>> diags;
  std::function<void()> emit = [&]() { out.push_back(Triangulation(n, diags)); };
  enumerate_rec(0, n + 1, diags, emit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LeftRightTrees left_right_trees(const Triangulation& t) {
  const int n = t.n();
  LeftRightTrees lr;
  lr.left.assign(n + 1, -1);
  lr.right.assign(n + 1, -1);
  for (const auto& tri : t.triangles()) {
    const int mid = tri[1];
    if (mid < 1 || mid > n || lr.left[mid] != -1)
      throw std::logic_error("triangle middles are not unique");
    lr.left[mid] = tri[0];
    lr.right[mid] = tri[2];
  }
  for (int k = 1; k <= n; ++k)
    if (lr.left[k] < 0) throw std::logic_error("missing triangle for a vertex");
  return lr;
}

std::vector<std::pair<int, int>> LeftRightTrees::left_edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 1; k < left.size(); ++k) out.emplace_back(left[k], static_cast<int>(k));
  return out;
}

std::vector<std::pair<int, int>> LeftRightTrees::right_edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 1; k < right.size(); ++k) out.emplace_back(static_cast<int>(k), right[k]);
  return out;
}

Fan catalan_fan(const Triangulation& t) {
  const int n = t.n();
  const LeftRightTrees lr = left_right_trees(t);
  auto basis = [&](int j) {  // pi_j with pi_0 = pi_{n+1} = 0
    IntVec v(n, 0);
    if (j >= 1 && j <= n) v[j - 1] = 1;
    return v;
  };
  Fan fan;
  fan.rank = n;
  fan.complete = true;
  for (int k = 1; k <= n; ++k) {  // v_k = pi_k - pi_{k_R}
    IntVec v = basis(k);
    IntVec r = basis(lr.right[k]);
    for (int i = 0; i < n; ++i) v[i] -= r[i];
    fan.rays.push_back(std::move(v));
  }
  for (int k = 1; k <= n; ++k) {  // w_k = pi_{k_L} - pi_k
    IntVec v = basis(lr.left[k]);
    IntVec r = basis(k);
    for (int i = 0; i < n; ++i) v[i] -= r[i];
    fan.rays.push_back(std::move(v));
  }
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> cone;
    for (int k = 0; k < n; ++k) cone.push_back((mask >> k) & 1 ? n + k : k);
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

int catalan_fan_apex(const Triangulation& t) {
  const LeftRightTrees lr = left_right_trees(t);
  for (int k = 1; k <= t.n(); ++k)
    if (lr.left[k] == 0 && lr.right[k] == t.n() + 1) return k;
  throw std::logic_error("no apex over the distinguished side");
}

namespace {

std::string tree_canon(const BinaryTree& b, int node, bool ordered) {
  if (node < 0) return "";
  std::string l = tree_canon(b, b.nodes[node].left, ordered);
  std::string r = tree_canon(b, b.nodes[node].right, ordered);
  if (ordered) return "(" + l + "." + r + ")";
  if (r < l) std::swap(l, r);
  return "(" + l + r + ")";
}

}  // namespace

std::string BinaryTree::plane_canonical() const { return tree_canon(*this, root, true); }
std::string BinaryTree::unordered_canonical() const { return tree_canon(*this, root, false); }

BinaryTree tree_of_triangulation(const Triangulation& t) {
  const int n = t.n();
  const LeftRightTrees lr = left_right_trees(t);
  std::map<std::pair<int, int>, int> by_span;  // (k_L, k_R) -> k
  for (int k = 1; k <= n; ++k) by_span[{lr.left[k], lr.right[k]}] = k;

  BinaryTree b;
  b.nodes.resize(n);
  for (int k = 1; k <= n; ++k) b.nodes[k - 1].label = k;
  for (int k = 1; k <= n; ++k) {
    // child across a diagonal side of the triangle {k_L, k, k_R}
    if (k - lr.left[k] >= 2) b.nodes[k - 1].left = by_span.at({lr.left[k], k}) - 1;
    if (lr.right[k] - k >= 2) b.nodes[k - 1].right = by_span.at({k, lr.right[k]}) - 1;
  }
  b.root = catalan_fan_apex(t) - 1;
  return b;
}

namespace {

// span [lo, hi] of labels in the subtree; triangle of each node is
// {lo - 1, label, hi + 1}
void collect_triangles(const BinaryTree& b, int node, int lo, int hi,
                       std::vector<std::array<int, 3>>& out) {
  if (node < 0) return;
  const int k = b.nodes[node].label;
  out.push_back({lo - 1, k, hi + 1});
  collect_triangles(b, b.nodes[node].left, lo, k - 1, out);
  collect_triangles(b, b.nodes[node].right, k + 1, hi, out);
}

}  // namespace

Triangulation triangulation_of_tree(const BinaryTree& b) {
  const int n = b.size();
  std::vector<std::array<int, 3>> tris;
  collect_triangles(b, b.root, 1, n, tris);
  if (static_cast<int>(tris.size()) != n)
    throw std::invalid_argument("tree labels do not form a search tree on positions");
  std::set<std::pair<int, int>> diags;
  for (const auto& tri : tris)
    for (auto [a, c] : {std::pair{tri[0], tri[1]}, std::pair{tri[1], tri[2]},
                        std::pair{tri[0], tri[2]}})
      if (c - a >= 2 && !(a == 0 && c == n + 1)) diags.insert({a, c});
  return Triangulation(n, {diags.begin(), diags.end()});
}

namespace {

int psi_rec(const Perm& u, int lo, int hi, BinaryTree& b) {
  if (lo > hi) return -1;
  int argmin = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (u(i) < u(argmin)) argmin = i;
  const int node = argmin - 1;
  b.nodes[node].label = argmin;
  b.nodes[node].left = psi_rec(u, lo, argmin - 1, b);
  b.nodes[node].right = psi_rec(u, argmin + 1, hi, b);
  return node;
}

}  // namespace

BinaryTree psi_tree(const Perm& u) {
  BinaryTree b;
  b.nodes.resize(u.n());
  b.root = psi_rec(u, 1, u.n(), b);
  return b;
}

Triangulation psi(const Perm& u) { return triangulation_of_tree(psi_tree(u)); }

std::vector<long long> wedderburn_etherington(int upto) {
  if (upto < 1) throw std::invalid_argument("wedderburn_etherington needs upto >= 1");
  std::vector<long long> b(upto + 1, 0);
  b[1] = 1;
  for (int k = 2; k <= upto; ++k) {
    if (k % 2 == 1) {
      const int m = (k + 1) / 2;
      for (int i = 1; i <= m - 1; ++i) b[k] += b[i] * b[k - i];
    } else {
      const int m = k / 2;
      b[k] = b[m] * (b[m] + 1) / 2;
      for (int i = 1; i <= m - 1; ++i) b[k] += b[i] * b[k - i];
    }
  }
  return {b.begin() + 1, b.end()};
}

Perm hat_u(const Perm& u) {
  std::vector<int> img(u.n() + 1);
  img[0] = 1;
  for (int i = 1; i <= u.n(); ++i) img[i] = u(i) + 1;
  return Perm(std::move(img));
}

Perm tilde_u(const Perm& u) {
  std::vector<int> img(u.n() + 1);
  for (int i = 1; i <= u.n(); ++i) img[i - 1] = u(i);
  img[u.n()] = u.n() + 1;
  return Perm(std::move(img));
}

std::pair<Perm, Perm> catalan_pair(const Perm& u, PairSide side) {
  const int n = u.n();
  Word run(n);
  std::iota(run.begin(), run.end(), 1);
  if (side == PairSide::tail) std::reverse(run.begin(), run.end());
  const Perm base = side == PairSide::head ? hat_u(u) : tilde_u(u);
  const Perm top = base * word_product(n + 1, run);
  const Perm v = base.inverse();
  const Perm w = top.inverse();
  if (w.length() != v.length() + n)
    throw std::logic_error("length condition failed in catalan pair");
  return {v, w};
}

namespace {

std::pair<int, int> differing_positions(const Perm& a, const Perm& b) {
  int i = 0, j = 0;
  for (int k = 1; k <= a.n(); ++k)
    if (a(k) != b(k)) {
      if (!i) i = k;
      else j = k;
    }
  return {i, j};
}

}  // namespace

bool atoms_coatoms_match_trees(const Perm& u) {
  const int n = u.n();
  const Perm vh = hat_u(u);
  Word run(n);
  std::iota(run.begin(), run.end(), 1);
  const Perm wh = vh * word_product(n + 1, run);

  const LeftRightTrees lr = left_right_trees(psi(u));
  std::set<std::pair<int, int>> expect_atoms, expect_coatoms;
  for (const auto& [a, k] : lr.left_edges()) expect_atoms.insert({a + 1, k + 1});
  for (const auto& [k, b] : lr.right_edges()) expect_coatoms.insert({k, b});

  std::set<std::pair<int, int>> atoms, coatoms;
  for (const Perm& x : interval_atoms(vh, wh)) atoms.insert(differing_positions(vh, x));
  for (const Perm& x : interval_coatoms(vh, wh)) coatoms.insert(differing_positions(wh, x));
  return atoms == expect_atoms && coatoms == expect_coatoms;
}

SignedForest::SignedForest(int n_, std::vector<int> parent_, std::vector<int> sign_)
    : n(n_), parent(std::move(parent_)), sign(std::move(sign_)) {
  if (static_cast<int>(parent.size()) != n + 1 || static_cast<int>(sign.size()) != n + 1)
    throw std::invalid_argument("forest arrays are 1-indexed with size n+1");
  for (int v = 1; v <= n; ++v) {
    if (parent[v] < 0 || parent[v] > n || parent[v] == v)
      throw std::invalid_argument("bad parent pointer");
    if (parent[v] == 0 && sign[v] != 0)
      throw std::invalid_argument("roots carry no sign");
    if (parent[v] != 0 && sign[v] != 1 && sign[v] != -1)
      throw std::invalid_argument("edges need a sign of +-1");
    // acyclicity
    int steps = 0, cur = v;
    while (parent[cur] != 0) {
      cur = parent[cur];
      if (++steps > n) throw std::invalid_argument("parent map has a cycle");
    }
  }
}

std::vector<int> SignedForest::children(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= n; ++c)
    if (parent[c] == v) out.push_back(c);
  return out;
}

SignedForest SignedForest::flip_children(int v) const {
  SignedForest out = *this;
  for (int c = 1; c <= n; ++c)
    if (out.parent[c] == v) out.sign[c] = -out.sign[c];
  return out;
}

namespace {

std::string forest_canon_rec(const SignedForest& f, int v) {
  std::vector<std::string> parts;
  for (int c : f.children(v))
    parts.push_back(std::string(f.sign[c] > 0 ? "+" : "-") + forest_canon_rec(f, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

}  // namespace

std::string canonical_signed_forest(const SignedForest& f) {
  std::vector<std::string> roots;
  for (int v = 1; v <= f.n; ++v)
    if (f.parent[v] == 0) roots.push_back(forest_canon_rec(f, v));
  std::sort(roots.begin(), roots.end());
  std::string out;
  for (const auto& r : roots) out += r;
  return out;
}

Fan bott_fan_from_forest(const SignedForest& f) {
  const int n = f.n;
  std::vector<IntVec> v(n + 1), w(n + 1);
  for (int i = 1; i <= n; ++i) {
    v[i] = IntVec(n, 0);
    v[i][i - 1] = 1;
  }
  // parents before children
  std::vector<int> order;
  std::vector<bool> done(n + 1, false);
  while (static_cast<int>(order.size()) < n)
    for (int i = 1; i <= n; ++i) {
      if (done[i]) continue;
      if (f.parent[i] == 0 || done[f.parent[i]]) {
        order.push_back(i);
        done[i] = true;
      }
    }
  for (int i : order) {
    IntVec wi(n, 0);
    wi[i - 1] = -1;
    if (f.parent[i] != 0) {
      const IntVec& base = f.sign[i] > 0 ? v[f.parent[i]] : w[f.parent[i]];
      for (int k = 0; k < n; ++k) wi[k] += base[k];
    }
    w[i] = std::move(wi);
  }
  Fan fan;
  fan.rank = n;
  fan.complete = true;
  for (int i = 1; i <= n; ++i) fan.rays.push_back(v[i]);
  for (int i = 1; i <= n; ++i) fan.rays.push_back(w[i]);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> cone;
    for (int k = 0; k < n; ++k) cone.push_back((mask >> k) & 1 ? n + k : k);
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

SignedForest forest_from_bott_fan(const Fan& fan) {
  const auto pcs = primitive_collections(fan);
  const int n = fan.rank;
  if (static_cast<int>(pcs.size()) != n)
    throw std::invalid_argument("fan is not of Bott type: wrong primitive collection count");
  std::vector<int> pair_of(fan.rays.size(), -1);
  for (std::size_t k = 0; k < pcs.size(); ++k) {
    if (pcs[k].size() != 2)
      throw std::invalid_argument("fan is not of Bott type: collection is not a pair");
    for (int r : pcs[k]) {
      if (pair_of[r] != -1)
        throw std::invalid_argument("fan is not of Bott type: pairs overlap");
      pair_of[r] = static_cast<int>(k);
    }
  }
  std::vector<int> parent(n + 1, 0), sign(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    IntVec s(fan.rank, 0);
    for (int r : pcs[k])
      for (int i = 0; i < fan.rank; ++i) s[i] += fan.rays[r][i];
    bool zero = true;
    for (auto x : s) zero = zero && x == 0;
    if (zero) continue;  // root
    const int r = fan.ray_index(s);
    if (r < 0)
      throw std::invalid_argument("fan is not of Bott type: pair sum is not a ray");
    parent[k + 1] = pair_of[r] + 1;
    sign[k + 1] = r == pcs[pair_of[r]][0] ? 1 : -1;
  }
  return SignedForest(n, std::move(parent), std::move(sign));
}

namespace {

// All labelled signed rooted forests on [n], reduced to canonical strings.
std::map<std::string, SignedForest> canonical_forests(int n) {
  std::map<std::string, SignedForest> out;
  std::vector<int> parent(n + 1, 0);
  std::function<void(int)> rec_parent = [&](int v) {
    if (v > n) {
      // acyclicity
      for (int i = 1; i <= n; ++i) {
        int steps = 0, cur = i;
        while (parent[cur] != 0) {
          cur = parent[cur];
          if (++steps > n) return;
        }
      }
      std::vector<int> edges;
      for (int i = 1; i <= n; ++i)
        if (parent[i] != 0) edges.push_back(i);
      for (int mask = 0; mask < (1 << edges.size()); ++mask) {
        std::vector<int> sign(n + 1, 0);
        for (std::size_t e = 0; e < edges.size(); ++e)
          sign[edges[e]] = (mask >> e) & 1 ? 1 : -1;
        SignedForest f(n, parent, sign);
        out.emplace(canonical_signed_forest(f), f);
      }
      return;
    }
    for (int p = 0; p <= n; ++p) {
      if (p == v) continue;
      parent[v] = p;
      rec_parent(v + 1);
    }
    parent[v] = 0;
  };
  rec_parent(1);
  return out;
}

}  // namespace

std::vector<SignedForest> signed_forest_classes(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("signed forest classes are desk scale (n <= 6)");
  std::map<std::string, SignedForest> canon = canonical_forests(n);
  // union-find over canonical strings connected by the sign moves
  std::map<std::string, std::string> up;
  std::function<std::string(std::string)> find = [&](std::string x) {
    while (up.at(x) != x) x = up[x] = up[up[x]];
    return x;
  };
  for (const auto& [key, f] : canon) up[key] = key;
  for (const auto& [key, f] : canon)
    for (int v = 1; v <= n; ++v) {
      const std::string other = canonical_signed_forest(f.flip_children(v));
      const std::string ra = find(key), rb = find(other);
      if (ra != rb) up[ra] = rb;
    }
  std::map<std::string, std::string> best;  // root -> smallest member
  for (const auto& [key, f] : canon) {
    const std::string r = find(key);
    auto it = best.find(r);
    if (it == best.end() || key < it->second) best[r] = key;
  }
  std::vector<SignedForest> out;
  for (const auto& [root, key] : best) out.push_back(canon.at(key));
  return out;
}

}  // namespace flagtoric
