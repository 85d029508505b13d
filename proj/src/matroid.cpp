#include "flagtoric/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flagtoric {

CoxeterSubset::CoxeterSubset(std::vector<Perm> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("empty subset");
  n_ = elems_[0].n();
  for (const auto& p : elems_)
    if (p.n() != n_) throw std::invalid_argument("mixed ranks in subset");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool CoxeterSubset::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

namespace {

// rank[value] = position of value in u's one-line notation
std::vector<int> alphabet_rank(const Perm& u) {
  std::vector<int> r(u.n() + 1);
  for (int i = 1; i <= u.n(); ++i) r[u(i)] = i;
  return r;
}

bool lex_less(const Perm& a, const Perm& b, const std::vector<int>& rank) {
  for (int i = 1; i <= a.n(); ++i)
    if (a(i) != b(i)) return rank[a(i)] < rank[b(i)];
  return false;
}

const Perm& lex_min(const CoxeterSubset& m, const Perm& u) {
  const std::vector<int> rank = alphabet_rank(u);
  const Perm* best = &m.elements()[0];
  for (const auto& p : m.elements())
    if (lex_less(p, *best, rank)) best = &p;
  return *best;
}

// For n <= 7 route comparisons through the cached dense table.
struct LeqOracle {
  int n;
  const BruhatTable* table = nullptr;
  explicit LeqOracle(int rank) : n(rank) {
    if (n <= 7) table = &BruhatTable::get(n);
  }
  bool operator()(const Perm& a, const Perm& b) const {
    if (table) return table->leq(perm_rank(a), perm_rank(b));
    return bruhat_leq(a, b);
  }
};

}  // namespace

MatroidCheck is_coxeter_matroid(const CoxeterSubset& m) {
  const int n = m.n();
  LeqOracle leq(n);
  const Perm w0 = Perm::longest(n);
  for (const Perm& u : all_perms(n)) {
    // Maximality at u is Minimality at u w0, where the candidate minimum must
    // be the shifted-lex minimum.
    const Perm uw0 = u * w0;
    const Perm si = uw0.inverse();
    const Perm cand_shifted = si * lex_min(m, uw0);
    bool minimum = true;
    for (const auto& p : m.elements())
      if (!leq(cand_shifted, si * p)) {
        minimum = false;
        break;
      }
    if (minimum) continue;
    // collect the maximal elements at u for the witness
    const Perm ui = u.inverse();
    std::vector<Perm> maximal;
    for (const auto& p : m.elements()) {
      bool dominated = false;
      for (const auto& q : m.elements()) {
        if (p == q) continue;
        if (leq(ui * p, ui * q)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(p);
    }
    // A finite poset without a maximum has at least two maximal elements.
    MatroidCheck out;
    out.is_matroid = false;
    out.witness = MatroidWitness{u, maximal.at(0), maximal.at(1)};
    return out;
  }
  return {true, std::nullopt};
}

Perm matroid_retraction(const CoxeterSubset& m, const Perm& u) {
  const Perm ui = u.inverse();
  const Perm cand = lex_min(m, u);
  const Perm cand_shifted = ui * cand;
  for (const auto& p : m.elements())
    if (!bruhat_leq(cand_shifted, ui * p))
      throw std::invalid_argument(
          "no unique shifted minimum at u = " + u.str() +
          ": not a Coxeter matroid (see " + cand.str() + " vs " + p.str() + ")");
  return cand;
}

Perm algebraic_retraction(const CoxeterSubset& m, const Perm& u) {
  return lex_min(m, u);
}

SignedPerm algebraic_retraction_signed(const std::vector<SignedPerm>& m,
                                       const SignedPerm& u) {
  if (m.empty()) throw std::invalid_argument("empty subset");
  const int n = u.n();
  // alphabet u(1) < ... < u(n) < -u(n) < ... < -u(1), values offset by n
  std::vector<int> rank(2 * n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    rank[n + u(i)] = i;
    rank[n - u(i)] = 2 * n + 1 - i;
  }
  const SignedPerm* best = &m[0];
  for (const auto& p : m) {
    for (int i = 1; i <= n; ++i) {
      if (p(i) == (*best)(i)) continue;
      if (rank[n + p(i)] < rank[n + (*best)(i)]) best = &p;
      break;
    }
  }
  return *best;
}

int graph_distance(const Perm& v, const Perm& w) {
  return (v.inverse() * w).length();
}

DistanceToSet distance_to_set(const Perm& u, const CoxeterSubset& m) {
  DistanceToSet out;
  out.distance = -1;
  for (const auto& p : m.elements()) {
    const int d = graph_distance(u, p);
    if (out.distance < 0 || d < out.distance) {
      out.distance = d;
      out.argmin = {p};
    } else if (d == out.distance) {
      out.argmin.push_back(p);
    }
  }
  return out;
}

LatticePolytope matroid_polytope(const CoxeterSubset& m, const IntVec& nu) {
  const int n = m.n();
  if (static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("nu has wrong dimension");
  for (int i = 1; i < n; ++i)
    if (nu[i - 1] >= nu[i]) throw std::invalid_argument("nu must be strictly increasing");
  std::vector<IntVec> verts;
  std::vector<std::string> labels;
  for (const auto& w : m.elements()) {
    // w . nu permutes coordinates: the i-th entry is nu_{w^-1(i)}
    const Perm wi = w.inverse();
    IntVec v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = nu[wi(i) - 1];
    verts.push_back(std::move(v));
    labels.push_back(w.str());
  }
  return LatticePolytope(std::move(verts), std::move(labels));
}

LatticePolytope matroid_polytope(const CoxeterSubset& m) {
  IntVec nu(m.n());
  for (int i = 0; i < m.n(); ++i) nu[i] = i + 1;
  return matroid_polytope(m, nu);
}

CoxeterSubset fano_plane_matroid() {
  static const std::vector<std::set<int>> lines = {
      {1, 2, 4}, {1, 3, 5}, {1, 6, 7}, {2, 3, 6}, {2, 5, 7}, {3, 4, 7}, {4, 5, 6}};
  std::vector<Perm> elems;
  for (const Perm& w : all_perms(7)) {
    std::set<int> head{w(1), w(2), w(3)};
    bool on_line = false;
    for (const auto& line : lines)
      if (head == line) {
        on_line = true;
        break;
      }
    if (!on_line) elems.push_back(w);
  }
  return CoxeterSubset(std::move(elems));
}

std::map<Perm, Perm> retraction_table(const CoxeterSubset& m, bool algebraic) {
  std::map<Perm, Perm> out;
  for (const Perm& u : all_perms(m.n()))
    out.emplace(u, algebraic ? algebraic_retraction(m, u) : matroid_retraction(m, u));
  return out;
}

}  // namespace flagtoric
