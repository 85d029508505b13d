#include "flagtoric/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace flagtoric {

GradedPoset::GradedPoset(std::vector<std::vector<bool>> leq, std::vector<int> ranks)
    : leq_(std::move(leq)), ranks_(std::move(ranks)) {
  if (leq_.size() != ranks_.size())
    throw std::invalid_argument("poset size mismatch");
}

int GradedPoset::height() const {
  int h = -1;
  for (int r : ranks_) h = std::max(h, r);
  return h;
}

GradedPoset GradedPoset::boolean_lattice(int r) {
  const int m = 1 << r;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<int> ranks(m);
  for (int i = 0; i < m; ++i) {
    ranks[i] = std::popcount(static_cast<unsigned>(i));
    for (int j = 0; j < m; ++j) leq[i][j] = (i & ~j) == 0;
  }
  return GradedPoset(std::move(leq), std::move(ranks));
}

GradedPoset GradedPoset::product(const GradedPoset& a, const GradedPoset& b) {
  const int m = a.size() * b.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<int> ranks(m);
  auto id = [&](int i, int j) { return i * b.size() + j; };
  for (int i1 = 0; i1 < a.size(); ++i1)
    for (int j1 = 0; j1 < b.size(); ++j1) {
      ranks[id(i1, j1)] = a.rank_of(i1) + b.rank_of(j1);
      for (int i2 = 0; i2 < a.size(); ++i2)
        for (int j2 = 0; j2 < b.size(); ++j2)
          leq[id(i1, j1)][id(i2, j2)] = a.leq(i1, i2) && b.leq(j1, j2);
    }
  return GradedPoset(std::move(leq), std::move(ranks));
}

namespace {

// Invariant used to prune the isomorphism search: (rank, #below, #above).
struct Key {
  int rank, below, above;
  auto operator<=>(const Key&) const = default;
};

Key key_of(const GradedPoset& p, int i) {
  int below = 0, above = 0;
  for (int j = 0; j < p.size(); ++j) {
    if (p.leq(j, i)) ++below;
    if (p.leq(i, j)) ++above;
  }
  return {p.rank_of(i), below, above};
}

bool extend(const GradedPoset& a, const GradedPoset& b, std::vector<int>& map,
            std::vector<bool>& used, int i, const std::vector<std::vector<int>>& cand) {
  if (i == a.size()) return true;
  for (int j : cand[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (int k = 0; k < i && ok; ++k) {
      if (a.leq(k, i) != b.leq(map[k], j)) ok = false;
      if (a.leq(i, k) != b.leq(j, map[k])) ok = false;
    }
    if (!ok) continue;
    map[i] = j;
    used[j] = true;
    if (extend(a, b, map, used, i + 1, cand)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool GradedPoset::isomorphic(const GradedPoset& a, const GradedPoset& b) {
  if (a.size() != b.size()) return false;
  std::map<Key, int> ka, kb;
  std::vector<Key> keys_a(a.size()), keys_b(b.size());
  for (int i = 0; i < a.size(); ++i) ++ka[keys_a[i] = key_of(a, i)];
  for (int j = 0; j < b.size(); ++j) ++kb[keys_b[j] = key_of(b, j)];
  if (ka != kb) return false;
  std::vector<std::vector<int>> cand(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (keys_a[i] == keys_b[j]) cand[i].push_back(j);
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend(a, b, map, used, 0, cand);
}

}  // namespace flagtoric
