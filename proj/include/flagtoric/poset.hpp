#pragma once

#include <cstdint>
#include <vector>

namespace flagtoric {

// Finite graded poset given by its order relation; used for Bruhat intervals
// and face lattices.
class GradedPoset {
 public:
  GradedPoset() = default;
  // leq[i][j] true iff element i <= element j; ranks must respect leq.
  GradedPoset(std::vector<std::vector<bool>> leq, std::vector<int> ranks);

  int size() const { return static_cast<int>(ranks_.size()); }
  bool leq(int i, int j) const { return leq_[i][j]; }
  int rank_of(int i) const { return ranks_[i]; }
  int height() const;

  static GradedPoset boolean_lattice(int r);
  static GradedPoset product(const GradedPoset& a, const GradedPoset& b);
  // Rank-preserving order isomorphism, found by backtracking with
  // up/down-degree invariants.
  static bool isomorphic(const GradedPoset& a, const GradedPoset& b);

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<int> ranks_;
};

}  // namespace flagtoric
