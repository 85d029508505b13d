#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "flagtoric/fan.hpp"
#include "flagtoric/linalg.hpp"
#include "flagtoric/matroid.hpp"
#include "flagtoric/perm.hpp"
#include "flagtoric/polytope.hpp"

namespace flagtoric {

// Invertible rational matrix representing a complete flag by its column
// spans; right multiplication by upper triangular matrices is a symmetry.
class FlagMatrix {
 public:
  explicit FlagMatrix(RatMat entries);
  int n() const { return n_; }
  const RatMat& entries() const { return m_; }

  // Row permutation corresponding to acting by u^-1 (row i becomes row u(i)).
  FlagMatrix shifted_by(const Perm& u) const;

 private:
  int n_ = 0;
  RatMat m_;
};

// Per d: the d-subsets of rows whose leading d x d minor is nonzero.
struct PluckerSupport {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> sets;  // sets[d-1], sorted tuples
  bool contains(int d, const std::vector<int>& tuple) const;
};

PluckerSupport plucker_support(const FlagMatrix& x);
CoxeterSubset fixed_points(const FlagMatrix& x);

LatticePolytope moment_polytope(const FlagMatrix& x);

// The unique z whose opposite cell contains the flag, from upper-left rank
// jumps of the matrix.
Perm opposite_cell_of(const FlagMatrix& y);
Perm geometric_retraction(const FlagMatrix& x, const Perm& u);

// Coarsening of the Weyl-chamber fan by the fibers of the geometric
// retraction.
struct OrbitFan {
  int n = 0;
  std::map<Perm, std::vector<Perm>> fibers;  // target -> chamber labels
  Perm target_of(const Perm& u) const;
  // each fiber connected through shared chamber walls
  bool fibers_connected() const;
  // each fiber's chamber union convex (LP on chamber generators)
  bool fibers_convex() const;
  Fan to_fan() const;  // rank n-1, quotient lattice
};

OrbitFan orbit_fan(const FlagMatrix& x);

// i.i.d. entries p/q with p in {-9..9}, q in {1..9}; singular draws rejected.
FlagMatrix random_flag(int n, std::uint64_t seed);

}  // namespace flagtoric
