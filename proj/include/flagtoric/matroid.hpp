#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagtoric/perm.hpp"
#include "flagtoric/polytope.hpp"

namespace flagtoric {

// Nonempty subset of S_n; candidate Coxeter matroid.
class CoxeterSubset {
 public:
  explicit CoxeterSubset(std::vector<Perm> elements);
  int n() const { return n_; }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& p) const;

 private:
  int n_ = 0;
  std::vector<Perm> elems_;  // sorted, unique
};

struct MatroidWitness {
  Perm u;            // shifted order with two maximal elements
  Perm max1, max2;   // incomparable maximal candidates
};

struct MatroidCheck {
  bool is_matroid = false;
  std::optional<MatroidWitness> witness;
};

// Maximality Property test. Fast path: the shifted-lex minimum must be the
// shifted-Bruhat minimum at every u (Minimality Property); on failure the
// maximality failure at u w0 is reported with two incomparable maximal
// elements.
MatroidCheck is_coxeter_matroid(const CoxeterSubset& m);

// Unique shifted-Bruhat minimum of the matroid at u; throws with witness
// context when no unique minimum exists.
Perm matroid_retraction(const CoxeterSubset& m, const Perm& u);

// Lexicographic minimum with respect to the alphabet u(1) < ... < u(n);
// defined for arbitrary subsets.
Perm algebraic_retraction(const CoxeterSubset& m, const Perm& u);

// Signed variant: alphabet u(1) < ... < u(n) < -u(n) < ... < -u(1).
SignedPerm algebraic_retraction_signed(const std::vector<SignedPerm>& m,
                                       const SignedPerm& u);

// d(v, w) = ell(v^-1 w), the graph metric on the permutohedron skeleton.
int graph_distance(const Perm& v, const Perm& w);

struct DistanceToSet {
  int distance = 0;
  std::vector<Perm> argmin;
};
DistanceToSet distance_to_set(const Perm& u, const CoxeterSubset& m);

// Convex hull of { w . nu : w in M } for strictly increasing nu.
LatticePolytope matroid_polytope(const CoxeterSubset& m, const IntVec& nu);
LatticePolytope matroid_polytope(const CoxeterSubset& m);  // nu = (1..n)

// The 4032-element subset of S_7 avoiding the lines of the Fano plane in its
// leading 3-set.
CoxeterSubset fano_plane_matroid();

// Retraction table u -> r(u) over all of S_n.
std::map<Perm, Perm> retraction_table(const CoxeterSubset& m, bool algebraic);

}  // namespace flagtoric
