#pragma once

#include <string>
#include <vector>

#include "flagtoric/linalg.hpp"
#include "flagtoric/polytope.hpp"

namespace flagtoric {

// Rational polyhedral fan: primitive ray vectors plus maximal cones as
// ray-index sets. Faces of the listed cones are implied.
struct Fan {
  int rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> cones;  // sorted index lists
  bool complete = false;

  int ray_index(const IntVec& r) const;
};

// Normal fan of a full-dimensional polytope, or of a polytope lying in a
// hyperplane of constant coordinate sum; in the latter case the fan lives in
// Z^n/Z(1,...,1) with basis images of e_1+...+e_i.
Fan normal_fan(const LatticePolytope& p);

// Quotient coordinates of an ambient integer vector under Z^n -> Z^n/Z(1..1).
IntVec quotient_coords(const IntVec& ambient);

// Ray bijection extending to a unimodular lattice map carrying cones to
// cones; search over maximal-cone images pruned by incidence invariants.
bool fan_isomorphic(const Fan& a, const Fan& b);

bool fan_is_smooth(const Fan& f);  // every maximal cone simplicial unimodular
// Every wall of a maximal cone shared by exactly two maximal cones
// (simplicial fans).
bool fan_is_complete_simplicial(const Fan& f);
// Pairwise interior disjointness via LP; desk scale only.
bool fan_interiors_disjoint(const Fan& f);

// Minimal ray sets not contained in a cone (smooth simplicial fans).
std::vector<std::vector<int>> primitive_collections(const Fan& f);
// ell - sum of the primitive-relation coefficients of the collection.
std::int64_t batyrev_degree(const Fan& f, const std::vector<int>& collection);
bool is_fano(const Fan& f);
bool is_weak_fano(const Fan& f);

}  // namespace flagtoric
