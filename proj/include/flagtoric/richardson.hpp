#pragma once

#include <string>
#include <vector>

#include "flagtoric/perm.hpp"
#include "flagtoric/polytope.hpp"

namespace flagtoric {

// Moment polytope of the Bruhat interval [v, w], vertices labelled.
LatticePolytope interval_polytope(const Perm& v, const Perm& w);

// dim equals ell(w) - ell(v)
bool interval_polytope_toric(const Perm& v, const Perm& w);

// For toric intervals: every subinterval of [v^-1, w^-1] shows up as a face.
bool faces_are_subintervals(const Perm& v, const Perm& w);

struct CubeReport {
  bool cube = false;
  bool toric = false;
  bool boolean_interval = false;
  bool consistent = false;  // cube <=> toric && boolean
};
CubeReport cube_theorem_check(const Perm& v, const Perm& w);

// Run factorization of a distinct-letter product: s(p,q) walks from p to q
// one step at a time.
struct RunFactor {
  int p = 0, q = 0;
  int lo() const { return std::min(p, q); }
  int hi() const { return std::max(p, q); }
};

struct MinimalExpression {
  std::vector<RunFactor> factors;  // product in this order
  bool minimal = true;
  bool proper = false;  // no two run intervals adjacent
  std::string str() const;
};

// Decomposes the product of distinct letters (in the given order) into the
// fewest runs over disjoint intervals.
MinimalExpression minimal_expression(const Word& letters);
Word run_word(const RunFactor& f);

enum class Side { left, right };  // w = product * v  or  w = v * product

struct ProperPairReport {
  Perm w;
  bool toric = false;   // must hold for distinct letters
  bool cube = false;    // must hold when the expression is proper
  bool proper = false;
  bool toric_as_expected = false;
  bool cube_as_expected = false;  // proper implies cube
};
// Requires ell(w) = ell(v) + #letters; throws otherwise.
ProperPairReport proper_pair_check(const Perm& v, const Word& letters, Side side);

}  // namespace flagtoric
