#pragma once

#include <optional>
#include <vector>

#include "flagtoric/fan.hpp"
#include "flagtoric/perm.hpp"
#include "flagtoric/polynomial.hpp"
#include "flagtoric/polytope.hpp"
#include "flagtoric/poset.hpp"

namespace flagtoric {

// Simple digraph on integer vertices.
struct Digraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, unique

  bool acyclic() const;
  Digraph transitive_reduction() const;  // requires acyclicity
  bool underlying_forest() const;
  int out_degree(int v) const;
  bool isomorphic_to(const Digraph& o) const;
};

// Moment polytope of the Bruhat cone below w, vertices labelled by [e, w].
LatticePolytope schubert_polytope(const Perm& w);
// Admissible-transposition digraph at u inside [e, w]: edges (u(i), u(j)) for
// i < j with t u <= w and |ell(u) - ell(t u)| = 1.
Digraph admissible_digraph(const Perm& w, const Perm& u);
// Its transitive reduction; edges match the polytope edges at the vertex u.
Digraph edge_digraph(const Perm& w, const Perm& u);

bool is_smooth_at(const Perm& w, const Perm& u);
bool orbit_closure_smooth(const Perm& w);
// w avoids 4231 and 45-bar-312; equivalent to edge_digraph(w, w) a forest.
bool locally_factorial_pattern_test(const Perm& w);

// sum over u <= w of t^(ascending reduced edges at u)
IntPoly ascent_polynomial(const Perm& w);
IntPoly poincare_polynomial(const Perm& w);  // ascent polynomial at t^2
IntPoly eulerian(int n);

int complexity(const Perm& w);  // ell(w) - dim of the moment polytope

struct ToricReport {
  bool complexity_zero = false;
  bool pattern_avoiding = false;      // avoids 321 and 3412
  bool distinct_letter_word = false;  // ell(w) equals the support size
  bool interval_boolean = false;
  bool polytope_cube = false;
  bool consistent = false;
};
ToricReport toric_schubert_report(const Perm& w);

// Right half of the ray matrix of a distinct-letter Schubert fan: -1 on the
// diagonal, 1 at (j, k), k < j, when letters j and k are adjacent.
std::vector<IntVec> reduced_char_matrix(const Word& word);
Fan schubert_fan(int n, const Word& word);
Digraph letter_adjacency_digraph(const Word& word);  // (k, j), k < j, |i_k - i_j| = 1
enum class FanoClass { fano, weak_fano_not_fano };
FanoClass fano_class(const Word& word);

// Coxeter elements grouped into classes {w, w0 w w0}.
std::vector<std::vector<Perm>> coxeter_element_classes(int n);
std::vector<Perm> coxeter_elements(int n);

enum class ComplexityOneKind { smooth_c1, singular_c1, neither };
struct ComplexityOneReport {
  ComplexityOneKind kind = ComplexityOneKind::neither;
  bool c_one = false;
  bool smooth = false;
  bool pattern_smooth = false;    // one 321, no 3412
  bool pattern_singular = false;  // one 3412, no 321
  bool word_factor_smooth = false;    // s_i s_{i+1} s_i factor, no other repeats
  bool word_factor_singular = false;  // s_{i+1} s_i s_{i+2} s_{i+1} factor
  bool interval_smooth = false;       // [e,w] = S_3 x Boolean
  bool interval_singular = false;     // [e,w] = [e,3412] x Boolean
  bool polytope_smooth = false;       // hexagon x cube
  bool polytope_singular = false;     // 3412 polytope x cube
  bool consistent = false;
};
ComplexityOneReport complexity_one_report(const Perm& w);

GradedPoset interval_poset(const Perm& v, const Perm& w);

}  // namespace flagtoric
