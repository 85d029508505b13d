#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagtoric/fan.hpp"
#include "flagtoric/perm.hpp"

namespace flagtoric {

// Triangulation of a convex (n+2)-gon with vertices 0..n+1 counterclockwise
// and distinguished side {0, n+1}.
class Triangulation {
 public:
  Triangulation(int n, std::vector<std::pair<int, int>> diagonals);
  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& diagonals() const { return diags_; }
  // n triangles as sorted vertex triples
  std::vector<std::array<int, 3>> triangles() const;
  auto operator<=>(const Triangulation&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> diags_;  // sorted pairs a < b
};

std::vector<Triangulation> triangulations(int n);

// For each k in [n] the unique triangle {k_L, k, k_R} with k in the middle.
struct LeftRightTrees {
  std::vector<int> left, right;  // 1-indexed; left[k] = k_L, right[k] = k_R
  std::vector<std::pair<int, int>> left_edges() const;   // {k_L, k}
  std::vector<std::pair<int, int>> right_edges() const;  // {k, k_R}
};
LeftRightTrees left_right_trees(const Triangulation& t);

// Complete smooth fan in Z^{n+1}/Z(1..1) with rays v_k = pi_k - pi_{k_R},
// w_k = pi_{k_L} - pi_k over the basis pi_1..pi_n; maximal cones pick one of
// v_k, w_k for every k. Rays are stored as v_1..v_n then w_1..w_n.
Fan catalan_fan(const Triangulation& t);
// The unique k with v_k + w_k = 0 (apex over the distinguished side).
int catalan_fan_apex(const Triangulation& t);

// Plane binary tree with nodes labelled by positions 1..n; in-order traversal
// of labels is increasing.
struct BinaryTree {
  struct Node {
    int label = 0;
    int left = -1, right = -1;  // node indices
  };
  std::vector<Node> nodes;
  int root = -1;

  int size() const { return static_cast<int>(nodes.size()); }
  std::string plane_canonical() const;
  std::string unordered_canonical() const;  // children sorted recursively
};

BinaryTree tree_of_triangulation(const Triangulation& t);
Triangulation triangulation_of_tree(const BinaryTree& b);
// Recursive min-split: the smallest value is the root, prefix and suffix give
// the subtrees.
BinaryTree psi_tree(const Perm& u);
Triangulation psi(const Perm& u);

std::vector<long long> wedderburn_etherington(int upto);

// Extensions of u in S_{n+1}: 1 at the head with values shifted, or n+1 at
// the tail.
Perm hat_u(const Perm& u);
Perm tilde_u(const Perm& u);

enum class PairSide { head, tail };
// Pair (v, w) with v^-1 = hat_u, w^-1 = hat_u s(1,n) (head) or v^-1 =
// tilde_u, w^-1 = tilde_u s(n,1) (tail); ell(w) = ell(v) + n.
std::pair<Perm, Perm> catalan_pair(const Perm& u, PairSide side);

// Atoms of [hat_u, hat_u s(1,n)] match the left-tree edges (shifted by one)
// and coatoms match the right-tree edges of psi(u).
bool atoms_coatoms_match_trees(const Perm& u);

// Rooted forest on [n] with a sign on every non-root edge.
struct SignedForest {
  int n = 0;
  std::vector<int> parent;  // 1-indexed, 0 for roots
  std::vector<int> sign;    // +1 / -1 when parent != 0, else 0

  SignedForest() = default;
  SignedForest(int n_, std::vector<int> parent_, std::vector<int> sign_);
  std::vector<int> children(int v) const;
  SignedForest flip_children(int v) const;  // the move r_v
};

std::string canonical_signed_forest(const SignedForest& f);

// Fan of the Bott manifold encoded by the forest (rays v_i = e_i first).
Fan bott_fan_from_forest(const SignedForest& f);
// Inverse up to fan isomorphism; throws when the fan is not of Bott type.
SignedForest forest_from_bott_fan(const Fan& fan);

// Orbits of signed forests under the sign moves together with forest
// isomorphisms; canonical representative per orbit.
std::vector<SignedForest> signed_forest_classes(int n);

}  // namespace flagtoric
