#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "flagtoric/catalan.hpp"
#include "flagtoric/richardson.hpp"

using namespace flagtoric;

TEST_CASE("triangulation counts follow the catalan numbers") {
  CHECK(triangulations(1).size() == 1);
  CHECK(triangulations(2).size() == 2);
  CHECK(triangulations(3).size() == 5);
  CHECK(triangulations(4).size() == 14);
  CHECK(triangulations(5).size() == 42);
}

TEST_CASE("triangulation validation") {
  CHECK_THROWS(Triangulation(3, {{0, 2}}));               // wrong count
  CHECK_THROWS(Triangulation(3, {{0, 2}, {1, 3}}));       // crossing
  CHECK_NOTHROW(Triangulation(3, {{0, 2}, {0, 3}}));
  CHECK_THROWS(Triangulation(2, {{0, 3}}));               // the long side
}

TEST_CASE("left and right trees of the ten-gon example") {
  // triangles {0,1,2}, {0,2,9}, {2,3,6}, {3,4,5}, {3,5,6}, {2,6,7}, {2,7,9},
  // {7,8,9}
  const Triangulation t(8, {{0, 2}, {2, 9}, {2, 7}, {2, 6}, {3, 6}, {3, 5}, {7, 9}});
  const LeftRightTrees lr = left_right_trees(t);
  CHECK(lr.left == std::vector<int>{-1, 0, 0, 2, 3, 3, 2, 2, 7});
  CHECK(lr.right == std::vector<int>{-1, 2, 9, 6, 5, 6, 7, 9, 9});
  const Fan f = catalan_fan(t);
  // v_3 = pi_3 - pi_6 and w_7 = pi_2 - pi_7
  IntVec v3(8, 0);
  v3[2] = 1;
  v3[5] = -1;
  CHECK(f.rays[2] == v3);
  IntVec w7(8, 0);
  w7[1] = 1;
  w7[6] = -1;
  CHECK(f.rays[8 + 6] == w7);
  CHECK(catalan_fan_apex(t) == 2);
}

TEST_CASE("catalan fans are smooth complete and fano") {
  for (int n = 1; n <= 5; ++n)
    for (const Triangulation& t : triangulations(n)) {
      const Fan f = catalan_fan(t);
      CHECK(fan_is_smooth(f));
      CHECK(fan_is_complete_simplicial(f));
      CHECK(is_fano(f));
      // primitive collections are exactly the pairs {v_k, w_k}
      const auto pcs = primitive_collections(f);
      CHECK(pcs.size() == static_cast<std::size_t>(n));
      for (const auto& pc : pcs) {
        REQUIRE(pc.size() == 2);
        CHECK(pc[1] - pc[0] == n);
      }
      // unique k with v_k + w_k = 0
      int zeros = 0;
      for (int k = 0; k < n; ++k) {
        bool zero = true;
        for (int i = 0; i < n; ++i)
          if (f.rays[k][i] + f.rays[n + k][i] != 0) zero = false;
        if (zero) ++zeros;
      }
      CHECK(zeros == 1);
    }
}

TEST_CASE("duality of ray vectors with the basis") {
  const Triangulation t(8, {{0, 2}, {2, 9}, {2, 7}, {2, 6}, {3, 6}, {3, 5}, {7, 9}});
  const LeftRightTrees lr = left_right_trees(t);
  const Fan f = catalan_fan(t);
  const int n = 8;
  // p_j = e_{j_L + 1} - e_{j + 1}, q_j = -e_j + e_{j_R} in the sum-zero
  // lattice; pairing through prefix sums
  auto pairing = [&](const IntVec& c, const IntVec& y) {
    std::int64_t acc = 0, prefix = 0;
    for (int k = 0; k < n; ++k) {
      prefix += y[k];
      acc += c[k] * prefix;
    }
    return acc;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      IntVec p(n + 1, 0), q(n + 1, 0);
      p[lr.left[j]] = 1;  // e_{j_L + 1}: vertices are 0-based ambient slots
      p[j] = -1;
      q[j - 1] = -1;
      q[lr.right[j] - 1] = 1;
      CHECK(pairing(f.rays[i - 1], p) == (i == j ? 1 : 0));
      CHECK(pairing(f.rays[n + i - 1], q) == (i == j ? 1 : 0));
    }
}

TEST_CASE("trees and triangulations are inverse") {
  for (int n = 1; n <= 5; ++n)
    for (const Triangulation& t : triangulations(n)) {
      const BinaryTree b = tree_of_triangulation(t);
      CHECK(triangulation_of_tree(b) == t);
    }
  // five pentagon triangulations give five distinct plane trees
  std::set<std::string> shapes;
  for (const Triangulation& t : triangulations(3))
    shapes.insert(tree_of_triangulation(t).plane_canonical());
  CHECK(shapes.size() == 5);
  // ... but only two unordered ones
  std::set<std::string> unordered;
  for (const Triangulation& t : triangulations(3))
    unordered.insert(tree_of_triangulation(t).unordered_canonical());
  CHECK(unordered.size() == 2);
}

TEST_CASE("psi") {
  const BinaryTree b = psi_tree(Perm::parse("31687524"));
  CHECK(b.nodes[b.root].label == 2);
  const Triangulation t = psi(Perm::parse("31687524"));
  const Triangulation expect(8, {{0, 2}, {2, 9}, {2, 7}, {2, 6}, {3, 6}, {3, 5}, {7, 9}});
  CHECK(t == expect);
  CHECK(psi(Perm::parse("21687534")) == psi(Perm::parse("31687524")));
  // identity: min at the head, everything hangs to the right
  const BinaryTree chain = psi_tree(Perm::identity(4));
  int cur = chain.root, len = 0;
  while (cur >= 0) {
    CHECK(chain.nodes[cur].left == -1);
    cur = chain.nodes[cur].right;
    ++len;
  }
  CHECK(len == 4);
}

TEST_CASE("wedderburn etherington numbers") {
  const auto b = wedderburn_etherington(15);
  CHECK(b == std::vector<long long>{1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451, 983,
                                    2179, 4850});
}

TEST_CASE("unordered tree classes count by wedderburn etherington") {
  const auto b = wedderburn_etherington(7);
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> classes;
    for (const Triangulation& t : triangulations(n))
      classes.insert(tree_of_triangulation(t).unordered_canonical());
    CHECK(classes.size() == static_cast<std::size_t>(b[n]));  // b_{n+1}
  }
}

TEST_CASE("head and tail extensions") {
  CHECK(hat_u(Perm::parse("2314")) == Perm::parse("13425"));
  CHECK(tilde_u(Perm::parse("2314")) == Perm::parse("23145"));
  CHECK(hat_u(Perm::parse("31687524")) == Perm::parse("142798635"));
  CHECK(hat_u(Perm::identity(3)) == Perm::identity(4));
  // hat_u composed with the ascending run gives the rotated word
  Word run(8);
  for (int i = 0; i < 8; ++i) run[i] = i + 1;
  CHECK(hat_u(Perm::parse("31687524")) * word_product(9, run) ==
        Perm::parse("427986351"));
}

TEST_CASE("catalan pairs") {
  for (const Perm& u : all_perms(3)) {
    const auto [v, w] = catalan_pair(u, PairSide::head);
    CHECK(w.length() == v.length() + 3);
    CHECK(v.inverse() == hat_u(u));
    CHECK(interval_polytope(v, w).is_cube());
    const auto [vt, wt] = catalan_pair(u, PairSide::tail);
    CHECK(wt.length() == vt.length() + 3);
    CHECK(interval_polytope(vt, wt).is_cube());
  }
}

TEST_CASE("atoms and coatoms match the trees") {
  CHECK(atoms_coatoms_match_trees(Perm::parse("31687524")));
  CHECK(atoms_coatoms_match_trees(Perm::identity(1)));
  for (const Perm& u : all_perms(4)) CHECK(atoms_coatoms_match_trees(u));
}

TEST_CASE("normal fans of catalan pairs") {
  for (const Perm& u : all_perms(3)) {
    const auto [v, w] = catalan_pair(u, PairSide::head);
    const Fan nf = normal_fan(interval_polytope(v, w));
    CHECK(fan_isomorphic(nf, catalan_fan(psi(u))));
    const auto [vt, wt] = catalan_pair(u, PairSide::tail);
    const Fan nft = normal_fan(interval_polytope(vt, wt));
    const Perm w0 = Perm::longest(3);
    CHECK(fan_isomorphic(nft, catalan_fan(psi(w0 * u * w0))));
  }
}

TEST_CASE("fan classes equal unordered tree classes") {
  for (int n = 2; n <= 4; ++n) {
    const auto ts = triangulations(n);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i; j < ts.size(); ++j) {
        const bool same_tree = tree_of_triangulation(ts[i]).unordered_canonical() ==
                               tree_of_triangulation(ts[j]).unordered_canonical();
        CHECK(fan_isomorphic(catalan_fan(ts[i]), catalan_fan(ts[j])) == same_tree);
      }
  }
}

TEST_CASE("signed forests") {
  const SignedForest path(3, {0, 0, 1, 2}, {0, 0, 1, 1});
  CHECK(path.children(1) == std::vector<int>{2});
  // relabelled copies share the canonical form
  const SignedForest cherry(3, {0, 0, 1, 1}, {0, 0, 1, 1});
  const SignedForest chain(3, {0, 2, 0, 1}, {0, 1, 0, 1});  // path rooted at 2
  CHECK(canonical_signed_forest(cherry) != canonical_signed_forest(path));
  CHECK(canonical_signed_forest(chain) == canonical_signed_forest(path));
  CHECK_THROWS(SignedForest(2, {0, 2, 1}, {0, 1, 1}));  // two-cycle
  CHECK_THROWS(SignedForest(2, {0, 0, 1}, {0, 0, 0}));  // missing edge sign
  const SignedForest flipped = path.flip_children(1);
  CHECK(flipped.sign[2] == -1);
  CHECK(flipped.sign[3] == 1);
}

TEST_CASE("bott fans from forests") {
  // isolated roots give the product of lines
  const SignedForest roots(3, {0, 0, 0, 0}, {0, 0, 0, 0});
  const Fan f = bott_fan_from_forest(roots);
  CHECK(f.rays.size() == 6);
  CHECK(fan_is_smooth(f));
  CHECK(is_fano(f));
  for (int k = 0; k < 3; ++k) {
    IntVec sum(3, 0);
    for (int i = 0; i < 3; ++i) sum[i] = f.rays[k][i] + f.rays[3 + k][i];
    CHECK(sum == IntVec(3, 0));
  }
  // round trip through the forest reconstruction
  for (const SignedForest& g : signed_forest_classes(3)) {
    const Fan bf = bott_fan_from_forest(g);
    CHECK(is_fano(bf));
    const SignedForest back = forest_from_bott_fan(bf);
    CHECK(fan_isomorphic(bott_fan_from_forest(back), bf));
  }
  // catalan fans are of Bott type and their forests reproduce them
  for (const Triangulation& t : triangulations(3)) {
    const Fan cf = catalan_fan(t);
    const SignedForest sf = forest_from_bott_fan(cf);
    CHECK(fan_isomorphic(bott_fan_from_forest(sf), cf));
  }
}

TEST_CASE("signed forest classes") {
  CHECK(signed_forest_classes(1).size() == 1);
  CHECK(signed_forest_classes(2).size() == 2);
  // the worked small cases: the paper's figure for three vertices lists ten
  // signed forests falling into the orbit classes path, cherry++ ~ cherry--,
  // cherry+-, edge plus root, three roots
  const auto c3 = signed_forest_classes(3);
  CHECK(c3.size() == 5);
  const auto c4 = signed_forest_classes(4);
  CHECK(c4.size() == 13);
  // distinct fans for distinct classes at n = 3
  for (std::size_t i = 0; i < c3.size(); ++i)
    for (std::size_t j = i + 1; j < c3.size(); ++j)
      CHECK_FALSE(fan_isomorphic(bott_fan_from_forest(c3[i]),
                                 bott_fan_from_forest(c3[j])));
}
