#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flagtoric/perm.hpp"
#include "flagtoric/polytope.hpp"

using namespace flagtoric;

namespace {

LatticePolytope permutohedron(int n) {
  std::vector<IntVec> verts;
  for (const Perm& w : all_perms(n)) {
    IntVec v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = w(i);
    verts.push_back(std::move(v));
  }
  return LatticePolytope(std::move(verts));
}

LatticePolytope pyramid() {
  return LatticePolytope({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, 0, -1}, {0, 0, 1}});
}

LatticePolytope octahedron() {
  return LatticePolytope(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS(LatticePolytope({{0, 0}, {0, 0}}));              // duplicate
  CHECK_THROWS(LatticePolytope({{0, 0}, {2, 0}, {1, 0}}));      // midpoint not extreme
  CHECK_NOTHROW(LatticePolytope({{0, 0}, {2, 0}, {1, 1}}));
  const LatticePolytope pt({{3, 1, 4}});
  CHECK(pt.dim() == 0);
  CHECK(pt.f_polynomial().coeffs() == std::vector<std::int64_t>{1});
}

TEST_CASE("dimension") {
  CHECK(permutohedron(3).dim() == 2);
  CHECK(pyramid().dim() == 3);
  CHECK(unit_cube(4).dim() == 4);
}

TEST_CASE("hexagon") {
  const LatticePolytope hex = permutohedron(3);
  CHECK(hex.edges().size() == 6);
  CHECK(hex.facets().size() == 6);
  CHECK(hex.is_simple());
  CHECK(hex.f_polynomial().coeffs() == std::vector<std::int64_t>{6, 6, 1});
  CHECK(hex.edge_directions_are_roots());
}

TEST_CASE("permutohedron facets count") {
  for (int n = 3; n <= 4; ++n)
    CHECK(permutohedron(n).facets().size() == (1u << n) - 2);
}

TEST_CASE("pyramid and octahedron h-polynomials") {
  CHECK(pyramid().f_polynomial().coeffs() == std::vector<std::int64_t>{5, 8, 5, 1});
  CHECK(pyramid().h_polynomial().stretch(2).str() == "1 + t^2 + 2t^4 + t^6");
  CHECK(octahedron().f_polynomial().coeffs() == std::vector<std::int64_t>{6, 12, 8, 1});
  CHECK(octahedron().h_polynomial().stretch(2).str() == "1 - t^2 + 5t^4 + t^6");
  // simplex f-polynomial
  const LatticePolytope simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(simplex.f_polynomial().coeffs() == std::vector<std::int64_t>{4, 6, 4, 1});
}

TEST_CASE("euler relation") {
  for (const LatticePolytope& p : {pyramid(), octahedron(), permutohedron(4), unit_cube(3)}) {
    const IntPoly f = p.f_polynomial();
    std::int64_t alt = 0;
    for (int k = 0; k < p.dim(); ++k) alt += (k % 2 ? -1 : 1) * f[k];
    CHECK(alt == 1 - (p.dim() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("cube recognition") {
  CHECK(unit_cube(0).is_cube());
  CHECK(unit_cube(2).is_cube());
  CHECK(unit_cube(3).is_cube());
  CHECK_FALSE(octahedron().is_cube());
  CHECK_FALSE(permutohedron(3).is_cube());
  const LatticePolytope seg({{0, 0}, {1, 1}});
  CHECK(seg.is_cube());
  CHECK(seg.edges().size() == 1);
}

TEST_CASE("simple vertices") {
  const LatticePolytope pyr = pyramid();
  // the apex (0,1,0) sees four edges, the base vertices three
  int simple = 0;
  for (std::size_t i = 0; i < pyr.num_vertices(); ++i)
    if (pyr.is_simple_at(static_cast<int>(i))) ++simple;
  CHECK(simple == 4);
  CHECK_FALSE(pyr.is_simple());
  CHECK(unit_cube(3).is_simple());
}

TEST_CASE("edge certificates and midpoint oracle") {
  for (const LatticePolytope& p : {pyramid(), octahedron(), permutohedron(3), unit_cube(3)}) {
    std::set<std::pair<int, int>> edge_set(p.edges().begin(), p.edges().end());
    const int m = static_cast<int>(p.num_vertices());
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        const bool is_edge = edge_set.count({u, v}) > 0;
        auto cert = p.edge_certificate(u, v);
        CHECK(cert.has_value() == is_edge);
        CHECK(p.midpoint_in_rest(u, v) == !is_edge);
        if (cert) {
          // equal on the pair, strictly larger than on the rest
          auto value = [&](int i) {
            Rat s(0);
            for (int k = 0; k < p.ambient_dim(); ++k)
              s += (*cert)[k] * Rat(p.vertices()[i][k]);
            return s;
          };
          const Rat vu = value(u);
          CHECK(vu == value(v));
          for (int x = 0; x < m; ++x)
            if (x != u && x != v) CHECK(value(x) < vu);
        }
      }
  }
}

TEST_CASE("root directions") {
  CHECK(permutohedron(4).edge_directions_are_roots());
  CHECK(LatticePolytope({{1, 2, 3}}).edge_directions_are_roots());
  // segment from 213 to 132 is not a root direction
  CHECK_FALSE(LatticePolytope({{2, 1, 3}, {1, 3, 2}}).edge_directions_are_roots());
}

TEST_CASE("ascent profiles") {
  const LatticePolytope hex = permutohedron(3);
  // labels: vertex i is the i-th permutation in lex order
  const IntVec a = {5, 4, 1};
  auto prof = hex.ascent_profile(a);
  CHECK(prof.face_condition);
  std::multiset<int> hist(prof.ascents.begin(), prof.ascents.end());
  CHECK(hist == std::multiset<int>{0, 1, 1, 1, 1, 2});
  // ascents under a plus ascents under -a add up to the degree
  IntVec neg = a;
  for (auto& x : neg) x = -x;
  auto down = hex.ascent_profile(neg);
  for (std::size_t i = 0; i < hex.num_vertices(); ++i)
    CHECK(prof.ascents[i] + down.ascents[i] == hex.edge_degree(static_cast<int>(i)));
  CHECK_THROWS(hex.ascent_profile({1, 1, 1}));  // level on every edge

  // pyramid with the height function of the worked example
  auto pyr = pyramid().ascent_profile({-2, -1, 3});
  CHECK(pyr.face_condition);
  std::multiset<int> ph(pyr.ascents.begin(), pyr.ascents.end());
  CHECK(ph == std::multiset<int>{0, 1, 2, 2, 3});

  // sum over vertices of (1+t)^asc equals the f-polynomial when the face
  // condition holds
  for (const LatticePolytope& p : {pyramid(), permutohedron(3), unit_cube(3)}) {
    auto pr = p.ascent_profile(p.dim() == 3 ? IntVec{-2, -1, 3} : IntVec{5, 4, 1});
    REQUIRE(pr.face_condition);
    IntPoly sum;
    for (int asc : pr.ascents) {
      IntPoly term({1});
      for (int k = 0; k < asc; ++k) term = term * IntPoly({1, 1});
      sum = sum + term;
    }
    CHECK(sum == p.f_polynomial());
  }
}

TEST_CASE("products and combinatorial equivalence") {
  const LatticePolytope sq = unit_cube(2);
  const LatticePolytope cube = product(sq, unit_cube(1));
  CHECK(cube.is_cube());
  CHECK(combinatorially_equivalent(cube, unit_cube(3)));
  CHECK_FALSE(combinatorially_equivalent(cube, octahedron()));
  CHECK(combinatorially_equivalent(product(permutohedron(3), unit_cube(1)),
                                   product(unit_cube(1), permutohedron(3))));
}

TEST_CASE("face poset sanity") {
  const LatticePolytope sq = unit_cube(2);
  const auto faces = sq.faces();
  CHECK(faces.size() == 4 + 4 + 1);
  CHECK(sq.face_poset().height() == 2);
}
