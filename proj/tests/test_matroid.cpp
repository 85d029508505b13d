#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtoric/fan.hpp"
#include "flagtoric/matroid.hpp"

using namespace flagtoric;

namespace {

CoxeterSubset subset(std::initializer_list<const char*> strs) {
  std::vector<Perm> elems;
  for (const char* s : strs) elems.push_back(Perm::parse(s));
  return CoxeterSubset(std::move(elems));
}

}  // namespace

TEST_CASE("maximality property") {
  const auto bad = is_coxeter_matroid(subset({"213", "132"}));
  CHECK_FALSE(bad.is_matroid);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->u == Perm::parse("123"));
  CHECK_FALSE(bruhat_leq(bad.witness->max1, bad.witness->max2));
  CHECK_FALSE(bruhat_leq(bad.witness->max2, bad.witness->max1));

  CHECK(is_coxeter_matroid(subset({"231", "321"})).is_matroid);
  CHECK(is_coxeter_matroid(subset({"123", "213", "132", "312"})).is_matroid);
  CHECK(is_coxeter_matroid(subset({"123"})).is_matroid);
}

TEST_CASE("matroid retraction") {
  const CoxeterSubset m = subset({"123", "132", "213", "312"});
  CHECK(matroid_retraction(m, Perm::parse("231")) == Perm::parse("213"));
  for (const auto& u : m.elements()) CHECK(matroid_retraction(m, u) == u);
  CHECK(matroid_retraction(subset({"231", "321"}), Perm::parse("123")) ==
        Perm::parse("231"));
  CHECK_THROWS(matroid_retraction(subset({"213", "132"}), Perm::parse("123")));
}

TEST_CASE("algebraic retraction") {
  const CoxeterSubset m = subset({"123", "132", "213", "312"});
  CHECK(algebraic_retraction(m, Perm::parse("231")) == Perm::parse("213"));
  for (const auto& u : m.elements()) CHECK(algebraic_retraction(m, u) == u);
  // signed example
  std::vector<SignedPerm> sm = {SignedPerm::parse("1-423"), SignedPerm::parse("14-3-2"),
                                SignedPerm::parse("2413"), SignedPerm::parse("-3-41-2")};
  CHECK(algebraic_retraction_signed(sm, SignedPerm::parse("-23-14")) ==
        SignedPerm::parse("14-3-2"));
}

TEST_CASE("retraction idempotence") {
  const CoxeterSubset m = subset({"231", "321"});
  auto table = retraction_table(m, /*algebraic=*/true);
  for (const auto& [u, r] : table) CHECK(table.at(r) == r);
}

TEST_CASE("distance") {
  CHECK(graph_distance(Perm::parse("1243"), Perm::parse("3214")) == 4);
  CHECK(graph_distance(Perm::parse("1243"), Perm::parse("1243")) == 0);
  const CoxeterSubset m = subset({"1423", "2134"});
  const auto d = distance_to_set(Perm::parse("1324"), m);
  CHECK(d.distance == 2);
  REQUIRE(d.argmin.size() == 1);
  CHECK(d.argmin[0] == Perm::parse("2134"));
  CHECK(algebraic_retraction(m, Perm::parse("1324")) == Perm::parse("1423"));
}

TEST_CASE("matroid polytopes") {
  std::vector<Perm> s3 = all_perms(3);
  const LatticePolytope pi3 = matroid_polytope(CoxeterSubset(s3));
  CHECK(pi3.dim() == 2);
  CHECK(pi3.edges().size() == 6);
  const LatticePolytope seg = matroid_polytope(subset({"213", "132"}));
  CHECK_FALSE(seg.edge_directions_are_roots());
  CHECK_THROWS(matroid_polytope(subset({"123"}), IntVec{2, 1, 3}));
}

TEST_CASE("gelfand serganova on all subsets of S3") {
  const std::vector<Perm> s3 = all_perms(3);
  for (int mask = 1; mask < (1 << 6); ++mask) {
    std::vector<Perm> elems;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) elems.push_back(s3[i]);
    const CoxeterSubset m(std::move(elems));
    const bool matroid = is_coxeter_matroid(m).is_matroid;
    const bool phi = matroid_polytope(m).edge_directions_are_roots();
    CHECK(matroid == phi);
  }
}

TEST_CASE("fano plane matroid membership") {
  const CoxeterSubset m = fano_plane_matroid();
  CHECK(m.elements().size() == 4032);
  CHECK(m.contains(Perm::parse("1234567")));
  CHECK_FALSE(m.contains(Perm::parse("1247356")));  // head {1,2,4} is a line
  CHECK_FALSE(m.contains(Perm::parse("2417356")));
}

TEST_CASE("retraction agreement on small matroids") {
  // exhaustively over subsets of S3 that are matroids
  const std::vector<Perm> s3 = all_perms(3);
  for (int mask = 1; mask < (1 << 6); ++mask) {
    std::vector<Perm> elems;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) elems.push_back(s3[i]);
    const CoxeterSubset m(std::move(elems));
    if (!is_coxeter_matroid(m).is_matroid) continue;
    for (const Perm& u : s3) {
      const Perm r = matroid_retraction(m, u);
      CHECK(r == algebraic_retraction(m, u));
      const auto d = distance_to_set(u, m);
      REQUIRE(d.argmin.size() == 1);
      CHECK(d.argmin[0] == r);
    }
  }
}
