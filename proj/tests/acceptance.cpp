// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run through ctest or directly; pass --skip-slow to drop the rank-7 matroid
// verification.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flagtoric/catalan.hpp"
#include "flagtoric/matroid.hpp"
#include "flagtoric/orbit.hpp"
#include "flagtoric/richardson.hpp"
#include "flagtoric/schubert.hpp"

using namespace flagtoric;

namespace {

struct Checker {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << "\n";
    }
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      detail << "    failed: " << what << " (got " << got << ", want " << want
             << ")\n";
    }
  }
};

int failures = 0;

void criterion(int index, const std::string& name,
               const std::function<void(Checker&)>& body) {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "    exception: " << e.what() << "\n";
  }
  const auto secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::printf("%s %2d. %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", index,
              name.c_str(), secs);
  if (!c.ok) {
    std::cout << c.detail.str();
    ++failures;
  }
  std::cout.flush();
}

LatticePolytope pyramid() {
  return LatticePolytope({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, 0, -1}, {0, 0, 1}});
}

LatticePolytope octahedron() {
  return LatticePolytope(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

FlagMatrix example_flag() {
  return FlagMatrix({{Rat(1), Rat(1), Rat(0)},
                     {Rat(1), Rat(0), Rat(1)},
                     {Rat(1), Rat(0), Rat(0)}});
}

std::vector<Perm> sampled_s5(int count, std::uint64_t seed) {
  const auto perms = all_perms(5);
  std::mt19937_64 rng(seed);
  std::set<long long> chosen;
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(perms.size()) - 1);
  while (static_cast<int>(chosen.size()) < count) chosen.insert(dist(rng));
  std::vector<Perm> out;
  for (long long i : chosen) out.push_back(perms[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--skip-slow") skip_slow = true;

  criterion(1, "eulerian polynomials and their recurrence", [](Checker& c) {
    const std::vector<std::string> expect = {
        "1", "1 + t", "1 + 4t + t^2", "1 + 11t + 11t^2 + t^3",
        "1 + 26t + 66t^2 + 26t^3 + t^4"};
    for (int n = 1; n <= 5; ++n)
      c.expect_eq(eulerian(n).str(), expect[n - 1], "eulerian(" + std::to_string(n) + ")");
    for (int n = 1; n <= 8; ++n) {
      const IntPoly an = eulerian(n);
      const IntPoly rhs = IntPoly({1, n}) * an - IntPoly({0, -1, 1}) * an.derivative();
      c.expect(rhs == eulerian(n + 1),
               "recurrence at n = " + std::to_string(n));
    }
  });

  criterion(2, "poincare polynomials of the singular quartet", [](Checker& c) {
    c.expect_eq(poincare_polynomial(Perm::parse("4231")).str(),
                std::string("1 + 7t^2 + 11t^4 + t^6"), "Y_4231");
    c.expect_eq(poincare_polynomial(Perm::parse("3412")).str(),
                std::string("1 + 5t^2 + 7t^4 + t^6"), "Y_3412");
    c.expect_eq(poincare_polynomial(Perm::longest(3)).str(),
                std::string("1 + 4t^2 + t^4"), "rank-3 permutohedral variety");
  });

  criterion(3, "h-polynomial goldens", [](Checker& c) {
    c.expect_eq(pyramid().h_polynomial().stretch(2).str(),
                std::string("1 + t^2 + 2t^4 + t^6"), "pyramid");
    c.expect_eq(octahedron().h_polynomial().stretch(2).str(),
                std::string("1 - t^2 + 5t^4 + t^6"), "octahedron");
  });

  criterion(4, "ascent polynomial equals the h-polynomial", [](Checker& c) {
    for (const Perm& w : all_perms(4))
      c.expect(ascent_polynomial(w) == schubert_polytope(w).h_polynomial(),
               "w = " + w.str());
    for (const Perm& w : sampled_s5(30, 2026))
      c.expect(ascent_polynomial(w) == schubert_polytope(w).h_polynomial(),
               "w = " + w.str());
  });

  criterion(5, "orbit closure of the worked flag", [](Checker& c) {
    const FlagMatrix x = example_flag();
    const CoxeterSubset fp = fixed_points(x);
    std::vector<std::string> got;
    for (const auto& p : fp.elements()) got.push_back(p.str());
    c.expect_eq(got.size(), std::size_t{4}, "fixed point count");
    c.expect(std::set<std::string>(got.begin(), got.end()) ==
                 std::set<std::string>{"123", "132", "213", "312"},
             "fixed point set");
    const std::vector<std::pair<const char*, const char*>> table = {
        {"123", "123"}, {"213", "213"}, {"231", "213"},
        {"321", "312"}, {"312", "312"}, {"132", "132"}};
    for (const auto& [u, r] : table)
      c.expect(geometric_retraction(x, Perm::parse(u)) == Perm::parse(r),
               std::string("retraction at ") + u);
    const OrbitFan fan = orbit_fan(x);
    c.expect_eq(fan.fibers.size(), std::size_t{4}, "maximal cone count");
    auto fiber_is = [&](const char* y, std::set<std::string> want) {
      std::set<std::string> got_f;
      for (const auto& p : fan.fibers.at(Perm::parse(y))) got_f.insert(p.str());
      return got_f == want;
    };
    c.expect(fiber_is("123", {"123"}), "cone of 123");
    c.expect(fiber_is("132", {"132"}), "cone of 132");
    c.expect(fiber_is("213", {"213", "231"}), "cone of 213");
    c.expect(fiber_is("312", {"312", "321"}), "cone of 312");
  });

  criterion(6, "retraction theorems on 50 random rank-4 flags", [](Checker& c) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const FlagMatrix x = random_flag(4, seed);
      const CoxeterSubset fp = fixed_points(x);
      if (!is_coxeter_matroid(fp).is_matroid) {
        c.expect(false, "fixed points not a matroid at seed " + std::to_string(seed));
        continue;
      }
      for (const Perm& u : all_perms(4)) {
        const Perm rm = matroid_retraction(fp, u);
        c.expect(rm == algebraic_retraction(fp, u),
                 "algebraic vs matroid at seed " + std::to_string(seed));
        const auto d = distance_to_set(u, fp);
        c.expect(d.argmin.size() == 1 && d.argmin[0] == rm,
                 "closest point at seed " + std::to_string(seed));
      }
    }
  });

  criterion(7, "gelfand-serganova equivalence", [](Checker& c) {
    const auto s3 = all_perms(3);
    for (int mask = 1; mask < (1 << 6); ++mask) {
      std::vector<Perm> elems;
      for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) elems.push_back(s3[i]);
      const CoxeterSubset m(std::move(elems));
      c.expect(is_coxeter_matroid(m).is_matroid ==
                   matroid_polytope(m).edge_directions_are_roots(),
               "subset of S3, mask " + std::to_string(mask));
    }
    const auto s4 = all_perms(4);
    std::vector<int> idx;
    long long bad = 0;
    std::function<void(int, int)> rec = [&](int from, int left) {
      if (!idx.empty()) {
        std::vector<Perm> elems;
        for (int i : idx) elems.push_back(s4[i]);
        const CoxeterSubset m(std::move(elems));
        if (is_coxeter_matroid(m).is_matroid !=
            matroid_polytope(m).edge_directions_are_roots())
          ++bad;
      }
      if (left == 0) return;
      for (int i = from; i < 24; ++i) {
        idx.push_back(i);
        rec(i + 1, left - 1);
        idx.pop_back();
      }
    };
    rec(0, 6);
    c.expect_eq(bad, 0LL, "disagreements over subsets of S4 of size <= 6");
  });

  if (skip_slow) {
    std::printf("SKIP  8. fano-plane matroid (slow suite disabled)\n");
  } else {
    criterion(8, "fano-plane matroid (slow)", [](Checker& c) {
      const CoxeterSubset m = fano_plane_matroid();
      c.expect_eq(m.elements().size(), std::size_t{4032}, "element count");
      c.expect(is_coxeter_matroid(m).is_matroid, "maximality property");
    });
  }

  criterion(9, "edge graphs and smoothness versus simpleness", [](Checker& c) {
    const Digraph g = edge_digraph(Perm::parse("3412"), Perm::parse("2143"));
    c.expect(std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()) ==
                 std::set<std::pair<int, int>>{{1, 4}, {2, 1}, {4, 3}},
             "reduced edge set at 2143");
    for (const Perm& w : all_perms(4)) {
      if (w.is_identity()) continue;
      const LatticePolytope q = schubert_polytope(w);
      for (const Perm& u : interval_elements(Perm::identity(4), w)) {
        const int ui = q.vertex_index(moment_point(u));
        c.expect(is_smooth_at(w, u) == (q.edge_degree(ui) == q.dim()),
                 "w = " + w.str() + ", u = " + u.str());
      }
    }
  });

  criterion(10, "toric classification", [](Checker& c) {
    for (const Perm& w : all_perms(5))
      c.expect(toric_schubert_report(w).consistent, "conditions at w = " + w.str());
    c.expect(reduced_char_matrix({1, 2, 3, 4}) ==
                 std::vector<IntVec>{
                     {-1, 0, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}},
             "characteristic matrix of the chain word");
    c.expect(reduced_char_matrix({1, 3, 2, 4}) ==
                 std::vector<IntVec>{
                     {-1, 0, 0, 0}, {0, -1, 0, 0}, {1, 1, -1, 0}, {0, 1, 0, -1}},
             "characteristic matrix of the mixed word");
    const auto words = reduced_words(word_product(5, {1, 3, 2, 4}));
    c.expect_eq(words.size(), std::size_t{5}, "reduced word count");
    for (std::size_t i = 1; i < words.size(); ++i)
      c.expect(fan_isomorphic(schubert_fan(5, words[0]), schubert_fan(5, words[i])),
               "fan of word " + word_str(words[i]));
    const Word w3142 = reduced_words(Perm::parse("3142"), 1)[0];
    const Fan f = schubert_fan(4, w3142);
    c.expect(is_weak_fano(f) && !is_fano(f), "3142 weak Fano but not Fano");
    c.expect(fano_class(w3142) == FanoClass::weak_fano_not_fano, "digraph rule at 3142");
  });

  criterion(11, "complexity-one classification", [](Checker& c) {
    c.expect(complexity_one_report(Perm::parse("3412")).kind ==
                 ComplexityOneKind::singular_c1,
             "3412 is the singular model");
    c.expect(complexity_one_report(Perm::parse("321")).kind ==
                 ComplexityOneKind::smooth_c1,
             "321 is the smooth model");
    for (const Perm& w : all_perms(5))
      c.expect(complexity_one_report(w).consistent, "conditions at w = " + w.str());
  });

  criterion(12, "interval polytope theorems", [](Checker& c) {
    {
      const CubeReport r = cube_theorem_check(Perm::parse("1324"), Perm::parse("4231"));
      c.expect(!r.cube && !r.toric && r.boolean_interval, "pair (1324, 4231)");
    }
    {
      const CubeReport r = cube_theorem_check(Perm::parse("1324"), Perm::parse("3412"));
      c.expect(!r.cube && r.toric && !r.boolean_interval, "pair (1324, 3412)");
    }
    {
      const CubeReport r = cube_theorem_check(Perm::parse("1243"), Perm::parse("3412"));
      c.expect(r.cube && r.toric && r.boolean_interval, "pair (1243, 3412)");
    }
    for (const Perm& v : all_perms(4))
      for (const Perm& w : all_perms(4)) {
        if (!bruhat_leq(v, w)) continue;
        c.expect(cube_theorem_check(v, w).consistent,
                 "cube criterion at (" + v.str() + ", " + w.str() + ")");
        c.expect(interval_polytope(v, w).dim() ==
                     interval_polytope(v.inverse(), w.inverse()).dim(),
                 "dimension symmetry at (" + v.str() + ", " + w.str() + ")");
      }
  });

  criterion(13, "catalan families", [](Checker& c) {
    c.expect_eq(triangulations(3).size(), std::size_t{5}, "triangulations of the pentagon");
    c.expect_eq(triangulations(5).size(), std::size_t{42}, "triangulations of the heptagon");
    c.expect(atoms_coatoms_match_trees(Perm::parse("31687524")),
             "atom and coatom pairs of the worked example");
    const auto b = wedderburn_etherington(15);
    c.expect(b == std::vector<long long>{1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451,
                                         983, 2179, 4850},
             "wedderburn-etherington table");
    for (int n = 1; n <= 5; ++n) {
      const auto ts = triangulations(n);
      for (const Triangulation& t : ts)
        c.expect(is_fano(catalan_fan(t)), "fano at a triangulation of size " +
                                               std::to_string(n));
      // fan isomorphism classes, counted against class representatives
      std::vector<Fan> reps;
      for (const Triangulation& t : ts) {
        const Fan f = catalan_fan(t);
        bool found = false;
        for (const Fan& r : reps)
          if (fan_isomorphic(r, f)) {
            found = true;
            break;
          }
        if (!found) reps.push_back(f);
      }
      c.expect_eq(reps.size(), static_cast<std::size_t>(b[n - 1 + 1]),
                  "fan classes at n = " + std::to_string(n));
    }
  });

  criterion(14, "signed forest classes", [](Checker& c) {
    // The stated expectation for three vertices is four classes; the honest
    // orbit count is five (see the decisions ledger), so this check reports
    // its failure rather than adjusting the expectation.
    c.expect_eq(signed_forest_classes(3).size(), std::size_t{4},
                "classes on three vertices");
    c.expect_eq(signed_forest_classes(4).size(), std::size_t{13},
                "classes on four vertices");
  });

  criterion(15, "normal fans of interval cubes", [](Checker& c) {
    for (const Perm& u : all_perms(3)) {
      const auto [v, w] = catalan_pair(u, PairSide::head);
      c.expect(fan_isomorphic(normal_fan(interval_polytope(v, w)), catalan_fan(psi(u))),
               "head pair of u = " + u.str());
      const auto [vt, wt] = catalan_pair(u, PairSide::tail);
      const Perm w0 = Perm::longest(3);
      c.expect(fan_isomorphic(normal_fan(interval_polytope(vt, wt)),
                              catalan_fan(psi(w0 * u * w0))),
               "tail pair of u = " + u.str());
    }
  });

  criterion(16, "conjecture harnesses over S5", [](Checker& c) {
    // report witnesses without asserting the conjectures
    int schubert_witnesses = 0;
    for (const Perm& w : all_perms(5)) {
      if (!is_smooth_at(w, w)) continue;
      if (!orbit_closure_smooth(w)) ++schubert_witnesses;
    }
    std::cout << "    schubert harness: " << schubert_witnesses
              << " witness(es) over S5\n";
    int interval_witnesses = 0, pairs = 0;
    const auto perms = all_perms(5);
    for (const Perm& v : perms)
      for (const Perm& w : perms) {
        if (v == w || !bruhat_leq(v, w)) continue;
        ++pairs;
        const LatticePolytope q = interval_polytope(v, w);
        if (!q.is_simple_at(q.vertex_index(moment_point(v)))) continue;
        if (!q.is_simple_at(q.vertex_index(moment_point(w)))) continue;
        if (!q.is_simple()) ++interval_witnesses;
      }
    std::cout << "    interval harness: " << interval_witnesses
              << " witness(es) over " << pairs << " pairs\n";
    c.expect(pairs > 0, "harness enumerated the comparable pairs");
  });

  std::printf("%d of 16 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
