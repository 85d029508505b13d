#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "flagtoric/perm.hpp"

using namespace flagtoric;

TEST_CASE("composition and inverse") {
  const Perm a = Perm::parse("312");
  const Perm b = Perm::parse("231");
  CHECK((a * b).str() == "123");
  CHECK((Perm::identity(4) * Perm::parse("4213")).str() == "4213");
  CHECK(a.inverse().inverse() == a);
  // s1 s2 s3 s4 in S5
  Perm p = Perm::identity(5);
  for (int i = 1; i <= 4; ++i) p = p * Perm::s(5, i);
  CHECK(p.str() == "23451");
}

TEST_CASE("length") {
  CHECK(Perm::parse("4213").length() == 4);
  CHECK(Perm::identity(6).length() == 0);
  CHECK(Perm::parse("4321").length() == 6);
  for (const Perm& w : all_perms(5)) {
    CHECK(w.length() == w.inverse().length());
    const Perm w0 = Perm::longest(5);
    CHECK(w.length() == (w0 * w * w0).length());
  }
}

TEST_CASE("bruhat order") {
  CHECK_FALSE(bruhat_leq(Perm::parse("213"), Perm::parse("132")));
  CHECK_FALSE(bruhat_leq(Perm::parse("132"), Perm::parse("213")));
  CHECK(bruhat_leq(Perm::parse("1324"), Perm::parse("4231")));
  for (const Perm& w : all_perms(4)) CHECK(bruhat_leq(Perm::identity(4), w));
}

TEST_CASE("bruhat agrees with saturated cover chains") {
  for (int n = 2; n <= 5; ++n) {
    // reachability through covers
    std::vector<Perm> perms = all_perms(n);
    std::map<Perm, std::set<Perm>> above;  // w -> everything reachable upward
    std::vector<Perm> by_len = perms;
    std::sort(by_len.begin(), by_len.end(), [](const Perm& a, const Perm& b) {
      return a.length() > b.length();
    });
    for (const Perm& u : by_len) {
      above[u].insert(u);
      for (const Perm& c : cover_ups(u))
        above[u].insert(above[c].begin(), above[c].end());
    }
    for (const Perm& v : perms)
      for (const Perm& w : perms)
        CHECK(bruhat_leq(v, w) == static_cast<bool>(above[v].count(w)));
  }
}

TEST_CASE("covers and interval atoms") {
  CHECK(bruhat_covers(Perm::identity(2), Perm::s(2, 1)));
  const Perm v = Perm::parse("142798635");
  const Perm w = Perm::parse("427986351");
  const std::set<std::pair<int, int>> expect_atoms = {
      {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}, {3, 7}, {3, 8}, {8, 9}};
  const std::set<std::pair<int, int>> expect_coatoms = {
      {1, 2}, {2, 9}, {3, 6}, {4, 5}, {5, 6}, {6, 7}, {7, 9}, {8, 9}};
  std::set<std::pair<int, int>> atoms, coatoms;
  for (const Perm& a : interval_atoms(v, w)) {
    std::pair<int, int> d{0, 0};
    for (int i = 1; i <= 9; ++i)
      if (a(i) != v(i)) (d.first ? d.second : d.first) = i;
    atoms.insert(d);
  }
  for (const Perm& c : interval_coatoms(v, w)) {
    std::pair<int, int> d{0, 0};
    for (int i = 1; i <= 9; ++i)
      if (c(i) != w(i)) (d.first ? d.second : d.first) = i;
    coatoms.insert(d);
  }
  CHECK(atoms == expect_atoms);
  CHECK(coatoms == expect_coatoms);
}

TEST_CASE("interval size and duality") {
  CHECK(interval_elements(Perm::parse("1324"), Perm::parse("3412")).size() == 10);
  for (const Perm& v : all_perms(4))
    for (const Perm& w : all_perms(4)) {
      if (!bruhat_leq(v, w)) continue;
      CHECK(interval_elements(v, w).size() ==
            interval_elements(v.inverse(), w.inverse()).size());
    }
}

TEST_CASE("reduced words") {
  const Perm w = word_product(5, {1, 3, 2, 4});
  const auto words = reduced_words(w);
  CHECK(words.size() == 5);
  for (const auto& word : words) {
    CHECK(word.size() == static_cast<std::size_t>(w.length()));
    CHECK(word_product(5, word) == w);
  }
  // lexicographic order
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
  CHECK(reduced_words(Perm::identity(3)) == std::vector<Word>{{}});
  const auto w321 = reduced_words(Perm::parse("321"));
  CHECK(w321 == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(Perm::longest(4), 3).size() == 3);
  CHECK(word_str({1, 3, 2, 4}) == "s1 s3 s2 s4");
}

TEST_CASE("patterns") {
  CHECK(count_pattern(Perm::parse("3412"), Perm::parse("3412")) == 1);
  CHECK(count_pattern(Perm::parse("3412"), Perm::parse("321")) == 0);
  CHECK(count_pattern(Perm::parse("3142"), Perm::parse("321")) == 0);
  CHECK(count_pattern(Perm::identity(4), Perm::parse("21")) == 0);
  // symmetry under inversion
  for (const Perm& w : all_perms(5))
    for (const Perm& q : all_perms(3))
      CHECK(count_pattern(w, q) == count_pattern(w.inverse(), q.inverse()));
}

TEST_CASE("barred pattern 45-312") {
  CHECK(avoids_45bar312(Perm::parse("45312")));
  // standardized form of the bare 4512 occurrence, nothing to extend it
  CHECK_FALSE(avoids_45bar312(Perm::parse("3412")));
  CHECK_FALSE(avoids_45bar312(Perm::parse("45123")));
  CHECK(avoids_45bar312(Perm::identity(5)));
}

TEST_CASE("boolean intervals") {
  CHECK(interval_is_boolean(Perm::parse("1324"), Perm::parse("4231")));
  CHECK_FALSE(interval_is_boolean(Perm::parse("1324"), Perm::parse("3412")));
  CHECK(interval_is_boolean(Perm::identity(2), Perm::s(2, 1)));
}

TEST_CASE("shifted order") {
  const Perm u = Perm::parse("231");
  CHECK(shifted_leq(u, Perm::parse("213"), Perm::parse("123")));
  for (const Perm& x : all_perms(3)) {
    CHECK(shifted_leq(u, u, x));
    CHECK(shifted_leq(Perm::identity(3), Perm::parse("123"), x) ==
          bruhat_leq(Perm::parse("123"), x));
  }
}

TEST_CASE("support and ranks") {
  CHECK(support(Perm::parse("1324")) == std::vector<int>{2});
  CHECK(support(Perm::longest(4)) == std::vector<int>{1, 2, 3});
  for (const Perm& w : all_perms(4)) CHECK(perm_unrank(4, perm_rank(w)) == w);
}

TEST_CASE("bruhat table matches direct comparison") {
  const BruhatTable& t = BruhatTable::get(4);
  for (const Perm& v : all_perms(4))
    for (const Perm& w : all_perms(4))
      CHECK(t.leq(perm_rank(v), perm_rank(w)) == bruhat_leq(v, w));
}

TEST_CASE("signed permutations") {
  const SignedPerm u = SignedPerm::parse("-23-14");
  CHECK(u.n() == 4);
  CHECK(u(1) == -2);
  CHECK(u(3) == -1);
  CHECK(u.bar_count() == 2);
  CHECK_NOTHROW(SignedPerm::parse("-23-14", SignedPerm::Parity::even));
  CHECK_THROWS(SignedPerm::parse("-234", SignedPerm::Parity::even));
  CHECK(SignedPerm::parse("14-3-2").str() == "14-3-2");
  CHECK(SignedPerm::parse("2,-3,1,-4").one_line() == std::vector<int>{2, -3, 1, -4});
}

TEST_CASE("moment points") {
  CHECK(moment_point(Perm::parse("312")) == std::vector<std::int64_t>{2, 3, 1});
  CHECK(moment_point(Perm::identity(4)) == std::vector<std::int64_t>{1, 2, 3, 4});
}
