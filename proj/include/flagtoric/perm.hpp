#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace flagtoric {

using Word = std::vector<int>;  // letters i stand for adjacent transpositions

// Permutation of {1..n} in one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int n);
  static Perm longest(int n);          // [n, n-1, ..., 1]
  static Perm s(int n, int i);         // adjacent transposition (i, i+1)
  static Perm t(int n, int a, int b);  // transposition of a and b
  // "3412", "2,10,1,..." (comma form for n >= 10), or "e@4" for an identity.
  static Perm parse(std::string_view text);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return img_; }

  Perm inverse() const;
  // (a*b)(i) = a(b(i))
  Perm operator*(const Perm& b) const;
  int length() const;
  bool is_identity() const;
  std::string str() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Bruhat order via componentwise dominance of ascending-sorted prefixes.
bool bruhat_leq(const Perm& v, const Perm& w);
bool bruhat_covers(const Perm& v, const Perm& w);
// v <=^u w  iff  u^-1 v <= u^-1 w
bool shifted_leq(const Perm& u, const Perm& a, const Perm& b);

std::vector<Perm> all_perms(int n);  // lexicographic order
// Elements covering u (resp. covered by u) in the full Bruhat order.
std::vector<Perm> cover_ups(const Perm& u);
std::vector<Perm> cover_downs(const Perm& u);

struct BruhatInterval {
  Perm v, w;
  BruhatInterval(Perm lo, Perm hi);
  int rank() const;  // ell(w) - ell(v)
};

// {u : v <= u <= w}, sorted by (length, one-line). Empty unless v <= w.
std::vector<Perm> interval_elements(const Perm& v, const Perm& w);
std::vector<Perm> interval_atoms(const Perm& v, const Perm& w);
std::vector<Perm> interval_coatoms(const Perm& v, const Perm& w);
// Isomorphic to the Boolean lattice of rank ell(w)-ell(v): cardinality gate,
// then an explicit atom-coordinate isomorphism.
bool interval_is_boolean(const Perm& v, const Perm& w);

// Distinct reduced words in lexicographic order; limit 0 means all.
std::vector<Word> reduced_words(const Perm& w, std::size_t limit = 0);
Perm word_product(int n, const Word& word);
bool is_reduced(int n, const Word& word);
std::string word_str(const Word& word);  // "s1 s3 s2 s4"

// Number of occurrences of the pattern q in w.
long long count_pattern(const Perm& w, const Perm& q);
// Every occurrence of 4512 extends to an occurrence of 45312.
bool avoids_45bar312(const Perm& w);
// Letters i with s_i <= w; every reduced word uses exactly this letter set.
std::vector<int> support(const Perm& w);

// Vertex coordinates (u^-1(1), ..., u^-1(n)) of the moment-map image of u.
std::vector<std::int64_t> moment_point(const Perm& u);

long long factorial(int n);
long long perm_rank(const Perm& p);  // lexicographic index in S_n
Perm perm_unrank(int n, long long r);

// Dense n! x n! Bruhat-order table, cached per rank (n <= 7).
class BruhatTable {
 public:
  static const BruhatTable& get(int n);
  bool leq(long long v_rank, long long w_rank) const {
    return (bits_[static_cast<std::size_t>(v_rank * size_ + w_rank) >> 6] >>
            ((v_rank * size_ + w_rank) & 63)) & 1;
  }

 private:
  explicit BruhatTable(int n);
  long long size_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Signed permutation in one-line notation; negative entries carry a bar.
class SignedPerm {
 public:
  enum class Parity { none, even };  // even = type D constraint
  explicit SignedPerm(std::vector<int> one_line, Parity parity = Parity::none);
  static SignedPerm parse(std::string_view text, Parity parity = Parity::none);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }
  int bar_count() const;
  Parity parity() const { return parity_; }
  std::string str() const;

  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> img_;
  Parity parity_ = Parity::none;
};

}  // namespace flagtoric
