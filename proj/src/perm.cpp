#include "flagtoric/perm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace flagtoric {

namespace {

std::vector<int> parse_one_line(std::string_view text, bool allow_bars) {
  std::vector<int> img;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      img.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
      pos = next + 1;
    }
  } else {
    int sign = 1;
    for (char c : text) {
      if (c == '-' && allow_bars) {
        sign = -1;
      } else if (c >= '1' && c <= '9') {
        img.push_back(sign * (c - '0'));
        sign = 1;
      } else {
        throw std::invalid_argument("cannot parse one-line notation: '" +
                                    std::string(text) + "'");
      }
    }
  }
  return img;
}

void check_unsigned_bijection(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : img) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("one-line notation is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  check_unsigned_bijection(img_);
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Perm(std::move(v));
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

Perm Perm::s(int n, int i) { return t(n, i, i + 1); }

Perm Perm::t(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("bad transposition");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::swap(v[a - 1], v[b - 1]);
  return Perm(std::move(v));
}

Perm Perm::parse(std::string_view text) {
  if (text.size() > 2 && text[0] == 'e' && text[1] == '@')
    return identity(std::stoi(std::string(text.substr(2))));
  return Perm(parse_one_line(text, false));
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < n(); ++i) v[img_[i] - 1] = i + 1;
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& b) const {
  if (n() != b.n()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<int> v(img_.size());
  for (int i = 0; i < n(); ++i) v[i] = img_[b.img_[i] - 1];
  return Perm(std::move(v));
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string Perm::str() const {
  std::string out;
  const bool commas = n() >= 10;
  for (int i = 0; i < n(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(img_[i]);
  }
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("rank mismatch in Bruhat comparison");
  const int n = v.n();
  // Insert prefix entries in sorted order and compare componentwise.
  std::vector<int> av, aw;
  av.reserve(n);
  aw.reserve(n);
  for (int d = 1; d < n; ++d) {
    av.insert(std::upper_bound(av.begin(), av.end(), v(d)), v(d));
    aw.insert(std::upper_bound(aw.begin(), aw.end(), w(d)), w(d));
    for (int i = 0; i < d; ++i)
      if (av[i] > aw[i]) return false;
  }
  return true;
}

bool bruhat_covers(const Perm& v, const Perm& w) {
  return w.length() == v.length() + 1 && bruhat_leq(v, w);
}

bool shifted_leq(const Perm& u, const Perm& a, const Perm& b) {
  const Perm ui = u.inverse();
  return bruhat_leq(ui * a, ui * b);
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm> cover_ups(const Perm& u) {
  // u t_{i,j} covers u iff u(i) < u(j) with no intermediate value between.
  const int n = u.n();
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) >= u(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (u(i) < u(k) && u(k) < u(j)) blocked = true;
      if (blocked) continue;
      std::vector<int> img = u.one_line();
      std::swap(img[i - 1], img[j - 1]);
      out.push_back(Perm(std::move(img)));
    }
  return out;
}

std::vector<Perm> cover_downs(const Perm& u) {
  const int n = u.n();
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) <= u(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (u(j) < u(k) && u(k) < u(i)) blocked = true;
      if (blocked) continue;
      std::vector<int> img = u.one_line();
      std::swap(img[i - 1], img[j - 1]);
      out.push_back(Perm(std::move(img)));
    }
  return out;
}

BruhatInterval::BruhatInterval(Perm lo, Perm hi) : v(std::move(lo)), w(std::move(hi)) {
  if (v.n() != w.n()) throw std::invalid_argument("rank mismatch in interval");
  if (!bruhat_leq(v, w)) throw std::invalid_argument("interval requires v <= w");
}

int BruhatInterval::rank() const { return w.length() - v.length(); }

std::vector<Perm> interval_elements(const Perm& v, const Perm& w) {
  if (v.n() != w.n() || !bruhat_leq(v, w)) return {};
  std::set<Perm> seen{v};
  std::queue<Perm> q;
  q.push(v);
  while (!q.empty()) {
    Perm u = q.front();
    q.pop();
    for (Perm& up : cover_ups(u)) {
      if (seen.count(up) || !bruhat_leq(up, w)) continue;
      seen.insert(up);
      q.push(std::move(up));
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<Perm> interval_atoms(const Perm& v, const Perm& w) {
  std::vector<Perm> out;
  for (Perm& up : cover_ups(v))
    if (bruhat_leq(up, w)) out.push_back(std::move(up));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> interval_coatoms(const Perm& v, const Perm& w) {
  std::vector<Perm> out;
  for (Perm& dn : cover_downs(w))
    if (bruhat_leq(v, dn)) out.push_back(std::move(dn));
  std::sort(out.begin(), out.end());
  return out;
}

bool interval_is_boolean(const Perm& v, const Perm& w) {
  if (!bruhat_leq(v, w)) return false;
  const int r = w.length() - v.length();
  if (r >= 62) return false;
  std::vector<Perm> elems = interval_elements(v, w);
  if (elems.size() != (1ull << r)) return false;
  std::vector<Perm> atoms = interval_atoms(v, w);
  if (static_cast<int>(atoms.size()) != r) return false;
  // Map each element to its set of dominated atoms and check this is an
  // order isomorphism onto the subset lattice.
  std::vector<std::uint64_t> key(elems.size());
  std::unordered_set<std::uint64_t> used;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint64_t m = 0;
    for (int k = 0; k < r; ++k)
      if (bruhat_leq(atoms[k], elems[i])) m |= 1ull << k;
    if (std::popcount(m) != elems[i].length() - v.length()) return false;
    if (!used.insert(m).second) return false;
    key[i] = m;
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const bool sub = (key[i] & ~key[j]) == 0;
      if (sub != bruhat_leq(elems[i], elems[j])) return false;
    }
  return true;
}

namespace {

void words_rec(const Perm& w, std::vector<Word>& out, Word& prefix, std::size_t limit) {
  if (limit && out.size() >= limit) return;
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  const int n = w.n();
  const Perm wi = w.inverse();
  for (int i = 1; i < n; ++i) {
    if (wi(i) <= wi(i + 1)) continue;  // i is a left descent iff i appears after i+1
    prefix.push_back(i);
    words_rec(Perm::s(n, i) * w, out, prefix, limit);
    prefix.pop_back();
    if (limit && out.size() >= limit) return;
  }
}

}  // namespace

std::vector<Word> reduced_words(const Perm& w, std::size_t limit) {
  std::vector<Word> out;
  Word prefix;
  words_rec(w, out, prefix, limit);
  return out;
}

Perm word_product(int n, const Word& word) {
  Perm p = Perm::identity(n);
  for (int i : word) p = p * Perm::s(n, i);
  return p;
}

bool is_reduced(int n, const Word& word) {
  return word_product(n, word).length() == static_cast<int>(word.size());
}

std::string word_str(const Word& word) {
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(i);
  }
  return out;
}

namespace {

long long count_pattern_rec(const Perm& w, const Perm& q, int qi, int from,
                            std::vector<int>& chosen) {
  const int k = q.n();
  if (qi == k) return 1;
  long long total = 0;
  for (int p = from; p <= w.n() - (k - qi) + 1; ++p) {
    bool ok = true;
    for (int r = 0; r < qi && ok; ++r)
      if ((w(chosen[r]) < w(p)) != (q(r + 1) < q(qi + 1))) ok = false;
    if (!ok) continue;
    chosen.push_back(p);
    total += count_pattern_rec(w, q, qi + 1, p + 1, chosen);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

long long count_pattern(const Perm& w, const Perm& q) {
  if (q.n() > w.n()) return 0;
  std::vector<int> chosen;
  return count_pattern_rec(w, q, 0, 1, chosen);
}

bool avoids_45bar312(const Perm& w) {
  const int n = w.n();
  // occurrences of 4512: positions p1<p2<p3<p4 with w(p3)<w(p4)<w(p1)<w(p2)
  for (int p1 = 1; p1 <= n; ++p1)
    for (int p2 = p1 + 1; p2 <= n; ++p2) {
      if (w(p1) >= w(p2)) continue;
      for (int p3 = p2 + 1; p3 <= n; ++p3) {
        if (w(p3) >= w(p1)) continue;
        for (int p4 = p3 + 1; p4 <= n; ++p4) {
          if (w(p4) <= w(p3) || w(p4) >= w(p1)) continue;
          bool extends = false;
          for (int q = p2 + 1; q < p3 && !extends; ++q)
            if (w(p4) < w(q) && w(q) < w(p1)) extends = true;
          if (!extends) return false;
        }
      }
    }
  return true;
}

std::vector<int> support(const Perm& w) {
  const int n = w.n();
  std::vector<int> out;
  int maxval = 0;
  for (int i = 1; i < n; ++i) {
    maxval = std::max(maxval, w(i));
    if (maxval > i) out.push_back(i);  // {w(1..i)} != {1..i}
  }
  return out;
}

std::vector<std::int64_t> moment_point(const Perm& u) {
  const Perm ui = u.inverse();
  std::vector<std::int64_t> v(u.n());
  for (int i = 1; i <= u.n(); ++i) v[i - 1] = ui(i);
  return v;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long perm_rank(const Perm& p) {
  const int n = p.n();
  long long r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    r += smaller * factorial(n - i);
  }
  return r;
}

Perm perm_unrank(int n, long long r) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> img;
  for (int i = n - 1; i >= 0; --i) {
    const long long f = factorial(i);
    const long long idx = r / f;
    r %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return Perm(std::move(img));
}

BruhatTable::BruhatTable(int n) {
  size_ = factorial(n);
  bits_.assign(static_cast<std::size_t>((size_ * size_ + 63) / 64), 0);
  std::vector<Perm> perms(size_, Perm());
  for (long long r = 0; r < size_; ++r) perms[r] = perm_unrank(n, r);
  std::vector<int> len(size_);
  for (long long r = 0; r < size_; ++r) len[r] = perms[r].length();
  for (long long v = 0; v < size_; ++v)
    for (long long w = 0; w < size_; ++w) {
      if (len[v] > len[w]) continue;
      if (bruhat_leq(perms[v], perms[w]))
        bits_[static_cast<std::size_t>(v * size_ + w) >> 6] |=
            1ull << ((v * size_ + w) & 63);
    }
}

const BruhatTable& BruhatTable::get(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("BruhatTable supports n <= 7");
  static std::mutex mu;
  static std::map<int, const BruhatTable*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, new BruhatTable(n)).first;
  return *it->second;
}

SignedPerm::SignedPerm(std::vector<int> one_line, Parity parity)
    : img_(std::move(one_line)), parity_(parity) {
  std::vector<int> abs(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] == 0) throw std::invalid_argument("zero entry in signed one-line notation");
    abs[i] = img_[i] < 0 ? -img_[i] : img_[i];
  }
  check_unsigned_bijection(abs);
  if (parity_ == Parity::even && bar_count() % 2 != 0)
    throw std::invalid_argument("even parity requires an even number of bars");
}

SignedPerm SignedPerm::parse(std::string_view text, Parity parity) {
  return SignedPerm(parse_one_line(text, true), parity);
}

int SignedPerm::bar_count() const {
  int c = 0;
  for (int v : img_)
    if (v < 0) ++c;
  return c;
}

std::string SignedPerm::str() const {
  std::string out;
  const bool commas = n() >= 10;
  for (int i = 0; i < n(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(img_[i]);
  }
  return out;
}

}  // namespace flagtoric
