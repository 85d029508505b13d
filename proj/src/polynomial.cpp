#include "flagtoric/polynomial.hpp"

#include <algorithm>

namespace flagtoric {

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(std::int64_t c, int degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

std::int64_t IntPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] - o[static_cast<int>(i)];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<std::int64_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<std::int64_t>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_arg(std::int64_t shift) const {
  // Horner: p(t+s) built from the top coefficient down.
  IntPoly res;
  IntPoly x({shift, 1});
  for (int k = degree(); k >= 0; --k) res = res * x + IntPoly({c_[k]});
  return res;
}

IntPoly IntPoly::stretch(int k) const {
  if (c_.empty()) return IntPoly();
  std::vector<std::int64_t> r(static_cast<std::size_t>(degree()) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

std::int64_t IntPoly::eval(std::int64_t t) const {
  std::int64_t v = 0;
  for (int k = degree(); k >= 0; --k) v = v * t + c_[k];
  return v;
}

bool IntPoly::palindromic() const {
  const int d = degree();
  for (int k = 0; k <= d; ++k)
    if ((*this)[k] != (*this)[d - k]) return false;
  return true;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t a = c_[i];
    if (a == 0) continue;
    if (!out.empty()) out += a > 0 ? " + " : " - ";
    else if (a < 0) out += "-";
    const std::int64_t m = a > 0 ? a : -a;
    if (i == 0) {
      out += std::to_string(m);
    } else {
      if (m != 1) out += std::to_string(m);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace flagtoric
