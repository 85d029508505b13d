#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagtoric {

// Single-variable polynomial with integer coefficients, constant term first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly monomial(std::int64_t c, int degree);

  int degree() const;  // -1 for the zero polynomial
  std::int64_t operator[](int k) const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly derivative() const;
  // p(t + shift)
  IntPoly shift_arg(std::int64_t shift) const;
  // p(t^k)
  IntPoly stretch(int k) const;
  std::int64_t eval(std::int64_t t) const;
  bool palindromic() const;

  // e.g. "1 + 7t^2 + 11t^4 + t^6"; zero prints "0".
  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace flagtoric
