#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagtoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign_of(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace flagtoric
