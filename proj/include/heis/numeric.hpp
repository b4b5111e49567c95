// Exact number types and small integer helpers shared across the library.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heis {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw std::logic_error(msg);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (ps.empty() || ps.back() != d)
        ps.push_back(d);
      n /= d;
    }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

inline bool is_squarefree(std::int64_t n) {
  if (n < 1)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0)
      return false;
  return true;
}

inline std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1)
    s += "/" + denominator(q).str();
  return s;
}

}  // namespace heis
