// Exact arithmetic in the cyclotomic field Q(zeta_N) for squarefree odd N.
//
// A value is a sparse map exponent -> rational coefficient over the powers of
// zeta_N, kept in a canonical reduced form: for every prime p | N the
// exponents k with k = p-1 (mod p) are eliminated through the vanishing sum
//   sum_{j=0}^{p-1} zeta_N^{k + j N/p} = 0.
// The surviving exponents form a Q-basis of size phi(N), so two values are
// equal iff their reduced coefficient maps are identical.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace heis {

class Cyclotomic {
public:
  Cyclotomic() : modulus_(1) {}

  explicit Cyclotomic(std::int64_t modulus) : modulus_(check_modulus(modulus)) {}

  static Cyclotomic from_rational(const Rational& q, std::int64_t modulus = 1) {
    Cyclotomic x(modulus);
    if (q != 0)
      x.coeffs_[0] = q;
    return x;
  }

  static Cyclotomic from_int(std::int64_t v, std::int64_t modulus = 1) {
    return from_rational(Rational(v), modulus);
  }

  std::int64_t modulus() const { return modulus_; }
  const std::map<std::int64_t, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  bool is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }

  Rational rational_value() const {
    if (coeffs_.empty())
      return Rational(0);
    if (!is_rational())
      throw std::domain_error("cyclotomic value is not rational");
    return coeffs_.begin()->second;
  }

  Cyclotomic lifted(std::int64_t new_modulus) const {
    check_modulus(new_modulus);
    if (new_modulus == modulus_)
      return *this;
    if (new_modulus % modulus_ != 0)
      fail("cannot lift from modulus " + std::to_string(modulus_) + " to " +
           std::to_string(new_modulus));
    Cyclotomic out(new_modulus);
    std::int64_t ratio = new_modulus / modulus_;
    for (const auto& [k, q] : coeffs_)
      out.coeffs_[k * ratio] = q;
    out.reduce();
    return out;
  }

  Cyclotomic operator-() const {
    Cyclotomic out(modulus_);
    for (const auto& [k, q] : coeffs_)
      out.coeffs_[k] = -q;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& other) {
    require_same_modulus(other);
    for (const auto& [k, q] : other.coeffs_) {
      Rational& c = coeffs_[k];
      c += q;
      if (c == 0)
        coeffs_.erase(k);
    }
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& other) { return *this += -other; }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same_modulus(b);
    Cyclotomic out(a.modulus_);
    for (const auto& [ka, qa] : a.coeffs_)
      for (const auto& [kb, qb] : b.coeffs_) {
        std::int64_t k = (ka + kb) % a.modulus_;
        Rational& c = out.coeffs_[k];
        c += qa * qb;
        if (c == 0)
          out.coeffs_.erase(k);
      }
    out.reduce();
    return out;
  }

  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic out(modulus_);
    if (q != 0)
      for (const auto& [k, c] : coeffs_)
        out.coeffs_[k] = c * q;
    return out;
  }

  // Complex conjugation: zeta^k -> zeta^{-k}.
  Cyclotomic conj() const {
    Cyclotomic out(modulus_);
    for (const auto& [k, q] : coeffs_)
      out.coeffs_[pos_mod(-k, modulus_)] += q;
    out.reduce();
    return out;
  }

  Cyclotomic pow(std::int64_t e) const {
    if (e < 0)
      fail("negative cyclotomic power");
    Cyclotomic acc = from_int(1, modulus_);
    Cyclotomic base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1)
        acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  bool operator==(const Cyclotomic& other) const {
    return modulus_ == other.modulus_ && coeffs_ == other.coeffs_;
  }
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  bool operator<(const Cyclotomic& other) const {
    if (modulus_ != other.modulus_)
      return modulus_ < other.modulus_;
    return coeffs_ < other.coeffs_;
  }

  // Textual form "c0*z^0 + c1*z^k1 + ..." with the modulus header.
  std::string to_string() const {
    std::string s = "Q(z_" + std::to_string(modulus_) + "): ";
    if (coeffs_.empty())
      return s + "0";
    bool first = true;
    for (const auto& [k, q] : coeffs_) {
      if (!first)
        s += " + ";
      s += rational_to_string(q) + "*z^" + std::to_string(k);
      first = false;
    }
    return s;
  }

private:
  static std::int64_t check_modulus(std::int64_t n) {
    if (n < 1 || n % 2 == 0 || !is_squarefree(n))
      fail("cyclotomic modulus must be squarefree and odd, got " + std::to_string(n));
    return n;
  }

  void require_same_modulus(const Cyclotomic& other) const {
    if (modulus_ != other.modulus_)
      fail("cyclotomic modulus mismatch (" + std::to_string(modulus_) + " vs " +
           std::to_string(other.modulus_) + "); lift explicitly first");
  }

  // One elimination pass per prime p | N. Within the coset {k + j N/p} the
  // residue k mod p takes each value once, and shifting by N/q for another
  // prime q leaves k mod p unchanged, so a single pass per prime suffices.
  void reduce() {
    for (std::int64_t p : prime_factors(modulus_)) {
      std::int64_t step = modulus_ / p;
      std::vector<std::pair<std::int64_t, Rational>> bad;
      for (const auto& [k, q] : coeffs_)
        if (k % p == p - 1)
          bad.emplace_back(k, q);
      for (const auto& [k, q] : bad) {
        coeffs_.erase(k);
        for (std::int64_t j = 1; j < p; ++j) {
          std::int64_t t = (k + j * step) % modulus_;
          Rational& c = coeffs_[t];
          c -= q;
          if (c == 0)
            coeffs_.erase(t);
        }
      }
    }
  }

  std::int64_t modulus_;
  std::map<std::int64_t, Rational> coeffs_;

  friend Cyclotomic root_of_unity(std::int64_t, std::int64_t);
};

// Canonical form of zeta_N^k.
inline Cyclotomic root_of_unity(std::int64_t modulus, std::int64_t k) {
  Cyclotomic x(modulus);
  x.coeffs_[pos_mod(k, modulus)] = Rational(1);
  x.reduce();
  return x;
}

}  // namespace heis
