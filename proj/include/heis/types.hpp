// Symbolic calculus of types of unitary representations in Tadic form: a
// formal commutative product of Speh factors Sp(d, delta) and complementary
// series Comp(d, delta, alpha). Labels delta are opaque symbols with a
// declared size; alpha parameters stay symbolic. The one rewrite that drives
// everything sends every factor depth d to d-1, deleting factors that reach
// zero; the type of a product is the sequence of size drops along that
// rewrite.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace heis {

struct GLFactor {
  std::int64_t depth = 1;       // d
  std::string label;            // delta
  std::int64_t label_size = 1;  // r_delta
  bool complementary = false;   // Comp(d, delta, alpha): counts twice
  std::string alpha;            // symbolic parameter in (0, 1/2)

  std::int64_t size() const { return depth * label_size * (complementary ? 2 : 1); }

  std::string to_string() const {
    if (complementary)
      return "Comp(" + std::to_string(depth) + "," + label + "," + alpha + ")";
    return "Sp(" + std::to_string(depth) + "," + label + ")";
  }

  friend bool operator<(const GLFactor& x, const GLFactor& y) {
    return std::tie(x.label, x.depth, x.complementary, x.alpha, x.label_size) <
           std::tie(y.label, y.depth, y.complementary, y.alpha, y.label_size);
  }
  friend bool operator==(const GLFactor& x, const GLFactor& y) {
    return x.depth == y.depth && x.label == y.label && x.label_size == y.label_size &&
           x.complementary == y.complementary && x.alpha == y.alpha;
  }
};

struct FormalGL {
  std::vector<GLFactor> factors;  // unordered product, kept sorted

  void normalize() { std::sort(factors.begin(), factors.end()); }

  void validate() const {
    if (factors.empty())
      fail("formal product must have at least one factor");
    for (const GLFactor& f : factors) {
      if (f.depth < 1 || f.label_size < 1)
        fail("factor depths and label sizes must be positive");
      if (f.complementary && f.alpha.empty())
        fail("complementary factor needs a symbolic alpha");
    }
  }

  std::int64_t size() const {
    std::int64_t n = 0;
    for (const GLFactor& f : factors)
      n += f.size();
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i)
        s += " * ";
      s += factors[i].to_string();
    }
    return s;
  }

  bool operator==(const FormalGL& o) const { return factors == o.factors; }
};

// Depth rewrite: Sp(d, delta) -> Sp(d-1, delta) and likewise for Comp; a
// factor at depth zero disappears, an all-gone product returns nullopt.
inline std::optional<FormalGL> adduced(const FormalGL& x) {
  FormalGL out;
  for (GLFactor f : x.factors)
    if (--f.depth >= 1)
      out.factors.push_back(std::move(f));
  if (out.factors.empty())
    return std::nullopt;
  return out;
}

struct TypePartition {
  std::vector<std::int64_t> parts;  // weakly decreasing, positive

  std::int64_t sum() const {
    std::int64_t n = 0;
    for (std::int64_t p : parts)
      n += p;
    return n;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  bool operator==(const TypePartition& o) const { return parts == o.parts; }
};

inline TypePartition type_of(const FormalGL& x) {
  x.validate();
  TypePartition t;
  std::optional<FormalGL> cur = x;
  std::int64_t prev_size = x.size();
  while (cur) {
    cur = adduced(*cur);
    std::int64_t next_size = cur ? cur->size() : 0;
    t.parts.push_back(prev_size - next_size);
    prev_size = next_size;
  }
  for (std::size_t i = 1; i < t.parts.size(); ++i)
    if (t.parts[i] > t.parts[i - 1])
      fail_internal("type sequence is not weakly decreasing");
  return t;
}

// (r, d) when the partition is the rectangle r^d, i.e. the type of a Speh
// power of a generic product; nullopt otherwise.
inline std::optional<std::pair<std::int64_t, std::int64_t>>
is_speh_type(const TypePartition& t) {
  if (t.parts.empty())
    fail("empty partition");
  for (std::int64_t p : t.parts)
    if (p != t.parts[0])
      return std::nullopt;
  return std::make_pair(t.parts[0], std::int64_t(t.parts.size()));
}

// Drop the first k parts: the type of the k-th iterated highest derivative.
inline TypePartition derivative_type(const TypePartition& t, std::int64_t k) {
  if (k < 0 || k >= std::int64_t(t.parts.size()))
    fail("derivative index out of range");
  TypePartition out;
  out.parts.assign(t.parts.begin() + k, t.parts.end());
  return out;
}

struct DegenerateCharacterDescriptor {
  TypePartition type;
  std::vector<std::string> block_characters;  // one non-degenerate label per part
  bool uniform_shorthand = false;             // all parts equal: psi_{1,...,d}
};

inline DegenerateCharacterDescriptor
degenerate_descriptor(const TypePartition& t, std::vector<std::string> labels) {
  if (labels.size() != t.parts.size())
    fail("need exactly one block character label per part");
  DegenerateCharacterDescriptor d;
  d.type = t;
  d.block_characters = std::move(labels);
  d.uniform_shorthand = is_speh_type(t).has_value();
  return d;
}

// --- text syntax ------------------------------------------------------------
//
//   expr   := factor (('*') factor)*
//   factor := 'Sp' '(' int ',' label ')'
//           | 'Comp' '(' int ',' label ',' ident ')'
//           | label                      (same as Sp(1, label))
//   label  := 'd' int                    (the int is the label size)

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

namespace detail {

class FormalGLParser {
public:
  explicit FormalGLParser(const std::string& text) : s_(text) {}

  FormalGL parse() {
    FormalGL out;
    skip_ws();
    if (eof())
      throw ParseError(pos_, "empty expression");
    out.factors.push_back(factor());
    skip_ws();
    while (!eof()) {
      expect('*');
      skip_ws();
      out.factors.push_back(factor());
      skip_ws();
    }
    out.validate();
    out.normalize();
    return out;
  }

private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  std::string ident() {
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      throw ParseError(pos_, "expected an identifier");
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::pair<std::string, std::int64_t> label() {
    std::size_t at = pos_;
    std::string name = ident();
    if (name.size() < 2 || name[0] != 'd')
      throw ParseError(at, "label must look like d<size>, e.g. d2");
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw ParseError(at, "label must look like d<size>, e.g. d2");
    std::int64_t size = std::stoll(name.substr(1));
    if (size < 1)
      throw ParseError(at, "label size must be positive");
    return {name, size};
  }

  GLFactor factor() {
    std::size_t at = pos_;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t save = pos_;
      std::string word = ident();
      if (word == "Sp" || word == "Comp") {
        GLFactor f;
        f.complementary = (word == "Comp");
        skip_ws();
        expect('(');
        skip_ws();
        f.depth = integer();
        if (f.depth < 1)
          throw ParseError(at, "depth must be positive");
        skip_ws();
        expect(',');
        skip_ws();
        std::tie(f.label, f.label_size) = label();
        if (f.complementary) {
          skip_ws();
          expect(',');
          skip_ws();
          f.alpha = ident();
        }
        skip_ws();
        expect(')');
        return f;
      }
      pos_ = save;
      GLFactor f;
      std::tie(f.label, f.label_size) = label();
      return f;
    }
    throw ParseError(pos_, "expected Sp(...), Comp(...) or a label");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FormalGL parse_formal_gl(const std::string& text) {
  return detail::FormalGLParser(text).parse();
}

}  // namespace heis
