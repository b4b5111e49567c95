#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heis/types.hpp"
#include "support/oracles.hpp"

using namespace heis;

namespace {

FormalGL speh(std::int64_t d, std::int64_t r, bool comp = false) {
  FormalGL x;
  GLFactor f;
  f.depth = d;
  f.label = "d" + std::to_string(r);
  f.label_size = r;
  f.complementary = comp;
  if (comp)
    f.alpha = "a";
  x.factors.push_back(f);
  return x;
}

FormalGL product(const FormalGL& a, const FormalGL& b) {
  FormalGL x = a;
  x.factors.insert(x.factors.end(), b.factors.begin(), b.factors.end());
  x.normalize();
  return x;
}

}  // namespace

TEST_CASE("the depth rewrite") {
  FormalGL sp3 = speh(3, 2);
  auto once = adduced(sp3);
  REQUIRE(once.has_value());
  CHECK(once->to_string() == "Sp(2,d2)");
  CHECK_FALSE(adduced(speh(1, 4)).has_value());

  FormalGL mixed = product(speh(2, 1), speh(2, 1, true));
  auto step = adduced(mixed);
  REQUIRE(step.has_value());
  CHECK(step->to_string() == "Sp(1,d1) * Comp(1,d1,a)");
}

TEST_CASE("type partitions") {
  CHECK(type_of(speh(3, 2)).parts == std::vector<std::int64_t>{2, 2, 2});
  CHECK(type_of(speh(1, 7)).parts == std::vector<std::int64_t>{7});
  CHECK(type_of(product(speh(2, 3), speh(1, 2))).parts ==
        std::vector<std::int64_t>{5, 3});
  // a generic product (all depths one) has the one-row type (n)
  FormalGL generic = product(product(speh(1, 2), speh(1, 3)), speh(1, 1, true));
  CHECK(type_of(generic).parts == std::vector<std::int64_t>{7});
  CHECK(generic.size() == 7);
}

TEST_CASE("speh detection") {
  auto rd = is_speh_type(TypePartition{{2, 2, 2}});
  REQUIRE(rd.has_value());
  CHECK(rd->first == 2);
  CHECK(rd->second == 3);
  CHECK_FALSE(is_speh_type(TypePartition{{5, 3}}).has_value());
  auto single = is_speh_type(TypePartition{{4}});
  REQUIRE(single.has_value());
  CHECK(single->first == 4);
  CHECK(single->second == 1);
  CHECK_THROWS_AS(is_speh_type(TypePartition{{}}), std::invalid_argument);
}

TEST_CASE("derivative types drop leading parts") {
  TypePartition t{{2, 2, 2}};
  CHECK(derivative_type(t, 0) == t);
  CHECK(derivative_type(t, 1).parts == std::vector<std::int64_t>{2, 2});
  CHECK(derivative_type(TypePartition{{5, 3}}, 1).parts == std::vector<std::int64_t>{3});
  CHECK_THROWS_AS(derivative_type(t, 3), std::invalid_argument);
  CHECK_THROWS_AS(derivative_type(t, -1), std::invalid_argument);
}

TEST_CASE("degenerate character descriptors") {
  DegenerateCharacterDescriptor d =
      degenerate_descriptor(TypePartition{{2, 2, 2}}, {"psi1", "psi2", "psi3"});
  CHECK(d.uniform_shorthand);
  DegenerateCharacterDescriptor nd = degenerate_descriptor(TypePartition{{6}}, {"psi"});
  CHECK(nd.uniform_shorthand);  // a single part is trivially uniform
  CHECK(nd.type.parts.size() == 1);
  DegenerateCharacterDescriptor mixed =
      degenerate_descriptor(TypePartition{{5, 3}}, {"psi1", "psi2"});
  CHECK_FALSE(mixed.uniform_shorthand);
  CHECK_THROWS_AS(degenerate_descriptor(TypePartition{{5, 3}}, {"only-one"}),
                  std::invalid_argument);
}

TEST_CASE("randomized properties of the calculus") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 400; ++trial) {
    FormalGL x = oracles::random_formal_gl(rng);
    TypePartition t = type_of(x);

    // weakly decreasing positive parts summing to the size
    CHECK(t.sum() == x.size());
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
      CHECK(t.parts[i] >= 1);
      if (i)
        CHECK(t.parts[i] <= t.parts[i - 1]);
    }

    // rectangular type iff all depths agree
    bool all_same_depth = true;
    for (const GLFactor& f : x.factors)
      if (f.depth != x.factors[0].depth)
        all_same_depth = false;
    CHECK(is_speh_type(t).has_value() == all_same_depth);

    // the rewrite dies exactly at the maximal depth
    std::int64_t max_depth = 0;
    for (const GLFactor& f : x.factors)
      max_depth = std::max(max_depth, f.depth);
    std::optional<FormalGL> cur = x;
    std::int64_t steps = 0;
    while (cur) {
      cur = adduced(*cur);
      ++steps;
    }
    CHECK(steps == max_depth);
    CHECK(std::int64_t(t.parts.size()) == max_depth);

    // derivative_type commutes with the rewrite
    std::optional<FormalGL> it = x;
    for (std::int64_t k = 0; k < std::int64_t(t.parts.size()); ++k) {
      REQUIRE(it.has_value());
      CHECK(derivative_type(t, k) == type_of(*it));
      it = adduced(*it);
    }
  }
}

TEST_CASE("speh powers of generic products have rectangular type") {
  std::mt19937_64 rng(7);
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t r = 1; r * d <= 24; ++r) {
      // tau = random generic product of total size r
      FormalGL x;
      std::int64_t remaining = r;
      while (remaining > 0) {
        std::int64_t piece = 1 + std::int64_t(rng() % std::uint64_t(remaining));
        GLFactor f;
        f.depth = d;
        f.label_size = piece;
        f.label = "d" + std::to_string(piece);
        x.factors.push_back(f);
        remaining -= piece;
      }
      x.normalize();
      TypePartition t = type_of(x);
      auto rd = is_speh_type(t);
      REQUIRE(rd.has_value());
      CHECK(rd->first == r);
      CHECK(rd->second == d);
    }
}

TEST_CASE("parser round trips and errors") {
  FormalGL a = parse_formal_gl("Sp(3,d2)");
  CHECK(a.to_string() == "Sp(3,d2)");
  CHECK(type_of(a).parts == std::vector<std::int64_t>{2, 2, 2});

  FormalGL b = parse_formal_gl(" Sp( 2 , d3 ) * Sp(1,d2) ");
  CHECK(type_of(b).parts == std::vector<std::int64_t>{5, 3});

  FormalGL c = parse_formal_gl("Sp(3,d2) * Comp(2,d1,a)");
  CHECK(c.size() == 6 + 4);
  CHECK(c.factors.size() == 2);

  // bare labels are generic factors
  FormalGL d = parse_formal_gl("d4 * d3");
  CHECK(type_of(d).parts == std::vector<std::int64_t>{7});

  // the product is commutative
  CHECK(parse_formal_gl("Sp(2,d3) * Comp(1,d2,a)") ==
        parse_formal_gl("Comp(1,d2,a) * Sp(2,d3)"));

  // parse of the printed form is the identity
  std::mt19937_64 rng(55);
  for (int i = 0; i < 100; ++i) {
    FormalGL x = oracles::random_formal_gl(rng);
    CHECK(parse_formal_gl(x.to_string()) == x);
  }

  CHECK_THROWS_AS(parse_formal_gl(""), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp("), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp(0,d2)"), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp(2,x2)"), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp(2,d0)"), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp(2,d2))"), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Sp(2,d2) Sp(1,d1)"), ParseError);
  CHECK_THROWS_AS(parse_formal_gl("Comp(2,d2)"), ParseError);
  try {
    parse_formal_gl("Sp(2,d2) * ");
  } catch (const ParseError& e) {
    CHECK(e.position == 11);
  }
}
