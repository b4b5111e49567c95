#include <catch2/catch_amalgamated.hpp>

#include "heis/group.hpp"
#include "support/oracles.hpp"

using namespace heis;

TEST_CASE("heisenberg group construction and validation") {
  FiniteGroup g = heisenberg(3);
  CHECK(g.order() == 27);
  CHECK(g.cyclotomic_modulus() == 3);
  CHECK_THROWS_AS(heisenberg(2), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg(4), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg(9), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg(1), std::invalid_argument);
}

TEST_CASE("group law agrees with the 3x3 matrix model") {
  FiniteGroup g = heisenberg(3);
  Element x = g.element({1, 0, 0});
  Element y = g.element({0, 1, 0});
  CHECK(g.mul(x, y) == g.element({1, 1, 1}));
  CHECK(g.mul(y, x) == g.element({1, 1, 0}));
  CHECK(g.commutator(x, y) == g.element({0, 0, 1}));

  // Full multiplication table against the matrix oracle.
  g.for_each([&](std::int64_t, const Element& a) {
    g.for_each([&](std::int64_t, const Element& b) {
      CHECK(g.mul(a, b) == oracles::matrix_model_mul(g.primes(), a, b));
    });
  });
}

TEST_CASE("inverses and associativity") {
  for (int p : {3, 5}) {
    FiniteGroup g = heisenberg(p);
    g.for_each([&](std::int64_t, const Element& a) {
      CHECK(g.mul(a, g.inverse(a)) == g.identity());
      CHECK(g.mul(g.inverse(a), a) == g.identity());
    });
  }
  FiniteGroup g2 = product_group({heisenberg(3), heisenberg(5)});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Element a = g2.unrank(std::int64_t(rng() % std::uint64_t(g2.order())));
    Element b = g2.unrank(std::int64_t(rng() % std::uint64_t(g2.order())));
    Element c = g2.unrank(std::int64_t(rng() % std::uint64_t(g2.order())));
    CHECK(g2.mul(g2.mul(a, b), c) == g2.mul(a, g2.mul(b, c)));
    CHECK(g2.mul(a, b) == oracles::matrix_model_mul(g2.primes(), a, b));
  }
}

TEST_CASE("product groups") {
  FiniteGroup g33 = product_group({heisenberg(3), heisenberg(3)});
  CHECK(g33.order() == 729);
  CHECK(g33.cyclotomic_modulus() == 3);
  FiniteGroup g35 = product_group({heisenberg(3), heisenberg(5)});
  CHECK(g35.order() == 3375);
  CHECK(g35.cyclotomic_modulus() == 15);
  FiniteGroup g3 = product_group({heisenberg(3)});
  CHECK(g3.order() == 27);
  CHECK(g3.classes()->count() == heisenberg(3).classes()->count());
  CHECK_THROWS_AS(product_group({}), std::invalid_argument);
}

TEST_CASE("conjugacy classes by brute-force orbit closure") {
  for (int p : {3, 5, 7}) {
    FiniteGroup g = heisenberg(p);
    auto classes = conjugacy_classes(g);
    CHECK(std::int64_t(classes.size()) == std::int64_t(p) * p + p - 1);
    std::int64_t total = 0;
    std::int64_t singletons = 0;
    for (const auto& [rep, size] : classes) {
      total += size;
      if (size == 1) {
        ++singletons;
        CHECK(g.is_central(rep));
      } else {
        CHECK(size == p);
      }
    }
    CHECK(total == g.order());
    CHECK(singletons == p);
  }
  CHECK(product_group({heisenberg(3), heisenberg(3)}).classes()->count() == 121);
  CHECK(product_group({heisenberg(3), heisenberg(5)}).classes()->count() == 11 * 29);
}

TEST_CASE("commutator subgroup equals the center") {
  for (int p : {3, 5}) {
    FiniteGroup g = heisenberg(p);
    std::vector<char> comm(std::size_t(g.order()), 0);
    g.for_each([&](std::int64_t, const Element& x) {
      g.for_each([&](std::int64_t, const Element& y) {
        comm[std::size_t(g.rank(g.commutator(x, y)))] = 1;
      });
    });
    Subgroup z = center(g);
    std::int64_t count = 0;
    for (std::int64_t r = 0; r < g.order(); ++r)
      if (comm[std::size_t(r)]) {
        ++count;
        CHECK(z.contains_rank(r));
      }
    CHECK(count == z.order());
  }
}

TEST_CASE("center and lagrangians") {
  FiniteGroup g = heisenberg(3);
  CHECK(center(g).order() == 3);
  Subgroup lag = lagrangian(g, SubgroupKind::LagrangianA0);
  CHECK(lag.order() == 9);
  CHECK(lag.is_normal_in(g));
  Subgroup z3 = center(g);
  for (std::int64_t r : z3.member_ranks())
    CHECK(lag.contains_rank(r));
  Subgroup lag_b = lagrangian(g, SubgroupKind::LagrangianB0);
  CHECK(lag_b.order() == 9);
  CHECK(lag_b.is_normal_in(g));

  FiniteGroup g35 = product_group({heisenberg(3), heisenberg(5)});
  CHECK(lagrangian(g35, SubgroupKind::LagrangianA0).order() == 225);
  CHECK(center(g35).order() == 15);
  CHECK_THROWS_AS(lagrangian(g, SubgroupKind::Center), std::invalid_argument);
}

TEST_CASE("custom subgroups validate closure") {
  FiniteGroup g = heisenberg(3);
  std::vector<std::int64_t> z_ranks = center(g).member_ranks();
  CHECK_NOTHROW(Subgroup(g, SubgroupKind::Custom, z_ranks));
  std::vector<std::int64_t> not_closed = {0, g.rank(g.element({1, 0, 0}))};
  CHECK_THROWS_AS(Subgroup(g, SubgroupKind::Custom, not_closed), std::invalid_argument);
  std::vector<std::int64_t> no_identity = {g.rank(g.element({0, 0, 1})),
                                           g.rank(g.element({0, 0, 2}))};
  CHECK_THROWS_AS(Subgroup(g, SubgroupKind::Custom, no_identity), std::invalid_argument);
}

TEST_CASE("involutions act as specified on the center") {
  FiniteGroup g = heisenberg(3);
  GroupInvolution inv = make_involution(g, InvolutionKind::InversionType);
  CHECK(inv.apply(g, g.element({0, 0, 1})) == g.element({0, 0, 2}));
  GroupInvolution cf = make_involution(g, InvolutionKind::CentralFixing);
  CHECK(cf.apply(g, g.element({0, 0, 1})) == g.element({0, 0, 1}));

  FiniteGroup g33 = product_group({heisenberg(3), heisenberg(3)});
  GroupInvolution sw = make_involution(g33, InvolutionKind::Switching);
  CHECK(sw.apply(g33, g33.element({1, 0, 0, 0, 0, 0})) ==
        g33.element({0, 0, 0, 1, 0, 0}));

  for (int p : {3, 5, 7}) {
    FiniteGroup h = heisenberg(p);
    GroupInvolution hi = make_involution(h, InvolutionKind::InversionType);
    GroupInvolution hc = make_involution(h, InvolutionKind::CentralFixing);
    Subgroup hz = center(h);
    for (std::int64_t zr : hz.member_ranks()) {
      Element z = h.unrank(zr);
      CHECK(hi.apply(h, z) == h.inverse(z));
      CHECK(hc.apply(h, z) == z);
    }
  }
}

TEST_CASE("involutions are automorphisms of order dividing two on all pairs") {
  auto exhaustive = [](const FiniteGroup& g, const GroupInvolution& s) {
    bool ok = true;
    g.for_each([&](std::int64_t ra, const Element& a) {
      std::int64_t sa = s.apply_rank(ra);
      if (s.apply_rank(sa) != ra)
        ok = false;
      Element img_a = g.unrank(sa);
      g.for_each([&](std::int64_t rb, const Element& b) {
        if (!ok)
          return;
        if (s.apply_rank(g.rank(g.mul(a, b))) !=
            g.rank(g.mul(img_a, g.unrank(s.apply_rank(rb)))))
          ok = false;
      });
    });
    return ok;
  };
  FiniteGroup g3 = heisenberg(3);
  CHECK(exhaustive(g3, make_involution(g3, InvolutionKind::Trivial)));
  CHECK(exhaustive(g3, make_involution(g3, InvolutionKind::InversionType)));
  CHECK(exhaustive(g3, make_involution(g3, InvolutionKind::CentralFixing)));
  FiniteGroup g33 = product_group({heisenberg(3), heisenberg(3)});
  CHECK(exhaustive(g33, make_involution(g33, InvolutionKind::Switching)));
  CHECK(exhaustive(g33, make_involution(g33, InvolutionKind::InversionType)));
  FiniteGroup g5 = heisenberg(5);
  CHECK(exhaustive(g5, make_involution(g5, InvolutionKind::CentralFixing)));
  FiniteGroup g35 = product_group({heisenberg(3), heisenberg(5)});
  CHECK(exhaustive(g35, make_involution(g35, InvolutionKind::CentralFixing)));
}

TEST_CASE("invalid involutions are rejected") {
  FiniteGroup g = heisenberg(3);
  CHECK_THROWS_AS(make_involution(g, InvolutionKind::Switching), std::invalid_argument);
  FiniteGroup g35 = product_group({heisenberg(3), heisenberg(5)});
  CHECK_THROWS_AS(make_involution(g35, InvolutionKind::Switching), std::invalid_argument);

  // Translation by a fixed element is not an automorphism.
  Element t = g.element({1, 0, 0});
  CHECK_THROWS_AS(make_custom_involution(
                      g, [&](const Element& e) { return g.mul(t, e); }),
                  std::invalid_argument);
  // Conjugation by (1,0,0) is an automorphism of order 3, not 2.
  CHECK_THROWS_AS(make_custom_involution(
                      g, [&](const Element& e) { return g.conjugate(t, e); }),
                  std::invalid_argument);
  // The honest inversion-type map passes as a custom involution.
  CHECK_NOTHROW(make_custom_involution(g, [&](const Element& e) {
    Element r = e;
    r.v[1] = std::int16_t(pos_mod(-e.b(0), 3));
    r.v[2] = std::int16_t(pos_mod(-e.c(0), 3));
    return r;
  }));
}
