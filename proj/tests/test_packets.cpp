#include <catch2/catch_amalgamated.hpp>

#include "heis/monomial.hpp"
#include "heis/packets.hpp"
#include "heis/projective.hpp"

using namespace heis;

namespace {

std::vector<std::int64_t> exps_of(const PacketLabel& l) { return l.central.exps; }

// sigma action followed by inversion on a label: e -> -(e o sigma), computed
// through the involution's action on the central generators.
PacketLabel invert_after_sigma(const FiniteGroup& g, const PacketLabel& label,
                               const GroupInvolution& sigma) {
  PacketLabel out = label;
  for (int i = 0; i < g.factor_count(); ++i) {
    Element z = g.identity();
    z.v[3 * i + 2] = 1;
    Element sz = sigma.apply(g, z);
    // c(sigma(z_i)) = prod_j zeta_{p_j}^{e_j * c_j(sigma(z_i))}; factors stay
    // independent for the involutions in scope, so read factor i.
    std::int64_t acc = 0;
    for (int j = 0; j < g.factor_count(); ++j)
      if (g.primes()[j] == g.primes()[i])
        acc += label.central.exps[std::size_t(j)] * sz.c(j);
    out.central.exps[std::size_t(i)] =
        pos_mod(-acc, g.primes()[std::size_t(i)]);
  }
  return out;
}

}  // namespace

TEST_CASE("packet enumeration and multiplicity") {
  FiniteGroup g3 = heisenberg(3);
  auto p3 = enumerate_packets(g3);
  REQUIRE(p3.size() == 2);
  CHECK(exps_of(p3[0]) == std::vector<std::int64_t>{1});
  CHECK(exps_of(p3[1]) == std::vector<std::int64_t>{2});
  CHECK(p3[0].dim == 3);
  CHECK(multiplicity(g3) == 2);

  FiniteGroup g5 = heisenberg(5);
  CHECK(enumerate_packets(g5).size() == 4);
  CHECK(multiplicity(g5) == 4);

  FiniteGroup g33 = product_group({heisenberg(3), heisenberg(3)});
  CHECK(enumerate_packets(g33).size() == 4);
  CHECK(multiplicity(g33) == 4);

  FiniteGroup g35 = product_group({heisenberg(3), heisenberg(5)});
  CHECK(multiplicity(g35) == 8);
  CHECK(enumerate_packets(g35).size() == 8);
  for (const PacketLabel& l : enumerate_packets(g35)) {
    CHECK(l.central.regular());
    CHECK(l.dim == 15);
  }
}

TEST_CASE("multiplicity equals the strong-class count of the regular irreducibles") {
  for (int p : {3, 5}) {
    FiniteGroup g = heisenberg(p);
    Subgroup lag = lagrangian(g, SubgroupKind::LagrangianA0);
    std::vector<MonomialRep> reps;
    for (const PacketLabel& label : enumerate_packets(g))
      reps.push_back(realize_induced(g, lag, extend_to_lagrangian(lag, label.central)));
    CHECK(count_strong_classes_in_weak_class(reps) == multiplicity(g));
  }
}

TEST_CASE("inversion-type involutions distinguish every packet") {
  for (int p : {3, 5, 7}) {
    FiniteGroup g = heisenberg(p);
    GroupInvolution sigma = make_involution(g, InvolutionKind::InversionType);
    auto packets = enumerate_packets(g);
    for (const PacketLabel& label : packets)
      CHECK(is_distinguished_packet(g, label, sigma));
    CHECK(distinguished_packets(g, sigma).size() == packets.size());
  }
}

TEST_CASE("central-fixing involutions distinguish no packet") {
  for (int p : {3, 5, 7}) {
    FiniteGroup g = heisenberg(p);
    GroupInvolution sigma = make_involution(g, InvolutionKind::CentralFixing);
    for (const PacketLabel& label : enumerate_packets(g))
      CHECK_FALSE(is_distinguished_packet(g, label, sigma));
    CHECK(distinguished_packets(g, sigma).empty());
  }
  // trivial involution on odd |Z| behaves the same way
  FiniteGroup g3 = heisenberg(3);
  GroupInvolution triv = make_involution(g3, InvolutionKind::Trivial);
  CHECK(distinguished_packets(g3, triv).empty());
}

TEST_CASE("switching distinguishes exactly the chi x chi^-1 labels") {
  FiniteGroup g = product_group({heisenberg(3), heisenberg(3)});
  GroupInvolution sigma = make_involution(g, InvolutionKind::Switching);
  std::vector<std::vector<std::int64_t>> distinguished;
  for (const PacketLabel& label : enumerate_packets(g))
    if (is_distinguished_packet(g, label, sigma))
      distinguished.push_back(exps_of(label));
  std::vector<std::vector<std::int64_t>> expected = {{1, 2}, {2, 1}};
  CHECK(distinguished == expected);
  CHECK_FALSE(is_distinguished_packet(
      g, PacketLabel{CentralCharacter{g.primes(), {1, 1}}, 9}, sigma));
  CHECK(is_distinguished_packet(
      g, PacketLabel{CentralCharacter{g.primes(), {1, 2}}, 9}, sigma));
}

TEST_CASE("criterion is independent of the chosen model") {
  // two independently constructed monomial models yield the same central
  // character, hence the same verdict
  FiniteGroup g = heisenberg(5);
  GroupInvolution sigma = make_involution(g, InvolutionKind::InversionType);
  for (std::int64_t e = 1; e < 5; ++e) {
    CentralCharacter chi{g.primes(), {e}};
    Subgroup la = lagrangian(g, SubgroupKind::LagrangianA0);
    Subgroup lb = lagrangian(g, SubgroupKind::LagrangianB0);
    CentralCharacter ca = central_character(
        realize_induced(g, la, extend_to_lagrangian(la, chi)).character());
    CentralCharacter cb = central_character(
        realize_induced(g, lb, extend_to_lagrangian(lb, chi)).character());
    CHECK(ca == cb);
    PacketLabel from_a{ca, 5};
    PacketLabel from_b{cb, 5};
    CHECK(is_distinguished_packet(g, from_a, sigma) ==
          is_distinguished_packet(g, from_b, sigma));
  }
}

TEST_CASE("generator check matches the full center loop") {
  for (auto kind : {InvolutionKind::Trivial, InvolutionKind::InversionType,
                    InvolutionKind::CentralFixing}) {
    FiniteGroup g = product_group({heisenberg(3), heisenberg(5)});
    GroupInvolution sigma = make_involution(g, kind);
    Subgroup z = center(g);
    for (const PacketLabel& label : enumerate_packets(g)) {
      bool full = true;
      for (std::int64_t zr : z.member_ranks()) {
        Element zz = g.unrank(zr);
        if (!(label.central.value_at(sigma.apply(g, zz), 15) ==
              label.central.value_at(g.inverse(zz), 15)))
          full = false;
      }
      CHECK(full == is_distinguished_packet(g, label, sigma));
    }
  }
}

TEST_CASE("distinguished set is stable under inversion composed with sigma") {
  FiniteGroup g33 = product_group({heisenberg(3), heisenberg(3)});
  for (auto kind : {InvolutionKind::InversionType, InvolutionKind::CentralFixing,
                    InvolutionKind::Switching}) {
    GroupInvolution sigma = make_involution(g33, kind);
    for (const PacketLabel& label : enumerate_packets(g33)) {
      PacketLabel mapped = invert_after_sigma(g33, label, sigma);
      CHECK(is_distinguished_packet(g33, label, sigma) ==
            is_distinguished_packet(g33, mapped, sigma));
    }
  }
}

TEST_CASE("period vanishing tables") {
  FiniteGroup g = product_group({heisenberg(3), heisenberg(3)});
  GroupInvolution sigma = make_involution(g, InvolutionKind::Switching);
  PacketLabel source{CentralCharacter{g.primes(), {1, 2}}, 9};
  DistinctionReport report = period_vanishing_table(g, source, sigma);
  CHECK(report.distinguished);
  CHECK(report.multiplicity == 4);
  REQUIRE(report.period_nonvanishing_copies.size() == 2);
  CHECK(exps_of(report.period_nonvanishing_copies[0]) == std::vector<std::int64_t>{1, 2});
  CHECK(exps_of(report.period_nonvanishing_copies[1]) == std::vector<std::int64_t>{2, 1});
  REQUIRE(report.period_vanishing_copies.size() == 2);
  CHECK(exps_of(report.period_vanishing_copies[0]) == std::vector<std::int64_t>{1, 1});
  CHECK(exps_of(report.period_vanishing_copies[1]) == std::vector<std::int64_t>{2, 2});
  CHECK(std::int64_t(report.period_nonvanishing_copies.size() +
                     report.period_vanishing_copies.size()) == report.multiplicity);

  // inversion type: the period vanishes nowhere
  FiniteGroup g3 = heisenberg(3);
  GroupInvolution inv = make_involution(g3, InvolutionKind::InversionType);
  PacketLabel src3{CentralCharacter{g3.primes(), {1}}, 3};
  DistinctionReport r3 = period_vanishing_table(g3, src3, inv);
  CHECK(r3.period_nonvanishing_copies.size() == 2);
  CHECK(r3.period_vanishing_copies.empty());

  // a non-distinguished source violates the hypothesis and is an error
  GroupInvolution cf = make_involution(g3, InvolutionKind::CentralFixing);
  CHECK_THROWS_AS(period_vanishing_table(g3, src3, cf), std::invalid_argument);
}
