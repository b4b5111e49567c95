// Classification of distinguished L-packets and period-vanishing patterns.
// Packet labels are the regular central characters of H; a packet is
// distinguished under sigma exactly when its central character c satisfies
// c(z^sigma) = c(z^-1) on the center.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "characters.hpp"
#include "group.hpp"

namespace heis {

struct PacketLabel {
  CentralCharacter central;
  std::int64_t dim = 1;  // prod p_i

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < central.exps.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(central.exps[i]);
    }
    return s + ")";
  }

  bool operator==(const PacketLabel& o) const {
    return central == o.central && dim == o.dim;
  }
};

// The prod (p_i - 1) regular labels, in lexicographic exponent order.
inline std::vector<PacketLabel> enumerate_packets(const FiniteGroup& g) {
  std::vector<std::int64_t> bounds;
  std::int64_t dim = 1;
  for (int p : g.primes()) {
    bounds.push_back(p - 1);
    dim *= p;
  }
  std::vector<PacketLabel> out;
  detail::for_each_tuple(bounds, [&](const std::vector<std::int64_t>& d) {
    PacketLabel label;
    label.central.primes = g.primes();
    for (std::int64_t e : d)
      label.central.exps.push_back(e + 1);
    label.dim = dim;
    out.push_back(std::move(label));
  });
  return out;
}

// m(n) = prod (p_i - 1); also the number of strong classes in the weak class
// of the regular irreducibles, which the tests cross-check.
inline std::int64_t multiplicity(const FiniteGroup& g) {
  std::int64_t m = 1;
  for (int p : g.primes())
    m *= p - 1;
  return m;
}

// c(z^sigma) = c(z^-1) checked on the generators (0,0,1)_i of Z, which
// suffices since both sides are characters of Z.
inline bool is_distinguished_packet(const FiniteGroup& g, const PacketLabel& label,
                                    const GroupInvolution& sigma) {
  if (label.central.primes != g.primes() || sigma.primes() != g.primes())
    fail("packet label, group and involution must match");
  std::int64_t modulus = g.cyclotomic_modulus();
  for (int i = 0; i < g.factor_count(); ++i) {
    Element z = g.identity();
    z.v[3 * i + 2] = 1;
    Cyclotomic lhs = label.central.value_at(sigma.apply(g, z), modulus);
    Cyclotomic rhs = label.central.value_at(g.inverse(z), modulus);
    if (lhs != rhs)
      return false;
  }
  return true;
}

inline std::vector<PacketLabel> distinguished_packets(const FiniteGroup& g,
                                                      const GroupInvolution& sigma) {
  std::vector<PacketLabel> out;
  for (const PacketLabel& label : enumerate_packets(g))
    if (is_distinguished_packet(g, label, sigma))
      out.push_back(label);
  return out;
}

struct DistinctionReport {
  PacketLabel label;
  bool distinguished = false;
  std::vector<PacketLabel> period_nonvanishing_copies;
  std::vector<PacketLabel> period_vanishing_copies;
  std::int64_t multiplicity = 0;
};

// Period-vanishing pattern across the canonical copies, one per packet label:
// given a distinguished source whose own period does not vanish, the copies
// with non-vanishing period are exactly those in packets with c^sigma = c^-1.
// A non-distinguished source violates the hypothesis and is reported as an
// error rather than answered.
inline DistinctionReport period_vanishing_table(const FiniteGroup& g,
                                                const PacketLabel& source,
                                                const GroupInvolution& sigma) {
  DistinctionReport report;
  report.label = source;
  report.distinguished = is_distinguished_packet(g, source, sigma);
  if (!report.distinguished)
    fail("period_vanishing_table: source packet " + source.to_string() +
         " is not distinguished, the non-vanishing hypothesis fails");
  report.multiplicity = multiplicity(g);
  for (const PacketLabel& label : enumerate_packets(g)) {
    if (is_distinguished_packet(g, label, sigma))
      report.period_nonvanishing_copies.push_back(label);
    else
      report.period_vanishing_copies.push_back(label);
  }
  return report;
}

}  // namespace heis
