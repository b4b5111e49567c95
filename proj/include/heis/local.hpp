// Local distinction of the principal series attached to a packet label at a
// place with abelian decomposition group (trivial, Z, or a Lagrangian).
//
// Only the finite shadow of the local character tuple is kept: the multiset
// of beta-offsets in Z/p, the signed affine action of chi -> chi^{-sigma} on
// offsets, and the restriction-triviality flag per offset. The checker
// decides whether an involution epsilon of the indices exists that matches
// each character with its -sigma image, with fixed points restricted to the
// restriction-trivial ones.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "packets.hpp"

namespace heis {

enum class Decomposition { Trivial, Center, LagrangianA0, LagrangianB0 };

inline const char* decomposition_name(Decomposition d) {
  switch (d) {
    case Decomposition::Trivial: return "trivial";
    case Decomposition::Center: return "Z";
    case Decomposition::LagrangianA0: return "L";
    case Decomposition::LagrangianB0: return "L'";
  }
  return "?";
}

struct LocalPlace {
  bool split = false;
  Decomposition decomposition = Decomposition::Trivial;  // used when !split

  static LocalPlace split_place() { return LocalPlace{true, Decomposition::Trivial}; }
  static LocalPlace inert(Decomposition d) { return LocalPlace{false, d}; }

  std::string to_string() const {
    return split ? "split" : std::string("inert/") + decomposition_name(decomposition);
  }
};

// Principal-series data of one Heisenberg factor: the tuple {alpha.beta^k}
// with k running over `offsets` (residues mod p).
struct PSData {
  int p = 3;
  std::string base = "alpha";  // abstract symbol for the base character
  std::vector<std::int64_t> offsets;
  int sigma_scale = 1;             // chi -> chi^{-sigma} maps offset k to
  std::int64_t sigma_shift = 0;    //   sigma_scale * k + sigma_shift (mod p)
  std::vector<bool> restriction_trivial;  // per residue 0..p-1

  std::int64_t sigma_offset(std::int64_t k) const {
    return pos_mod(sigma_scale * k + sigma_shift, p);
  }

  // Symmetric representatives {0, +-1, ..., +-(p-1)/2} for display.
  std::vector<std::int64_t> normalized_offsets() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k : offsets)
      out.push_back(k <= (p - 1) / 2 ? k : k - p);
    return out;
  }
};

// Mackey data of eq.-of-restriction type: trivial and Z decomposition groups
// see a sum of copies of one character (all offsets 0); a Lagrangian sees the
// full beta-orbit {0,...,p-1}. The -sigma action negates offsets for the
// trivial involution (beta fixed) and fixes them for the central-fixing one
// (beta sent to its inverse). Offsets fixed by the action get the
// restriction-trivial flag: chi = chi^{-sigma} forces a square-trivial
// restriction, which is trivial because the character order p is odd.
inline PSData principal_series_data(const FiniteGroup& g, const PacketLabel& label,
                                    int factor, const LocalPlace& place,
                                    const GroupInvolution& sigma) {
  if (place.split)
    fail("principal_series_data expects a non-split place");
  if (label.central.primes != g.primes() || sigma.primes() != g.primes())
    fail("packet label, group and involution must match");
  if (factor < 0 || factor >= g.factor_count())
    fail("factor index out of range");
  if (!label.central.regular())
    fail("packet label must be regular");
  if (sigma.kind() != InvolutionKind::Trivial &&
      sigma.kind() != InvolutionKind::CentralFixing)
    fail("local analysis supports the trivial and central-fixing involutions");

  PSData data;
  data.p = g.primes()[std::size_t(factor)];
  switch (place.decomposition) {
    case Decomposition::Trivial:
    case Decomposition::Center:
      data.offsets.assign(std::size_t(data.p), 0);
      break;
    case Decomposition::LagrangianA0:
    case Decomposition::LagrangianB0:
      for (std::int64_t k = 0; k < data.p; ++k)
        data.offsets.push_back(k);
      break;
  }
  data.sigma_scale = sigma.kind() == InvolutionKind::CentralFixing ? 1 : -1;
  data.sigma_shift = 0;
  for (std::int64_t k = 0; k < data.p; ++k)
    data.restriction_trivial.push_back(data.sigma_offset(k) == k);
  return data;
}

// Does an involution epsilon of the index multiset exist with
// offset(epsilon(i)) = sigma_offset(offset(i)), where epsilon-fixed indices
// must be restriction-trivial? Orbit by orbit: a sigma-fixed offset pairs
// internally (an odd count leaves one fixed point), a 2-orbit needs equal
// counts on both sides.
inline bool ps_distinction_check(const PSData& data) {
  std::vector<std::int64_t> count(std::size_t(data.p), 0);
  for (std::int64_t k : data.offsets) {
    if (k < 0 || k >= data.p)
      fail("offset out of range");
    ++count[std::size_t(k)];
  }
  for (std::int64_t k = 0; k < data.p; ++k) {
    if (count[std::size_t(k)] == 0)
      continue;
    std::int64_t kk = data.sigma_offset(k);
    if (data.sigma_offset(kk) != k)
      return false;  // action not involutive on an occupied offset
    if (kk == k) {
      if (count[std::size_t(k)] % 2 == 1 && !data.restriction_trivial[std::size_t(k)])
        return false;
    } else if (count[std::size_t(k)] != count[std::size_t(kk)]) {
      return false;
    }
  }
  return true;
}

// Split places are distinguished outright: the local pair has the shape
// (tau, tau^dual twisted), which carries an invariant form.
inline bool locally_distinguished_at(const FiniteGroup& g, const PacketLabel& label,
                                     const GroupInvolution& sigma,
                                     const LocalPlace& place) {
  if (place.split)
    return true;
  for (int i = 0; i < g.factor_count(); ++i)
    if (!ps_distinction_check(principal_series_data(g, label, i, place, sigma)))
      return false;
  return true;
}

inline bool everywhere_locally_distinguished(const FiniteGroup& g,
                                             const PacketLabel& label,
                                             const GroupInvolution& sigma,
                                             const std::vector<LocalPlace>& places) {
  if (places.empty())
    fail("everywhere_locally_distinguished needs at least one place");
  for (const LocalPlace& place : places)
    if (!locally_distinguished_at(g, label, sigma, place))
      return false;
  return true;
}

inline std::vector<LocalPlace> all_place_types() {
  return {LocalPlace::split_place(), LocalPlace::inert(Decomposition::Trivial),
          LocalPlace::inert(Decomposition::Center),
          LocalPlace::inert(Decomposition::LagrangianA0),
          LocalPlace::inert(Decomposition::LagrangianB0)};
}

}  // namespace heis
