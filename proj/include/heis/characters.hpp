// Exact character theory over Q(zeta_N): class functions, Frobenius
// induction, restriction, inner products, central characters and the full
// irreducible character list of a Heisenberg product.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace heis {

struct ClassFunction {
  std::shared_ptr<const ClassIndex> domain;
  std::vector<Cyclotomic> values;  // one per conjugacy class of the domain
  std::string name;

  const Cyclotomic& at_class(std::size_t i) const { return values[i]; }

  const Cyclotomic& at_rank(std::int64_t r) const {
    std::int32_t c = domain->class_of[std::size_t(r)];
    if (c < 0)
      fail("element lies outside the domain of this class function");
    return values[std::size_t(c)];
  }

  // Degree = value at the identity, which always sits in class 0.
  const Cyclotomic& degree_value() const { return values[0]; }

  std::int64_t degree() const {
    Rational d = degree_value().rational_value();
    if (denominator(d) != 1)
      fail("degree is not an integer");
    return std::int64_t(numerator(d));
  }

  bool operator==(const ClassFunction& o) const {
    return domain->same_domain(*o.domain) && values == o.values;
  }
};

// Character of the center Z, stored as the exponent vector (e_i)_i of
// z = ((0,0,c_i))_i -> prod_i zeta_{p_i}^{e_i c_i}.
struct CentralCharacter {
  std::vector<int> primes;
  std::vector<std::int64_t> exps;

  bool regular() const {
    for (std::int64_t e : exps)
      if (e == 0)
        return false;
    return true;
  }

  Cyclotomic value_at(const Element& z, std::int64_t modulus) const {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      k = pos_mod(k + exps[i] * z.c(int(i)) * (modulus / primes[i]), modulus);
    return root_of_unity(modulus, k);
  }

  bool operator==(const CentralCharacter& o) const {
    return primes == o.primes && exps == o.exps;
  }
};

namespace detail {

inline Cyclotomic linear_value(const std::vector<int>& primes, std::int64_t modulus,
                               const std::vector<std::int64_t>& s,
                               const std::vector<std::int64_t>& t, const Element& e) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < primes.size(); ++i)
    k = pos_mod(k + (s[i] * e.a(int(i)) + t[i] * e.b(int(i))) * (modulus / primes[i]),
                modulus);
  return root_of_unity(modulus, k);
}

// Odometer over per-factor digit bounds; calls fn with the digit vector.
inline void for_each_tuple(const std::vector<std::int64_t>& bounds,
                           const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> digits(bounds.size(), 0);
  while (true) {
    fn(digits);
    std::size_t j = bounds.size();
    while (j > 0) {
      --j;
      if (++digits[j] < bounds[j])
        break;
      digits[j] = 0;
      if (j == 0)
        return;
    }
    if (bounds.empty())
      return;
  }
}

}  // namespace detail

// All prod p_i^2 degree-1 characters, lifted from the abelianization
// H/[H,H] = prod (Z/p_i)^2. Ordered lexicographically in the exponents
// (s_0, t_0, s_1, t_1, ...).
inline std::vector<ClassFunction> linear_characters(const FiniteGroup& g) {
  const auto& ci = g.classes();
  std::vector<Element> reps;
  for (std::int64_t r : ci->rep_ranks)
    reps.push_back(g.unrank(r));
  std::vector<std::int64_t> bounds;
  for (int p : g.primes()) {
    bounds.push_back(p);
    bounds.push_back(p);
  }
  std::vector<ClassFunction> out;
  detail::for_each_tuple(bounds, [&](const std::vector<std::int64_t>& d) {
    std::vector<std::int64_t> s, t;
    std::string name = "L";
    for (std::size_t i = 0; i < g.primes().size(); ++i) {
      s.push_back(d[2 * i]);
      t.push_back(d[2 * i + 1]);
      name += "(" + std::to_string(d[2 * i]) + "," + std::to_string(d[2 * i + 1]) + ")";
    }
    ClassFunction chi;
    chi.domain = ci;
    chi.name = name;
    for (const Element& e : reps)
      chi.values.push_back(detail::linear_value(g.primes(), g.cyclotomic_modulus(), s, t, e));
    out.push_back(std::move(chi));
  });
  return out;
}

// chi~ on a Lagrangian: the value at ((0,b,c))_i (resp. ((a,0,c))_i) is
// chi evaluated on the c-part.
inline ClassFunction extend_to_lagrangian(const Subgroup& lag, const CentralCharacter& chi) {
  if (lag.kind() != SubgroupKind::LagrangianA0 && lag.kind() != SubgroupKind::LagrangianB0)
    fail("extend_to_lagrangian needs a Lagrangian subgroup");
  if (chi.primes != lag.primes())
    fail("central character does not match the group");
  const auto& ci = lag.classes();
  ClassFunction out;
  out.domain = ci;
  out.name = "ext";
  for (std::int64_t r : ci->rep_ranks)
    out.values.push_back(chi.value_at(element_unrank(lag.primes(), r), ci->modulus));
  return out;
}

// Left coset representatives of sub in g, smallest rank first.
inline std::vector<std::int64_t> coset_representatives(const FiniteGroup& g,
                                                       const Subgroup& sub) {
  std::vector<char> covered(std::size_t(g.order()), 0);
  std::vector<std::int64_t> reps;
  for (std::int64_t r = 0; r < g.order(); ++r) {
    if (covered[std::size_t(r)])
      continue;
    reps.push_back(r);
    Element x = g.unrank(r);
    for (std::int64_t s : sub.member_ranks())
      covered[std::size_t(g.rank(g.mul(x, g.unrank(s))))] = 1;
  }
  return reps;
}

// Frobenius induction via coset representatives:
//   Ind(chi)(g) = sum_r chi0(r^-1 g r),  chi0 extending chi by zero.
inline ClassFunction induce(const FiniteGroup& g, const Subgroup& sub,
                            const ClassFunction& chi) {
  if (!chi.domain->same_domain(*sub.classes()))
    fail("class function does not live on the given subgroup");
  if (sub.primes() != g.primes())
    fail("subgroup does not belong to the given group");
  std::vector<std::int64_t> reps = coset_representatives(g, sub);
  const auto& ci = g.classes();
  ClassFunction out;
  out.domain = ci;
  out.name = "Ind(" + chi.name + ")";
  for (std::int64_t cr : ci->rep_ranks) {
    Element ge = g.unrank(cr);
    Cyclotomic acc(g.cyclotomic_modulus());
    for (std::int64_t rr : reps) {
      Element r = g.unrank(rr);
      Element t = g.mul(g.mul(g.inverse(r), ge), r);
      std::int64_t tr = g.rank(t);
      if (sub.contains_rank(tr))
        acc += chi.at_rank(tr).lifted(g.cyclotomic_modulus());
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

inline ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& sub) {
  const auto& ci = sub.classes();
  ClassFunction out;
  out.domain = ci;
  out.name = "Res(" + chi.name + ")";
  for (std::int64_t r : ci->rep_ranks)
    out.values.push_back(chi.at_rank(r));
  return out;
}

inline Cyclotomic inner_product_value(const ClassFunction& x, const ClassFunction& y) {
  if (!x.domain->same_domain(*y.domain))
    fail("inner product of class functions on different domains");
  const ClassIndex& ci = *x.domain;
  Cyclotomic acc(ci.modulus);
  for (std::size_t i = 0; i < ci.count(); ++i)
    acc += (x.values[i] * y.values[i].conj()).scaled(Rational(ci.sizes[i]));
  return acc.scaled(Rational(1, ci.order));
}

// <x,y> = (1/|G|) sum_g x(g) conj(y(g)); rational for any pair of characters.
inline Rational inner_product(const ClassFunction& x, const ClassFunction& y) {
  return inner_product_value(x, y).rational_value();
}

// The complete irreducible list: per factor the p^2 linear characters plus the
// p-1 characters induced from a Lagrangian extension of a regular central
// character, tensored across factors. Completeness is certified by
// sum deg^2 = |G|, which fails loudly if the construction ever went wrong.
inline std::vector<ClassFunction> irreducible_characters(const FiniteGroup& g) {
  std::int64_t modulus = g.cyclotomic_modulus();
  std::vector<std::vector<ClassFunction>> factor_irreps;
  std::vector<FiniteGroup> factor_groups;
  for (int p : g.primes())
    factor_groups.push_back(heisenberg(p));
  for (FiniteGroup& h : factor_groups) {
    std::vector<ClassFunction> irr = linear_characters(h);
    Subgroup lag = lagrangian(h, SubgroupKind::LagrangianA0);
    int p = h.primes()[0];
    for (std::int64_t e = 1; e < p; ++e) {
      CentralCharacter chi{h.primes(), {e}};
      ClassFunction ind = induce(h, lag, extend_to_lagrangian(lag, chi));
      ind.name = "I(" + std::to_string(e) + ")";
      irr.push_back(std::move(ind));
    }
    factor_irreps.push_back(std::move(irr));
  }

  // Per product class, the class id of each factor component.
  const auto& ci = g.classes();
  std::vector<std::vector<std::int32_t>> factor_class(ci->count());
  for (std::size_t c = 0; c < ci->count(); ++c) {
    Element e = g.unrank(ci->rep_ranks[c]);
    for (std::size_t i = 0; i < factor_groups.size(); ++i) {
      Element fe = factor_groups[i].identity();
      for (int j = 0; j < 3; ++j)
        fe.v[j] = e.v[3 * int(i) + j];
      factor_class[c].push_back(
          factor_groups[i].classes()->class_of[std::size_t(factor_groups[i].rank(fe))]);
    }
  }

  std::vector<std::int64_t> bounds;
  for (const auto& irr : factor_irreps)
    bounds.push_back(std::int64_t(irr.size()));
  std::vector<ClassFunction> out;
  Int degree_sum = 0;
  detail::for_each_tuple(bounds, [&](const std::vector<std::int64_t>& pick) {
    ClassFunction chi;
    chi.domain = ci;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (i)
        chi.name += "x";
      chi.name += factor_irreps[i][std::size_t(pick[i])].name;
    }
    for (std::size_t c = 0; c < ci->count(); ++c) {
      Cyclotomic v = Cyclotomic::from_int(1, modulus);
      for (std::size_t i = 0; i < pick.size(); ++i)
        v *= factor_irreps[i][std::size_t(pick[i])]
                 .at_class(std::size_t(factor_class[c][i]))
                 .lifted(modulus);
      chi.values.push_back(std::move(v));
    }
    std::int64_t d = chi.degree();
    degree_sum += Int(d) * d;
    out.push_back(std::move(chi));
  });
  if (degree_sum != g.order())
    fail_internal("irreducible character list is incomplete: sum of squared degrees " +
                  degree_sum.str() + " != group order " + std::to_string(g.order()));
  return out;
}

// Central character z -> chi(z)/chi(1) of an irreducible chi, as an exponent
// vector. Rejects inputs where some chi(z)/chi(1) is not a root of unity.
inline CentralCharacter central_character(const ClassFunction& chi) {
  const ClassIndex& ci = *chi.domain;
  if (ci.order != ci.ambient_order)
    fail("central_character expects a character of the full group");
  std::int64_t deg = chi.degree();
  if (deg <= 0)
    fail("character degree must be positive");
  CentralCharacter out;
  out.primes = ci.primes;
  std::int64_t weight = 1;
  for (std::size_t i = 0; i < ci.primes.size(); ++i) {
    int p = ci.primes[i];
    std::int64_t z_rank = weight * p * p;  // ((0,0,1)) in factor i
    Cyclotomic v = chi.at_rank(z_rank).scaled(Rational(1, deg));
    std::optional<std::int64_t> found;
    for (std::int64_t e = 0; e < p && !found; ++e)
      if (v == root_of_unity(ci.modulus, e * (ci.modulus / p)))
        found = e;
    if (!found)
      fail("not an irreducible character: central value is not a root of unity");
    out.exps.push_back(*found);
    weight *= std::int64_t(p) * p * p;
  }
  return out;
}

// chi^sigma(g) = chi(sigma(g)).
inline ClassFunction twist_by_involution(const FiniteGroup& g, const ClassFunction& chi,
                                         const GroupInvolution& sigma) {
  if (!chi.domain->same_domain(*g.classes()) || sigma.primes() != g.primes())
    fail("involution twist needs a character of the involution's group");
  const auto& ci = g.classes();
  ClassFunction out;
  out.domain = ci;
  out.name = chi.name + "^s";
  for (std::int64_t r : ci->rep_ranks)
    out.values.push_back(chi.at_rank(sigma.apply_rank(r)));
  return out;
}

inline ClassFunction dual(const ClassFunction& chi) {
  ClassFunction out;
  out.domain = chi.domain;
  out.name = chi.name + "^v";
  for (const Cyclotomic& v : chi.values)
    out.values.push_back(v.conj());
  return out;
}

// Characters of the structured abelian subgroups. For a Lagrangian these are
// indexed per factor by (s, t): (0,b,c) -> zeta^{s b + t c} on the a=0 side,
// (a,0,c) -> zeta^{s a + t c} on the b=0 side. For the center by (e)_i.
inline std::vector<ClassFunction> subgroup_characters(const Subgroup& sub) {
  const auto& ci = sub.classes();
  std::int64_t modulus = ci->modulus;
  const std::vector<int>& primes = sub.primes();
  std::vector<Element> reps;
  for (std::int64_t r : ci->rep_ranks)
    reps.push_back(element_unrank(primes, r));

  auto build = [&](const std::function<Cyclotomic(const std::vector<std::int64_t>&,
                                                  const Element&)>& value,
                   const std::vector<std::int64_t>& bounds, const char* tag) {
    std::vector<ClassFunction> out;
    detail::for_each_tuple(bounds, [&](const std::vector<std::int64_t>& d) {
      ClassFunction chi;
      chi.domain = ci;
      chi.name = tag;
      for (std::int64_t x : d)
        chi.name += "." + std::to_string(x);
      for (const Element& e : reps)
        chi.values.push_back(value(d, e));
      out.push_back(std::move(chi));
    });
    return out;
  };

  switch (sub.kind()) {
    case SubgroupKind::Center: {
      std::vector<std::int64_t> bounds(primes.begin(), primes.end());
      return build(
          [&](const std::vector<std::int64_t>& d, const Element& e) {
            std::int64_t k = 0;
            for (std::size_t i = 0; i < primes.size(); ++i)
              k = pos_mod(k + d[i] * e.c(int(i)) * (modulus / primes[i]), modulus);
            return root_of_unity(modulus, k);
          },
          bounds, "z");
    }
    case SubgroupKind::LagrangianA0:
    case SubgroupKind::LagrangianB0: {
      bool a_side = sub.kind() == SubgroupKind::LagrangianA0;
      std::vector<std::int64_t> bounds;
      for (int p : primes) {
        bounds.push_back(p);
        bounds.push_back(p);
      }
      return build(
          [&](const std::vector<std::int64_t>& d, const Element& e) {
            std::int64_t k = 0;
            for (std::size_t i = 0; i < primes.size(); ++i) {
              std::int64_t line = a_side ? e.b(int(i)) : e.a(int(i));
              k = pos_mod(k + (d[2 * i] * line + d[2 * i + 1] * e.c(int(i))) *
                                  (modulus / primes[i]),
                          modulus);
            }
            return root_of_unity(modulus, k);
          },
          bounds, "l");
    }
    case SubgroupKind::Custom:
      fail("subgroup_characters supports only Center and Lagrangian subgroups");
  }
  fail("unreachable");
}

// Decomposition of Res(I_chi) on a Lagrangian, with the shape certificate of
// the Mackey computation: the constituents must be exactly chi~ . mu~^k for
// k = 0..p-1 with one nontrivial mu~ that is trivial on the c-coordinate.
struct MackeyDecomposition {
  std::vector<std::size_t> constituents;  // indices into subgroup_characters(sub)
  std::vector<Rational> multiplicities;
  bool chi_mu_orbit_shape = false;
};

inline MackeyDecomposition mackey_restriction(const FiniteGroup& g,
                                              const ClassFunction& rho,
                                              const Subgroup& lag) {
  if (g.factor_count() != 1)
    fail("mackey_restriction handles a single Heisenberg factor");
  int p = g.primes()[0];
  ClassFunction res = restrict_to(rho, lag);
  std::vector<ClassFunction> chars = subgroup_characters(lag);
  MackeyDecomposition out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    Rational m = inner_product(res, chars[i]);
    if (m != 0) {
      out.constituents.push_back(i);
      out.multiplicities.push_back(m);
    }
  }
  // subgroup_characters on a Lagrangian orders by (s, t); the orbit
  // chi~ . mu~^k, mu~ = l.1.0, is { (s, e) : s = 0..p-1 } for fixed e.
  if (out.constituents.size() == std::size_t(p)) {
    bool ok = true;
    std::int64_t e = std::int64_t(out.constituents[0]) % p;
    for (std::size_t k = 0; k < out.constituents.size(); ++k)
      if (out.multiplicities[k] != 1 ||
          std::int64_t(out.constituents[k]) != std::int64_t(k) * p + e)
        ok = false;
    out.chi_mu_orbit_shape = ok && e != 0;
  }
  return out;
}

}  // namespace heis
