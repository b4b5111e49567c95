// Explicit monomial models of induced representations. Every matrix is a
// permutation matrix scaled entrywise by roots of unity, so eigenvalues are
// read off per permutation cycle: a cycle of length k whose entries multiply
// to zeta_N^j contributes the k-th roots of that product, i.e. the exponents
// {j + m N : m = 0..k-1} at modulus k N. All comparisons stay in integer
// exponent arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"

namespace heis {

// Column j carries the single nonzero entry zeta_modulus^exp[j] in row row[j].
struct Monomial {
  std::int64_t modulus = 1;
  std::vector<std::int32_t> row;
  std::vector<std::int64_t> exp;

  int dim() const { return int(row.size()); }

  static Monomial identity(int n, std::int64_t modulus) {
    Monomial m;
    m.modulus = modulus;
    m.row.resize(std::size_t(n));
    std::iota(m.row.begin(), m.row.end(), 0);
    m.exp.assign(std::size_t(n), 0);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.modulus != b.modulus || a.dim() != b.dim())
      fail("monomial matrix mismatch");
    Monomial m;
    m.modulus = a.modulus;
    m.row.resize(b.row.size());
    m.exp.resize(b.row.size());
    for (std::size_t j = 0; j < b.row.size(); ++j) {
      std::int32_t mid = b.row[j];
      m.row[j] = a.row[std::size_t(mid)];
      m.exp[j] = (b.exp[j] + a.exp[std::size_t(mid)]) % a.modulus;
    }
    return m;
  }

  bool operator==(const Monomial& o) const {
    return modulus == o.modulus && row == o.row && exp == o.exp;
  }

  Cyclotomic trace() const {
    Cyclotomic acc(modulus);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] == std::int32_t(j))
        acc += root_of_unity(modulus, exp[j]);
    return acc;
  }

  Cyclotomic entry(int i, int j) const {
    if (row[std::size_t(j)] != i)
      return Cyclotomic(modulus);
    return root_of_unity(modulus, exp[std::size_t(j)]);
  }
};

// Sorted multiset of eigenvalue exponents in mu_M.
struct EigenExponents {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> exps;

  static EigenExponents of(const Monomial& m) {
    std::int64_t cycle_lcm = 1;
    std::vector<char> seen(m.row.size(), 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> cycles;  // (length, product exp)
    for (std::size_t j = 0; j < m.row.size(); ++j) {
      if (seen[j])
        continue;
      std::int64_t len = 0, prod = 0;
      std::size_t cur = j;
      do {
        seen[cur] = 1;
        prod += m.exp[cur];
        cur = std::size_t(m.row[cur]);
        ++len;
      } while (cur != j);
      cycles.emplace_back(len, prod % m.modulus);
      cycle_lcm = std::lcm(cycle_lcm, len);
    }
    EigenExponents out;
    out.modulus = cycle_lcm * m.modulus;
    for (auto [len, prod] : cycles) {
      // k-th roots of zeta_N^prod at modulus kN, then lifted to the common one.
      std::int64_t local = len * m.modulus;
      std::int64_t ratio = out.modulus / local;
      for (std::int64_t i = 0; i < len; ++i)
        out.exps.push_back(((prod + i * m.modulus) % local) * ratio);
    }
    std::sort(out.exps.begin(), out.exps.end());
    return out;
  }

  EigenExponents lifted(std::int64_t new_modulus) const {
    if (new_modulus % modulus != 0)
      fail("eigenvalue modulus lift must be a multiple");
    EigenExponents out;
    out.modulus = new_modulus;
    std::int64_t ratio = new_modulus / modulus;
    for (std::int64_t e : exps)
      out.exps.push_back(e * ratio);
    return out;
  }
};

// Is there a root of unity lambda with b = lambda * a as multisets? Returns
// the exponent of one such lambda. Candidate scalars are the finitely many
// ratios b[0] / a[i].
inline std::optional<std::int64_t> scalar_matching(const EigenExponents& a,
                                                   const EigenExponents& b) {
  if (a.exps.size() != b.exps.size())
    return std::nullopt;
  std::int64_t m = std::lcm(a.modulus, b.modulus);
  EigenExponents la = a.lifted(m);
  EigenExponents lb = b.lifted(m);
  if (la.exps.empty())
    return 0;
  std::vector<std::int64_t> shifted(la.exps.size());
  for (std::int64_t cand : la.exps) {
    std::int64_t s = pos_mod(lb.exps[0] - cand, m);
    for (std::size_t i = 0; i < la.exps.size(); ++i)
      shifted[i] = (la.exps[i] + s) % m;
    std::sort(shifted.begin(), shifted.end());
    if (shifted == lb.exps)
      return s;
  }
  return std::nullopt;
}

// A representation by monomial matrices, evaluated on demand per element.
struct MonomialRep {
  std::shared_ptr<const ClassIndex> group_classes;
  int dim = 0;
  std::int64_t modulus = 1;
  std::function<Monomial(const Element&)> at;

  Monomial at_rank(std::int64_t r) const {
    return at(element_unrank(group_classes->primes, r));
  }

  // The character of the representation, by traces at class representatives.
  ClassFunction character() const {
    ClassFunction chi;
    chi.domain = group_classes;
    chi.name = "tr";
    for (std::int64_t r : group_classes->rep_ranks)
      chi.values.push_back(at_rank(r).trace());
    return chi;
  }
};

// Induced representation Ind_L^G(chi~) acting on the cosets r L: column j goes
// to the coset of g r_j with entry chi~(r_i^{-1} g r_j).
inline MonomialRep realize_induced(const FiniteGroup& g, const Subgroup& lag,
                                   const ClassFunction& chi_tilde) {
  if (!chi_tilde.domain->same_domain(*lag.classes()))
    fail("character does not live on the given subgroup");
  if (chi_tilde.degree() != 1)
    fail("realize_induced needs a degree-1 character");
  std::int64_t modulus = g.cyclotomic_modulus();

  auto reps = std::make_shared<std::vector<std::int64_t>>(coset_representatives(g, lag));
  auto coset_of = std::make_shared<std::vector<std::int32_t>>(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < reps->size(); ++i) {
    Element r = g.unrank((*reps)[i]);
    for (std::int64_t s : lag.member_ranks())
      (*coset_of)[std::size_t(g.rank(g.mul(r, g.unrank(s))))] = std::int32_t(i);
  }
  // chi~ values as exponents, indexed by member rank.
  auto exp_of = std::make_shared<std::vector<std::int64_t>>(std::size_t(g.order()), -1);
  for (std::int64_t s : lag.member_ranks()) {
    Cyclotomic v = chi_tilde.at_rank(s).lifted(modulus);
    bool found = false;
    for (std::int64_t e = 0; e < modulus && !found; ++e)
      if (v == root_of_unity(modulus, e)) {
        (*exp_of)[std::size_t(s)] = e;
        found = true;
      }
    if (!found)
      fail("character value is not a root of unity");
  }

  std::vector<int> primes = g.primes();
  MonomialRep rep;
  rep.group_classes = g.classes();
  rep.dim = int(reps->size());
  rep.modulus = modulus;
  rep.at = [primes, reps, coset_of, exp_of, modulus](const Element& e) {
    Monomial m;
    m.modulus = modulus;
    m.row.resize(reps->size());
    m.exp.resize(reps->size());
    for (std::size_t j = 0; j < reps->size(); ++j) {
      Element t = element_mul(primes, e, element_unrank(primes, (*reps)[j]));
      std::int32_t i = (*coset_of)[std::size_t(element_rank(primes, t))];
      Element ri_inv =
          element_inverse(primes, element_unrank(primes, (*reps)[std::size_t(i)]));
      m.row[j] = i;
      m.exp[j] = (*exp_of)[std::size_t(element_rank(primes, element_mul(primes, ri_inv, t)))];
    }
    return m;
  };
  return rep;
}

// Diagonal model of a direct sum of degree-1 characters.
inline MonomialRep diagonal_rep(const FiniteGroup& g,
                                const std::vector<ClassFunction>& linears) {
  std::int64_t modulus = g.cyclotomic_modulus();
  auto exps = std::make_shared<std::vector<std::vector<std::int64_t>>>();
  for (const ClassFunction& chi : linears) {
    if (!chi.domain->same_domain(*g.classes()) || chi.degree() != 1)
      fail("diagonal_rep needs degree-1 characters of the group");
    std::vector<std::int64_t> row(std::size_t(g.order()));
    g.for_each([&](std::int64_t r, const Element&) {
      Cyclotomic v = chi.at_rank(r).lifted(modulus);
      for (std::int64_t e = 0; e < modulus; ++e)
        if (v == root_of_unity(modulus, e)) {
          row[std::size_t(r)] = e;
          return;
        }
      fail("character value is not a root of unity");
    });
    exps->push_back(std::move(row));
  }
  std::vector<int> primes = g.primes();
  MonomialRep rep;
  rep.group_classes = g.classes();
  rep.dim = int(linears.size());
  rep.modulus = modulus;
  rep.at = [primes, exps, modulus](const Element& e) {
    Monomial m = Monomial::identity(int(exps->size()), modulus);
    std::int64_t r = element_rank(primes, e);
    for (std::size_t j = 0; j < exps->size(); ++j)
      m.exp[j] = (*exps)[j][std::size_t(r)];
    return m;
  };
  return rep;
}

}  // namespace heis
