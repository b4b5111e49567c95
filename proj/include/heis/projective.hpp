// Strong and weak projective equivalence of irreducible representations, and
// the count of strong classes inside a weak class.
//
// Strong equivalence (conjugacy by one element of PGL_n) is decided as
// twist-equivalence by a linear character: if x^-1 rho(g) x = lambda(g) rho'(g)
// for a single x, then lambda(gh) I = x^-1 rho(gh) x rho'(gh)^-1 =
// lambda(g) lambda(h) I, so lambda is multiplicative and the characters
// satisfy chi = lambda . chi'; conversely equal twisted characters give an
// honest intertwiner. Weak equivalence compares eigenvalue multisets up to a
// scalar at every conjugacy class representative.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "characters.hpp"
#include "monomial.hpp"

namespace heis {

struct EquivalenceVerdict {
  bool strong = false;
  bool weak = false;
  std::optional<ClassFunction> witness;  // lambda with chi' = lambda . chi
};

inline std::optional<ClassFunction> strong_twist_witness(const ClassFunction& a,
                                                         const ClassFunction& b) {
  if (!a.domain->same_domain(*b.domain))
    fail("strong equivalence needs characters of the same group");
  if (a.degree() != b.degree())
    fail("strong equivalence needs equal dimensions");
  const ClassIndex& ci = *a.domain;
  if (ci.order != ci.ambient_order)
    fail("strong equivalence is defined on characters of the full group");
  std::vector<Element> reps;
  for (std::int64_t r : ci.rep_ranks)
    reps.push_back(element_unrank(ci.primes, r));
  std::vector<std::int64_t> bounds;
  for (int p : ci.primes) {
    bounds.push_back(p);
    bounds.push_back(p);
  }
  std::optional<ClassFunction> witness;
  detail::for_each_tuple(bounds, [&](const std::vector<std::int64_t>& d) {
    if (witness)
      return;
    std::vector<std::int64_t> s, t;
    for (std::size_t i = 0; i < ci.primes.size(); ++i) {
      s.push_back(d[2 * i]);
      t.push_back(d[2 * i + 1]);
    }
    ClassFunction lambda;
    lambda.domain = a.domain;
    lambda.name = "twist";
    for (std::size_t i = 0; i < ci.count(); ++i) {
      Cyclotomic lv = detail::linear_value(ci.primes, ci.modulus, s, t, reps[i]);
      if (lv * a.values[i] != b.values[i])
        return;
      lambda.values.push_back(std::move(lv));
    }
    witness = std::move(lambda);
  });
  return witness;
}

inline bool strongly_equivalent(const ClassFunction& a, const ClassFunction& b) {
  return strong_twist_witness(a, b).has_value();
}

inline bool strongly_equivalent(const MonomialRep& a, const MonomialRep& b) {
  return strongly_equivalent(a.character(), b.character());
}

// Eigenvalue multisets agree up to a scalar at every class representative.
inline bool weakly_equivalent(const MonomialRep& a, const MonomialRep& b) {
  if (!a.group_classes->same_domain(*b.group_classes))
    fail("weak equivalence needs representations of the same group");
  if (a.dim != b.dim)
    fail("weak equivalence needs equal dimensions");
  for (std::int64_t r : a.group_classes->rep_ranks) {
    EigenExponents ea = EigenExponents::of(a.at_rank(r));
    EigenExponents eb = EigenExponents::of(b.at_rank(r));
    if (!scalar_matching(ea, eb))
      return false;
  }
  return true;
}

inline EquivalenceVerdict equivalence_verdict(const MonomialRep& a, const MonomialRep& b) {
  EquivalenceVerdict v;
  v.witness = strong_twist_witness(a.character(), b.character());
  v.strong = v.witness.has_value();
  v.weak = weakly_equivalent(a, b);
  if (v.strong && !v.weak)
    fail_internal("strong equivalence without weak equivalence");
  return v;
}

// Number of strong classes among pairwise weakly equivalent irreducibles.
inline std::int64_t
count_strong_classes_in_weak_class(const std::vector<MonomialRep>& reps) {
  if (reps.empty())
    fail("empty representation list");
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (!weakly_equivalent(reps[i], reps[j]))
        fail("input representations are not pairwise weakly equivalent");
  std::vector<ClassFunction> chars;
  chars.reserve(reps.size());
  for (const MonomialRep& r : reps)
    chars.push_back(r.character());
  std::vector<std::size_t> cls_rep;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < cls_rep.size() && !placed; ++c)
      if (strongly_equivalent(chars[cls_rep[c]], chars[i]))
        placed = true;
    if (!placed)
      cls_rep.push_back(i);
  }
  return std::int64_t(cls_rep.size());
}

}  // namespace heis
