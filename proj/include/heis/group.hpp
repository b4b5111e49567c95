// Finite products of odd-prime Heisenberg groups, their distinguished
// subgroups (center, Lagrangians) and validated involutive automorphisms.
//
// An element of H = prod_i H_{p_i} is the coordinate tuple ((a_i, b_i, c_i))_i
// with the per-factor product rule
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'),
// the flat-vector image of the upper unipotent 3x3 matrix model. Elements are
// stored as residue vectors; the matrix model survives only in the tests.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "numeric.hpp"

namespace heis {

constexpr int kMaxFactors = 8;
constexpr std::int64_t kMaxOrder = 50'000'000;  // brute-force enumeration bound

struct Element {
  std::array<std::int16_t, 3 * kMaxFactors> v{};
  int factors = 0;

  std::int16_t a(int i) const { return v[3 * i]; }
  std::int16_t b(int i) const { return v[3 * i + 1]; }
  std::int16_t c(int i) const { return v[3 * i + 2]; }

  bool operator==(const Element& o) const { return factors == o.factors && v == o.v; }
};

inline Element element_mul(const std::vector<int>& primes, const Element& x,
                           const Element& y) {
  Element r;
  r.factors = int(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    int p = primes[i];
    int fi = int(i);
    r.v[3 * i] = std::int16_t((x.a(fi) + y.a(fi)) % p);
    r.v[3 * i + 1] = std::int16_t((x.b(fi) + y.b(fi)) % p);
    r.v[3 * i + 2] = std::int16_t((x.c(fi) + y.c(fi) + x.a(fi) * y.b(fi)) % p);
  }
  return r;
}

inline Element element_inverse(const std::vector<int>& primes, const Element& x) {
  Element r;
  r.factors = int(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    int p = primes[i];
    int fi = int(i);
    r.v[3 * i] = std::int16_t(pos_mod(-x.a(fi), p));
    r.v[3 * i + 1] = std::int16_t(pos_mod(-x.b(fi), p));
    r.v[3 * i + 2] = std::int16_t(pos_mod(-x.c(fi) + x.a(fi) * x.b(fi), p));
  }
  return r;
}

// Mixed-radix rank codec; rank 0 is the identity.
inline std::int64_t element_rank(const std::vector<int>& primes, const Element& e) {
  std::int64_t r = 0;
  std::int64_t w = 1;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      r += e.v[3 * i + j] * w;
      w *= primes[i];
    }
  return r;
}

inline Element element_unrank(const std::vector<int>& primes, std::int64_t r) {
  Element e;
  e.factors = int(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      e.v[3 * i + j] = std::int16_t(r % primes[i]);
      r /= primes[i];
    }
  return e;
}

// Conjugacy structure of a group or of a subgroup, self-contained enough to
// evaluate class functions: `class_of` is indexed by ambient element rank and
// holds -1 off the (sub)group.
struct ClassIndex {
  std::vector<int> primes;
  std::int64_t ambient_order = 1;
  std::int64_t order = 1;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> rep_ranks;
  std::vector<std::int64_t> sizes;
  std::vector<std::int32_t> class_of;

  std::size_t count() const { return rep_ranks.size(); }

  bool same_domain(const ClassIndex& o) const {
    return this == &o || (primes == o.primes && rep_ranks == o.rep_ranks &&
                          sizes == o.sizes && order == o.order);
  }
};

class FiniteGroup {
public:
  explicit FiniteGroup(std::vector<int> primes) : primes_(std::move(primes)) {
    if (primes_.empty())
      fail("prime list must be nonempty");
    if (primes_.size() > kMaxFactors)
      fail("at most " + std::to_string(kMaxFactors) + " Heisenberg factors supported");
    order_ = 1;
    modulus_ = 1;
    for (int p : primes_) {
      if (p == 2 || !is_prime(p))
        fail("Heisenberg factor needs an odd prime, got " + std::to_string(p));
      if (order_ > kMaxOrder / (std::int64_t(p) * p * p))
        fail("group order exceeds the exact-enumeration limit");
      order_ *= std::int64_t(p) * p * p;
      if (modulus_ % p != 0)
        modulus_ *= p;
    }
    build_classes();
  }

  const std::vector<int>& primes() const { return primes_; }
  std::int64_t order() const { return order_; }
  std::int64_t cyclotomic_modulus() const { return modulus_; }
  int factor_count() const { return int(primes_.size()); }

  Element identity() const {
    Element e;
    e.factors = factor_count();
    return e;
  }

  Element mul(const Element& x, const Element& y) const {
    return element_mul(primes_, x, y);
  }

  Element inverse(const Element& x) const { return element_inverse(primes_, x); }

  Element conjugate(const Element& x, const Element& g) const {
    return mul(mul(x, g), inverse(x));
  }

  Element commutator(const Element& x, const Element& y) const {
    return mul(mul(x, y), mul(inverse(x), inverse(y)));
  }

  std::int64_t rank(const Element& e) const { return element_rank(primes_, e); }

  Element unrank(std::int64_t r) const { return element_unrank(primes_, r); }

  Element element(std::initializer_list<int> coords) const {
    if (int(coords.size()) != 3 * factor_count())
      fail("element needs 3 coordinates per factor");
    Element e;
    e.factors = factor_count();
    int j = 0;
    for (int c : coords) {
      e.v[j] = std::int16_t(pos_mod(c, primes_[j / 3]));
      ++j;
    }
    return e;
  }

  // Visits every element in rank order.
  void for_each(const std::function<void(std::int64_t, const Element&)>& fn) const {
    Element e = identity();
    for (std::int64_t r = 0; r < order_; ++r) {
      fn(r, e);
      for (int j = 0; j < 3 * factor_count(); ++j) {
        if (++e.v[j] < primes_[j / 3])
          break;
        e.v[j] = 0;
      }
    }
  }

  const std::shared_ptr<const ClassIndex>& classes() const { return classes_; }

  bool is_central(const Element& e) const {
    for (int i = 0; i < factor_count(); ++i)
      if (e.a(i) != 0 || e.b(i) != 0)
        return false;
    return true;
  }

private:
  void build_classes() {
    auto ci = std::make_shared<ClassIndex>();
    ci->primes = primes_;
    ci->ambient_order = order_;
    ci->order = order_;
    ci->modulus = modulus_;
    ci->class_of.assign(std::size_t(order_), -1);
    std::vector<Element> all;
    all.reserve(std::size_t(order_));
    for_each([&](std::int64_t, const Element& e) { all.push_back(e); });
    for (std::int64_t r = 0; r < order_; ++r) {
      if (ci->class_of[std::size_t(r)] >= 0)
        continue;
      std::int32_t id = std::int32_t(ci->rep_ranks.size());
      const Element g = all[std::size_t(r)];
      std::int64_t size = 0;
      for (const Element& x : all) {
        std::int64_t t = rank(conjugate(x, g));
        if (ci->class_of[std::size_t(t)] < 0) {
          ci->class_of[std::size_t(t)] = id;
          ++size;
        }
      }
      ci->rep_ranks.push_back(r);
      ci->sizes.push_back(size);
    }
    classes_ = std::move(ci);
  }

  std::vector<int> primes_;
  std::int64_t order_;
  std::int64_t modulus_;
  std::shared_ptr<const ClassIndex> classes_;
};

inline FiniteGroup heisenberg(int p) { return FiniteGroup({p}); }

inline FiniteGroup product_group(const std::vector<FiniteGroup>& factors) {
  if (factors.empty())
    fail("product of no groups");
  std::vector<int> primes;
  for (const FiniteGroup& g : factors)
    primes.insert(primes.end(), g.primes().begin(), g.primes().end());
  return FiniteGroup(std::move(primes));
}

inline std::vector<std::pair<Element, std::int64_t>>
conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::pair<Element, std::int64_t>> out;
  const ClassIndex& ci = *g.classes();
  out.reserve(ci.count());
  for (std::size_t i = 0; i < ci.count(); ++i)
    out.emplace_back(g.unrank(ci.rep_ranks[i]), ci.sizes[i]);
  return out;
}

enum class SubgroupKind { Center, LagrangianA0, LagrangianB0, Custom };

class Subgroup {
public:
  Subgroup(const FiniteGroup& parent, SubgroupKind kind)
      : Subgroup(parent, kind, members_for(parent, kind)) {}

  Subgroup(const FiniteGroup& parent, SubgroupKind kind, std::vector<std::int64_t> members)
      : primes_(parent.primes()), kind_(kind), member_ranks_(std::move(members)) {
    std::sort(member_ranks_.begin(), member_ranks_.end());
    validate(parent);
    build_classes(parent);
  }

  SubgroupKind kind() const { return kind_; }
  const std::vector<int>& primes() const { return primes_; }
  std::int64_t order() const { return std::int64_t(member_ranks_.size()); }
  const std::vector<std::int64_t>& member_ranks() const { return member_ranks_; }
  const std::shared_ptr<const ClassIndex>& classes() const { return classes_; }

  bool contains_rank(std::int64_t r) const {
    return classes_->class_of[std::size_t(r)] >= 0;
  }

  bool is_normal_in(const FiniteGroup& g) const {
    for (std::int64_t mr : member_ranks_) {
      Element m = g.unrank(mr);
      bool ok = true;
      g.for_each([&](std::int64_t, const Element& x) {
        if (ok && !contains_rank(g.rank(g.conjugate(x, m))))
          ok = false;
      });
      if (!ok)
        return false;
    }
    return true;
  }

private:
  static std::vector<std::int64_t> members_for(const FiniteGroup& g, SubgroupKind kind) {
    std::vector<std::int64_t> out;
    g.for_each([&](std::int64_t r, const Element& e) {
      bool in = true;
      for (int i = 0; i < g.factor_count() && in; ++i) {
        switch (kind) {
          case SubgroupKind::Center:
            in = e.a(i) == 0 && e.b(i) == 0;
            break;
          case SubgroupKind::LagrangianA0:
            in = e.a(i) == 0;
            break;
          case SubgroupKind::LagrangianB0:
            in = e.b(i) == 0;
            break;
          case SubgroupKind::Custom:
            fail("custom subgroup needs an explicit member list");
        }
      }
      if (in)
        out.push_back(r);
    });
    return out;
  }

  void validate(const FiniteGroup& g) const {
    if (member_ranks_.empty() || member_ranks_.front() != 0)
      fail("subgroup must contain the identity");
    std::vector<char> in(std::size_t(g.order()), 0);
    for (std::int64_t r : member_ranks_) {
      if (r < 0 || r >= g.order() || in[std::size_t(r)])
        fail("invalid or duplicate subgroup member");
      in[std::size_t(r)] = 1;
    }
    for (std::int64_t r : member_ranks_) {
      Element x = g.unrank(r);
      if (!in[std::size_t(g.rank(g.inverse(x)))])
        fail("subgroup not closed under inverses");
      for (std::int64_t s : member_ranks_)
        if (!in[std::size_t(g.rank(g.mul(x, g.unrank(s))))])
          fail("subgroup not closed under multiplication");
    }
  }

  void build_classes(const FiniteGroup& g) {
    auto ci = std::make_shared<ClassIndex>();
    ci->primes = primes_;
    ci->ambient_order = g.order();
    ci->order = order();
    ci->modulus = g.cyclotomic_modulus();
    ci->class_of.assign(std::size_t(g.order()), -1);
    for (std::int64_t r : member_ranks_) {
      if (ci->class_of[std::size_t(r)] >= 0)
        continue;
      std::int32_t id = std::int32_t(ci->rep_ranks.size());
      const Element m = g.unrank(r);
      std::int64_t size = 0;
      for (std::int64_t xr : member_ranks_) {
        std::int64_t t = g.rank(g.conjugate(g.unrank(xr), m));
        if (ci->class_of[std::size_t(t)] < 0) {
          ci->class_of[std::size_t(t)] = id;
          ++size;
        }
      }
      ci->rep_ranks.push_back(r);
      ci->sizes.push_back(size);
    }
    classes_ = std::move(ci);
  }

  std::vector<int> primes_;
  SubgroupKind kind_;
  std::vector<std::int64_t> member_ranks_;
  std::shared_ptr<const ClassIndex> classes_;
};

inline Subgroup center(const FiniteGroup& g) { return Subgroup(g, SubgroupKind::Center); }

inline Subgroup lagrangian(const FiniteGroup& g, SubgroupKind which) {
  if (which != SubgroupKind::LagrangianA0 && which != SubgroupKind::LagrangianB0)
    fail("lagrangian() expects LagrangianA0 or LagrangianB0");
  return Subgroup(g, which);
}

enum class InvolutionKind { Trivial, InversionType, CentralFixing, Switching, Custom };

inline const char* involution_name(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::Trivial: return "trivial";
    case InvolutionKind::InversionType: return "inversion";
    case InvolutionKind::CentralFixing: return "central-fixing";
    case InvolutionKind::Switching: return "switching";
    case InvolutionKind::Custom: return "custom";
  }
  return "?";
}

// A validated automorphism of order dividing 2, stored as an image table.
class GroupInvolution {
public:
  GroupInvolution(const FiniteGroup& g, InvolutionKind kind,
                  const std::function<Element(const Element&)>& map)
      : kind_(kind), primes_(g.primes()) {
    image_.reserve(std::size_t(g.order()));
    g.for_each([&](std::int64_t, const Element& e) { image_.push_back(g.rank(map(e))); });
    validate(g);
  }

  InvolutionKind kind() const { return kind_; }
  const std::vector<int>& primes() const { return primes_; }

  Element apply(const FiniteGroup& g, const Element& e) const {
    return g.unrank(image_[std::size_t(g.rank(e))]);
  }

  std::int64_t apply_rank(std::int64_t r) const { return image_[std::size_t(r)]; }

private:
  // sigma(gen * x) = sigma(gen) * sigma(x) over the generators (1,0,0)_i and
  // (0,1,0)_i, which generate H, certifies multiplicativity everywhere.
  void validate(const FiniteGroup& g) const {
    if (image_[0] != 0)
      fail("involution must fix the identity");
    for (std::int64_t r = 0; r < g.order(); ++r)
      if (image_[std::size_t(image_[std::size_t(r)])] != r)
        fail("map does not square to the identity");
    std::vector<Element> gens;
    for (int i = 0; i < g.factor_count(); ++i) {
      Element ga = g.identity();
      ga.v[3 * i] = 1;
      Element gb = g.identity();
      gb.v[3 * i + 1] = 1;
      gens.push_back(ga);
      gens.push_back(gb);
    }
    for (const Element& gen : gens) {
      const Element sg = g.unrank(image_[std::size_t(g.rank(gen))]);
      bool ok = true;
      g.for_each([&](std::int64_t r, const Element& x) {
        if (!ok)
          return;
        std::int64_t lhs = image_[std::size_t(g.rank(g.mul(gen, x)))];
        std::int64_t rhs = g.rank(g.mul(sg, g.unrank(image_[std::size_t(r)])));
        if (lhs != rhs)
          ok = false;
      });
      if (!ok)
        fail("map is not an automorphism");
    }
  }

  InvolutionKind kind_;
  std::vector<int> primes_;
  std::vector<std::int64_t> image_;
};

inline GroupInvolution make_involution(const FiniteGroup& g, InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Trivial:
      return GroupInvolution(g, kind, [](const Element& e) { return e; });
    case InvolutionKind::InversionType:
      // (a,b,c) -> (a,-b,-c); acts as inversion on the center.
      return GroupInvolution(g, kind, [&](const Element& e) {
        Element r = e;
        for (int i = 0; i < g.factor_count(); ++i) {
          int p = g.primes()[i];
          r.v[3 * i + 1] = std::int16_t(pos_mod(-e.b(i), p));
          r.v[3 * i + 2] = std::int16_t(pos_mod(-e.c(i), p));
        }
        return r;
      });
    case InvolutionKind::CentralFixing:
      // (a,b,c) -> (-a,-b,c); fixes the center pointwise.
      return GroupInvolution(g, kind, [&](const Element& e) {
        Element r = e;
        for (int i = 0; i < g.factor_count(); ++i) {
          int p = g.primes()[i];
          r.v[3 * i] = std::int16_t(pos_mod(-e.a(i), p));
          r.v[3 * i + 1] = std::int16_t(pos_mod(-e.b(i), p));
        }
        return r;
      });
    case InvolutionKind::Switching: {
      int k = g.factor_count();
      if (k % 2 != 0)
        fail("switching involution needs a product of two equal groups");
      int h = k / 2;
      for (int i = 0; i < h; ++i)
        if (g.primes()[i] != g.primes()[h + i])
          fail("switching involution needs matching prime lists");
      return GroupInvolution(g, kind, [h](const Element& e) {
        Element r = e;
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < 3; ++j)
            std::swap(r.v[3 * i + j], r.v[3 * (h + i) + j]);
        return r;
      });
    }
    case InvolutionKind::Custom:
      fail("custom involution needs an explicit map");
  }
  fail("unknown involution kind");
}

inline GroupInvolution
make_custom_involution(const FiniteGroup& g,
                       const std::function<Element(const Element&)>& map) {
  return GroupInvolution(g, InvolutionKind::Custom, map);
}

}  // namespace heis
