// Exact orthogonality checks over the full character table.
//
// Character values are algebraic integers, so rows fit in dense int64
// coefficient vectors over the powers of zeta_N; products reduce once per
// accumulated sum. Bounds: coefficients are at most the degree (<= 15 here),
// class sizes at most |G| <= 3375, so every intermediate stays far below the
// int64 range.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"

namespace heis {
namespace detail {

inline std::vector<std::int64_t> dense_int_coeffs(const Cyclotomic& v, std::int64_t n) {
  std::vector<std::int64_t> out(std::size_t(n), 0);
  for (const auto& [k, q] : v.coeffs()) {
    if (denominator(q) != 1)
      fail("value is not an algebraic integer");
    out[std::size_t(k)] = std::int64_t(numerator(q));
  }
  return out;
}

inline void reduce_dense(std::vector<std::int64_t>& v, std::int64_t n) {
  for (std::int64_t p : prime_factors(n)) {
    std::int64_t step = n / p;
    for (std::int64_t k = 0; k < n; ++k) {
      if (k % p != p - 1 || v[std::size_t(k)] == 0)
        continue;
      std::int64_t q = v[std::size_t(k)];
      v[std::size_t(k)] = 0;
      for (std::int64_t j = 1; j < p; ++j)
        v[std::size_t((k + j * step) % n)] -= q;
    }
  }
}

}  // namespace detail

struct OrthogonalityReport {
  bool rows_ok = false;
  bool columns_ok = false;
  bool ok() const { return rows_ok && columns_ok; }
};

// First (row) and second (column) orthogonality relations at exact equality:
//   sum_c |c| chi_i(c) conj(chi_j(c)) = delta_ij |G|
//   sum_i chi_i(c) conj(chi_i(d))    = delta_cd |G| / |c|
inline OrthogonalityReport check_orthogonality(const FiniteGroup& g,
                                               const std::vector<ClassFunction>& irreps) {
  const ClassIndex& ci = *g.classes();
  std::int64_t n = ci.modulus;
  std::size_t nc = ci.count();
  std::size_t ni = irreps.size();

  // values[i][c] and conjugates, dense; support lists per irrep and per class.
  std::vector<std::vector<std::vector<std::int64_t>>> val(ni), cval(ni);
  std::vector<std::vector<std::int32_t>> row_support(ni), col_support(nc);
  for (std::size_t i = 0; i < ni; ++i) {
    if (!irreps[i].domain->same_domain(ci))
      fail("character table domain mismatch");
    val[i].resize(nc);
    cval[i].resize(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      val[i][c] = detail::dense_int_coeffs(irreps[i].at_class(c), n);
      cval[i][c] = detail::dense_int_coeffs(irreps[i].at_class(c).conj(), n);
      if (!irreps[i].at_class(c).is_zero()) {
        row_support[i].push_back(std::int32_t(c));
        col_support[c].push_back(std::int32_t(i));
      }
    }
  }

  auto accumulate = [n](std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& x,
                        const std::vector<std::int64_t>& y, std::int64_t weight) {
    for (std::int64_t kx = 0; kx < n; ++kx) {
      if (x[std::size_t(kx)] == 0)
        continue;
      std::int64_t w = x[std::size_t(kx)] * weight;
      for (std::int64_t ky = 0; ky < n; ++ky)
        if (y[std::size_t(ky)] != 0)
          acc[std::size_t((kx + ky) % n)] += w * y[std::size_t(ky)];
    }
  };

  auto is_const = [n](std::vector<std::int64_t> acc, std::int64_t expected) {
    detail::reduce_dense(acc, n);
    if (acc[0] != expected)
      return false;
    for (std::int64_t k = 1; k < n; ++k)
      if (acc[std::size_t(k)] != 0)
        return false;
    return true;
  };

  OrthogonalityReport report;
  report.rows_ok = true;
  for (std::size_t i = 0; i < ni && report.rows_ok; ++i)
    for (std::size_t j = i; j < ni && report.rows_ok; ++j) {
      std::vector<std::int64_t> acc(std::size_t(n), 0);
      for (std::int32_t c : row_support[i])
        accumulate(acc, val[i][std::size_t(c)], cval[j][std::size_t(c)],
                   ci.sizes[std::size_t(c)]);
      if (!is_const(std::move(acc), i == j ? ci.order : 0))
        report.rows_ok = false;
    }

  report.columns_ok = true;
  for (std::size_t c = 0; c < nc && report.columns_ok; ++c)
    for (std::size_t d = c; d < nc && report.columns_ok; ++d) {
      std::vector<std::int64_t> acc(std::size_t(n), 0);
      for (std::int32_t i : col_support[c])
        accumulate(acc, val[std::size_t(i)][c], cval[std::size_t(i)][d], 1);
      if (!is_const(std::move(acc), c == d ? ci.order / ci.sizes[c] : 0))
        report.columns_ok = false;
    }
  return report;
}

inline std::map<std::int64_t, std::int64_t>
degree_histogram(const std::vector<ClassFunction>& irreps) {
  std::map<std::int64_t, std::int64_t> h;
  for (const ClassFunction& chi : irreps)
    ++h[chi.degree()];
  return h;
}

}  // namespace heis
