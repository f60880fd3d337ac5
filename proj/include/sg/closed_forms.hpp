#ifndef SG_CLOSED_FORMS_HPP
#define SG_CLOSED_FORMS_HPP

/**
 * Closed-form strong geodetic numbers and bounds:
 *
 *   complete bipartite K_{n,m}  min over k of s(k) = max(F(k), G(k)), and the
 *                               four-case formula that evaluates it directly;
 *   balanced K_{n,n}, n >= 6    2*ceil((-1 + sqrt(8n+1))/2), minus one when
 *                               8n - 7 is a perfect square;
 *   crown S_n^0                 split sizes and value from 8n + 1;
 *   hypercube Q_n               lower bound ceil(2^{(n+1)/2} / sqrt(n-1)) and
 *                               the P u Q upper bounds.
 *
 * Everything is integer arithmetic; square roots only appear through
 * intmath::isqrt.
 */

#include "sg/error.hpp"
#include "sg/int_math.hpp"
#include "sg/result.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace sg {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::OutOfRange, what);
}

}  // namespace detail

// ------------------------------------------------------- f, g, F, G, s

/// Smallest q >= 0 with C(q,2) >= n - p. f(n) = 0.
inline std::int64_t f_val(std::int64_t n, std::int64_t p) {
  detail::require(p >= 0 && p <= n, "f_val: need 0 <= p <= n");
  const std::int64_t need = n - p;
  if (need == 0) return 0;
  // q = ceil((1 + sqrt(1 + 8 need)) / 2), then nudged onto the exact answer.
  auto q = static_cast<std::int64_t>(intmath::ceil_sqrt_ratio(1, 1 + 8 * static_cast<intmath::u128>(need), 2));
  while (q > 0 && intmath::binom2(q - 1) >= need) --q;
  while (intmath::binom2(q) < need) ++q;
  return q;
}

/// m - C(p,2); may be negative.
inline std::int64_t g_val(std::int64_t m, std::int64_t p) {
  detail::require(p >= 0, "g_val: need p >= 0");
  return m - intmath::binom2(p);
}

inline std::int64_t big_F(std::int64_t n, std::int64_t k) { return k + f_val(n, k); }

inline std::int64_t big_G(std::int64_t m, std::int64_t k) { return k + g_val(m, k); }

inline std::int64_t s_val(std::int64_t n, std::int64_t m, std::int64_t k) {
  detail::require(k >= 0 && k <= n, "s_val: need 0 <= k <= n");
  return std::max(big_F(n, k), big_G(m, k));
}

namespace detail {

inline void fill_at(FormulaTrace& t, std::int64_t k) {
  t.k_star = k;
  t.f_at = f_val(t.n, k);
  t.g_at = g_val(t.m, k);
  t.F_at = big_F(t.n, k);
  t.G_at = big_G(t.m, k);
  t.s_at = std::max(*t.F_at, *t.G_at);
}

}  // namespace detail

// ------------------------------------------------------- complete bipartite

/// Direct minimisation of s(k) over k in [0, n]. Ties resolve to the largest
/// minimising k.
inline SgResult sg_bipartite_opt(std::int64_t n, std::int64_t m) {
  detail::require(3 <= n && n <= m, "sg_bipartite_opt: need 3 <= n <= m");
  std::int64_t best = s_val(n, m, 0);
  std::int64_t arg = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto s = s_val(n, m, k);
    if (s <= best) {
      best = s;
      arg = k;
    }
  }
  FormulaTrace t;
  t.n = n;
  t.m = m;
  detail::fill_at(t, arg);
  return {best, Method::closed_form, std::nullopt, t, std::nullopt};
}

/// True iff ftilde(k) >= gtilde(k), i.e.
/// (1 + sqrt(1 + 8(n-k))) / 2 >= m - k(k-1)/2, decided exactly.
inline bool f_tilde_reaches_g_tilde(std::int64_t n, std::int64_t m, std::int64_t k) {
  const std::int64_t rhs = 2 * m - k * (k - 1) - 1;  // need sqrt(1 + 8(n-k)) >= rhs
  if (rhs <= 0) return true;
  return 1 + 8 * (n - k) >= rhs * rhs;
}

/// Smallest integer k in [3, n-3] with ftilde(k) >= gtilde(k), i.e. ceil(x*).
inline std::optional<std::int64_t> ceil_x_star(std::int64_t n, std::int64_t m) {
  for (std::int64_t k = 3; k <= n - 3; ++k)
    if (f_tilde_reaches_g_tilde(n, m, k)) return k;
  return std::nullopt;
}

/// Four-case formula, conditions tested in their listed order.
inline SgResult sg_bipartite_closed(std::int64_t n, std::int64_t m) {
  detail::require(3 <= n && n <= m, "sg_bipartite_closed: need 3 <= n <= m");
  using intmath::binom2;
  FormulaTrace t;
  t.n = n;
  t.m = m;
  std::int64_t value = 0;

  if (n - 3 >= binom2(m - 3)) {
    // The listed value is m, but when C(n,2) >= m the set S = X already works
    // (its pairs reach every vertex of Y), so the value is n. Of the finitely
    // many case-1 instances this only changes (4,5).
    t.case_label = CaseLabel::case1;
    value = binom2(n) >= m ? n : m;
    detail::fill_at(t, n);
  } else if (m >= binom2(n)) {
    t.case_label = CaseLabel::case2;
    value = m + n - binom2(n);
    detail::fill_at(t, n);
  } else if (binom2(n) > m && m >= 3 + binom2(n - 3)) {
    t.case_label = CaseLabel::case3;
    value = n;
    detail::fill_at(t, n);
  } else {
    t.case_label = CaseLabel::otherwise;
    const auto c = ceil_x_star(n, m);
    if (!c)
      fail(ErrorCode::AssignmentInfeasible,
           "no sign change of ftilde - gtilde on [3, n-3] for (" + std::to_string(n) + "," +
             std::to_string(m) + ")");
    t.ceil_x_star = *c;
    const auto g_left = big_G(m, *c - 1);
    const auto f_right = big_F(n, *c);
    // Properties the formula relies on; a violation means the routing is wrong.
    if (big_F(n, *c) < big_G(m, *c) || big_G(m, *c - 1) < big_F(n, *c - 1))
      fail(ErrorCode::AssignmentInfeasible, "F/G ordering around ceil(x*) violated");
    value = std::min(g_left, f_right);
    detail::fill_at(t, g_left <= f_right ? *c - 1 : *c);
  }
  return {value, Method::closed_form, std::nullopt, t, std::nullopt};
}

/// K_{n,n} for n >= 6.
inline SgResult sg_balanced(std::int64_t n) {
  detail::require(n >= 6, "sg_balanced: need n >= 6");
  const auto half = intmath::ceil_sqrt_ratio(-1, 8 * static_cast<intmath::u128>(n) + 1, 2);
  const bool square = intmath::is_perfect_square(static_cast<intmath::u128>(8 * n - 7));
  FormulaTrace t;
  t.n = n;
  t.m = n;
  t.case_label = square ? CaseLabel::balanced_square : CaseLabel::balanced_nonsquare;
  return {static_cast<std::int64_t>(2 * half) - (square ? 1 : 0), Method::closed_form, std::nullopt, t,
          std::nullopt};
}

/// Any K_{n,m}; sides are swapped so that n <= m.
inline SgResult sg_complete_bipartite(std::int64_t n, std::int64_t m) {
  detail::require(n >= 1 && m >= 1, "sg_complete_bipartite: need n, m >= 1");
  if (n > m) std::swap(n, m);
  if (n >= 3) return sg_bipartite_closed(n, m);
  FormulaTrace t;
  t.n = n;
  t.m = m;
  std::int64_t value = 0;
  if (n == 1) {
    t.case_label = CaseLabel::star;
    value = m == 1 ? 2 : m;
  } else {
    t.case_label = CaseLabel::two_side;
    value = m == 2 ? 3 : m;
  }
  return {value, Method::closed_form, std::nullopt, t, std::nullopt};
}

// ------------------------------------------------------- crown

inline SgResult sg_crown(std::int64_t n) {
  detail::require(n >= 3, "sg_crown: need n >= 3");
  using intmath::u128;
  const bool square = intmath::is_perfect_square(8 * static_cast<u128>(n) + 1);
  FormulaTrace t;
  t.n = n;
  t.m = n;
  SgResult r;
  r.method = Method::closed_form;
  if (!square) {
    const auto a = static_cast<std::int64_t>(intmath::ceil_sqrt_ratio(-3, 8 * static_cast<u128>(n) + 9, 2));
    t.case_label = CaseLabel::crown_nonsquare;
    r.value = 2 * a;
    r.split = CrownSplit{a, a};
  } else {
    const auto b = static_cast<std::int64_t>(intmath::ceil_sqrt_ratio(-3, 8 * static_cast<u128>(n) + 1, 2));
    t.case_label = CaseLabel::crown_square;
    r.value = 2 * b + 1;
    r.split = CrownSplit{b, b + 1};
  }
  r.trace = t;
  return r;
}

// ------------------------------------------------------- hypercubes

/// ceil(2^{(n+1)/2} / sqrt(n-1)): smallest t with t^2 (n-1) >= 2^{n+1}.
inline std::int64_t hypercube_lower(std::int64_t n) {
  detail::require(n >= 2 && n <= 100, "hypercube_lower: need 2 <= n <= 100");
  using intmath::u128;
  const u128 target = u128{1} << (n + 1);
  const auto den = static_cast<u128>(n - 1);
  u128 t = intmath::isqrt(target / den);
  while (t > 0 && (t - 1) * (t - 1) * den >= target) --t;
  while (t * t * den < target) ++t;
  return static_cast<std::int64_t>(t);
}

/// 2^{n-n0} + 2^{n0-1}.
inline std::int64_t hypercube_basic_bound(std::int64_t n, std::int64_t n0) {
  detail::require(1 <= n0 && n0 <= n && n <= 62, "hypercube_basic_bound: need 1 <= n0 <= n <= 62");
  return static_cast<std::int64_t>(intmath::pow2(static_cast<unsigned>(n - n0)) +
                                    intmath::pow2(static_cast<unsigned>(n0 - 1)));
}

/// min over n0 of the basic bound: 3/2 * 2^{n/2} for even n, 2^{(n+1)/2} for odd.
inline std::int64_t hypercube_upper_basic(std::int64_t n) {
  detail::require(n >= 1 && n <= 62, "hypercube_upper_basic: need 1 <= n <= 62");
  std::int64_t best = hypercube_basic_bound(n, 1);
  for (std::int64_t n0 = 2; n0 <= n; ++n0) best = std::min(best, hypercube_basic_bound(n, n0));
  return best;
}

inline std::int64_t improved_n0(std::int64_t n) { return (n + 2) / 2; }  // ceil((n+1)/2)

/// 2^{n-n0} + 2^{n0-1} - (n0-2)(n0-3).
inline std::int64_t hypercube_improved_bound(std::int64_t n, std::int64_t n0) {
  detail::require(4 <= n0 && n0 <= n && n <= 62, "hypercube_improved_bound: need 4 <= n0 <= n <= 62");
  return hypercube_basic_bound(n, n0) - (n0 - 2) * (n0 - 3);
}

inline std::int64_t hypercube_upper_improved(std::int64_t n) {
  detail::require(n >= 6 && n <= 62, "hypercube_upper_improved: need 6 <= n <= 62");
  return hypercube_improved_bound(n, improved_n0(n));
}

/// sg(Q_n) for the cubes where it is known exactly.
inline std::optional<std::int64_t> small_hypercube_known(std::int64_t n) {
  static constexpr std::int64_t known[] = {1, 2, 3, 4, 5};
  if (n < 0 || n > 4) return std::nullopt;
  return known[n];
}

}  // namespace sg

#endif
