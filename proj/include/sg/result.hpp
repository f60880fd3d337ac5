#ifndef SG_RESULT_HPP
#define SG_RESULT_HPP

#include "sg/verify.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace sg {

enum class Method { exact, closed_form, lower_bound, upper_bound, construction };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::exact: return "exact";
    case Method::closed_form: return "closed_form";
    case Method::lower_bound: return "lower_bound";
    case Method::upper_bound: return "upper_bound";
    case Method::construction: return "construction";
  }
  return "unknown";
}

enum class CaseLabel {
  case1,
  case2,
  case3,
  otherwise,
  star,
  two_side,
  balanced_square,
  balanced_nonsquare,
  crown_square,
  crown_nonsquare,
};

constexpr std::string_view to_string(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::case1: return "case1";
    case CaseLabel::case2: return "case2";
    case CaseLabel::case3: return "case3";
    case CaseLabel::otherwise: return "otherwise";
    case CaseLabel::star: return "star";
    case CaseLabel::two_side: return "two_side";
    case CaseLabel::balanced_square: return "balanced_square";
    case CaseLabel::balanced_nonsquare: return "balanced_nonsquare";
    case CaseLabel::crown_square: return "crown_square";
    case CaseLabel::crown_nonsquare: return "crown_nonsquare";
  }
  return "unknown";
}

/// Intermediate values behind a closed-form evaluation. The *_at fields are
/// f, g, F, G, s evaluated at k_star.
struct FormulaTrace {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<CaseLabel> case_label;  ///< empty for the direct minimisation
  std::optional<std::int64_t> k_star;
  std::optional<std::int64_t> ceil_x_star;
  std::optional<std::int64_t> f_at;
  std::optional<std::int64_t> g_at;
  std::optional<std::int64_t> F_at;
  std::optional<std::int64_t> G_at;
  std::optional<std::int64_t> s_at;
};

/// Selected vertex counts on the two sides of a crown graph; p <= q.
struct CrownSplit {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend bool operator==(const CrownSplit&, const CrownSplit&) = default;
};

struct SgResult {
  std::int64_t value = 0;
  Method method = Method::exact;
  std::optional<Witness> witness;
  std::optional<FormulaTrace> trace;
  std::optional<CrownSplit> split;
};

}  // namespace sg

#endif
