#pragma once

// beta-transforms of level counts, Hilbert depth, the path depth formula
// phi(n, m), and the catalogue of known depth/sdepth bounds for the path and
// cycle families.
//
// For a candidate depth d the transform is
//   beta_k^d = sum_{j=0}^{k} (-1)^{k-j} binom(d-j, k-j) alpha_j,   0 <= k <= d,
// and qdepth is the largest d for which every beta_k^d is nonnegative.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqfd/extbinom.hpp"
#include "sqfd/ideals.hpp"
#include "sqfd/integer.hpp"

namespace sqfd {

struct BetaVector {
  int d = 0;
  std::vector<Integer> values;  // beta_0^d .. beta_d^d
};

/// beta_k^d for an arbitrary level-count sequence; entries past the end of
/// `alpha` count as zero, so d may exceed the ambient dimension.
inline Integer beta_value(std::span<const Integer> alpha, std::int64_t d, std::int64_t k) {
  Integer sum = 0;
  for (std::int64_t j = 0; j <= k && j < static_cast<std::int64_t>(alpha.size()); ++j) {
    if (alpha[static_cast<std::size_t>(j)] == 0) continue;
    Integer term = binom(d - j, k - j) * alpha[static_cast<std::size_t>(j)];
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

namespace detail {
inline void require_depth(const AlphaVector& alpha, int d) {
  if (d < 0 || d > alpha.n)
    throw std::out_of_range("candidate depth d=" + std::to_string(d) + " outside 0.." + std::to_string(alpha.n));
}
}  // namespace detail

/// Direct alternating sum.
inline BetaVector beta_from_alpha(const AlphaVector& alpha, int d) {
  detail::require_depth(alpha, d);
  BetaVector out{d, {}};
  out.values.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) out.values.push_back(beta_value(alpha.values, d, k));
  return out;
}

/// Recursive form: beta_k^d = alpha_k - sum_{i<k} binom(d-i, k-i) beta_i^d.
inline BetaVector beta_incremental(const AlphaVector& alpha, int d) {
  detail::require_depth(alpha, d);
  BetaVector out{d, {}};
  out.values.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    Integer b = alpha.at(k);
    for (int i = 0; i < k; ++i) b -= binom(d - i, k - i) * out.values[static_cast<std::size_t>(i)];
    out.values.push_back(std::move(b));
  }
  return out;
}

/// Inverse transform: alpha_k = sum_{j<=k} binom(d-j, k-j) beta_j^d for k <= d.
inline std::vector<Integer> alpha_from_beta(const BetaVector& beta) {
  if (static_cast<int>(beta.values.size()) != beta.d + 1)
    throw std::invalid_argument("alpha_from_beta: beta vector must have d+1 entries");
  std::vector<Integer> out;
  out.reserve(beta.values.size());
  for (int k = 0; k <= beta.d; ++k) {
    Integer a = 0;
    for (int j = 0; j <= k; ++j) a += binom(beta.d - j, k - j) * beta.values[static_cast<std::size_t>(j)];
    out.push_back(std::move(a));
  }
  return out;
}

/// beta rows for every d in 0..n. The top row is summed directly; lower rows
/// follow from binom(d+1-j, k-j) = binom(d-j, k-j) + binom(d-j, k-1-j), i.e.
///   beta_k^d = beta_k^{d+1} + beta_{k-1}^d.
inline std::vector<BetaVector> beta_table(const AlphaVector& alpha) {
  const int n = alpha.n;
  std::vector<BetaVector> rows(static_cast<std::size_t>(n) + 1);
  rows[static_cast<std::size_t>(n)] = beta_from_alpha(alpha, n);
  for (int d = n - 1; d >= 0; --d) {
    const auto& above = rows[static_cast<std::size_t>(d) + 1].values;
    auto& row = rows[static_cast<std::size_t>(d)];
    row.d = d;
    row.values.resize(static_cast<std::size_t>(d) + 1);
    row.values[0] = alpha.at(0);
    for (int k = 1; k <= d; ++k)
      row.values[static_cast<std::size_t>(k)] = above[static_cast<std::size_t>(k)] + row.values[static_cast<std::size_t>(k) - 1];
  }
  return rows;
}

inline bool all_nonnegative(const BetaVector& beta) {
  for (const auto& v : beta.values)
    if (v < 0) return false;
  return true;
}

/// Hilbert depth: max d in 0..n with beta_k^d >= 0 for all k <= d. The scan
/// covers every d; feasibility is not assumed monotone in d.
inline int qdepth(const AlphaVector& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("qdepth: alpha vector is identically zero (J = I)");
  for (const auto& v : alpha.values)
    if (v < 0) throw std::invalid_argument("qdepth: alpha vector has a negative entry");
  const auto rows = beta_table(alpha);
  for (int d = alpha.n; d >= 0; --d)
    if (all_nonnegative(rows[static_cast<std::size_t>(d)])) return d;
  // alpha_0 >= 0 makes d = 0 feasible, so this is unreachable.
  throw std::logic_error("qdepth: no feasible depth");
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// phi(n, m) = n + 1 - floor((n+1)/(m+1)) - ceil((n+1)/(m+1)), the depth of
/// S/I_{n,m}.
inline int phi(int n, int m) {
  if (!(n >= m && m >= 1))
    throw std::invalid_argument("phi requires n >= m >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  return static_cast<int>(n + 1 - floor_div(n + 1, m + 1) - ceil_div(n + 1, m + 1));
}

/// Both sides of sum_{j<=k} (-1)^{k-j} binom(d-j, k-j) binom(n, j) = binom(n-d+k-1, k).
inline std::pair<Integer, Integer> chu_vandermonde(int n, int d, int k) {
  if (!(0 <= k && k <= d && d <= n))
    throw std::invalid_argument("chu_vandermonde requires 0 <= k <= d <= n");
  Integer lhs = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binom(d - j, k - j) * binom(n, j);
    if ((k - j) % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  return {lhs, binom(n - d + k - 1, k)};
}

// ---------------------------------------------------------------------------
// Bound catalogue. The depth values are known results for these families and
// are stored, not recomputed.

struct NamedBound {
  std::string label;
  int value;
};

struct DepthBounds {
  std::string family;
  int phi = 0;
  int depth_lower = 0;
  std::optional<int> depth_upper;  // equal to depth_lower when depth is exact
  int sdepth_lower = 0;
  std::optional<int> sdepth_upper;
  int qdepth = 0;
  std::vector<NamedBound> lower_bounds;  // every known sdepth lower bound; sdepth_lower is their max

  /// sdepth never exceeds qdepth, so a proven sdepth lower bound must not
  /// exceed the computed qdepth.
  [[nodiscard]] bool consistent() const { return sdepth_lower <= qdepth; }
};

struct PathBounds {
  DepthBounds quotient;  // S/I_{n,m}
  DepthBounds ideal;     // I_{n,m}
};

struct CycleBounds {
  DepthBounds quotient;  // S/J_{n,m}
  DepthBounds rel;       // J_{n,m}/I_{n,m}
  DepthBounds ideal;     // J_{n,m}
};

inline PathBounds depth_bounds_path(int n, int m) {
  static_cast<void>(PathFamily(n, m));
  const int f = phi(n, m);
  PathBounds out;
  out.quotient = {"path-quotient", f, f, f, f, f, qdepth(alpha_vector(QuotientKind::path_quotient, n, m)),
                  {{"sdepth=depth=phi(n,m)", f}}};
  out.ideal = {"path-ideal", f, f + 1, f + 1, f + 1, std::nullopt,
               qdepth(alpha_vector(QuotientKind::path_ideal, n, m)), {{"depth=phi(n,m)+1", f + 1}}};
  return out;
}

inline CycleBounds depth_bounds_cycle(int n, int m, Variant variant = Variant::corrected) {
  static_cast<void>(CycleFamily(n, m));
  const int f = phi(n, m);
  const int f1 = phi(n - 1, m);
  CycleBounds out;
  out.quotient = {"cycle-quotient", f1, f1, f1, f1, f,
                  qdepth(alpha_vector(QuotientKind::cycle_quotient, n, m, variant)), {{"depth=phi(n-1,m)", f1}}};
  out.rel = {"cycle-rel", f1, f1 + m - 1, std::nullopt, f1 + m - 1, std::nullopt,
             qdepth(alpha_vector(QuotientKind::cycle_rel, n, m, variant)), {{"depth>=phi(n-1,m)+m-1", f1 + m - 1}}};

  std::vector<NamedBound> ideal_bounds{{"min(phi(n-1,m)+m-1,phi(n,m)+1)", std::min(f1 + m - 1, f + 1)},
                                       {"depth=phi(n-1,m)+1", f1 + 1}};
  if (m >= 3) ideal_bounds.push_back({"phi(n,m)+1", f + 1});
  int best = 0;
  for (const auto& b : ideal_bounds) best = std::max(best, b.value);
  out.ideal = {"cycle-ideal", f1, f1 + 1, f1 + 1, best, std::nullopt,
               qdepth(alpha_vector(QuotientKind::cycle_ideal, n, m, variant)), std::move(ideal_bounds)};
  return out;
}

}  // namespace sqfd
