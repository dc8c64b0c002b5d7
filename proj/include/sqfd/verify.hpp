#pragma once

// Exact instance checks of the identity and inequality families for the path
// and cycle ideals, cross-validation of the closed forms against enumeration,
// and the parameter sweep that aggregates them into a report.
//
// Check ids (one per family of statements):
//   path.identity          alternating beta-sum of S/I equals its inclusion-exclusion expansion, k <= d
//   path.beta-nonneg       beta_k^d(S/I) >= 0 with d = phi(n,m), k <= d
//   path.ideal-upper       beta_k^{d+1}(S/I) <= binom(n-d+k-2, k), k <= d+1
//   path-m2.*              the same three for m = 2 written with ordinary binomials, d = ceil(n/3)
//   cycle.d                n - floor(n/(m+1)) - ceil(n/(m+1)) == phi(n-1,m)
//   cycle.quotient-beta-nonneg   beta^d(S/J) >= 0, k <= d
//   cycle.rel-beta-nonneg        beta^{d+m-1}(J/I) >= 0, k <= d+m-1
//   cycle.ideal-upper            beta^{d+1}(S/J) <= binom(n-d+k-2, k), k <= d+1
//   cycle-m2.*             the m = 2 forms with ordinary binomials
//   ext-binom.*, chu-vandermonde, beta.*, bijection.*   exact identities
//   oracle.<family>        closed form == enumeration
//   qdepth.<family>[.i]    qdepth >= known sdepth lower bound

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "sqfd/extbinom.hpp"
#include "sqfd/hilbert.hpp"
#include "sqfd/ideals.hpp"
#include "sqfd/integer.hpp"

namespace sqfd {

enum class Relation { eq, ge, le };

inline std::string_view symbol(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
    case Relation::le: return "<=";
  }
  return "?";
}

/// Parameters of one check instance; -1 marks an unused slot.
struct CheckParams {
  int n = -1;
  int m = -1;
  int k = -1;
  int d = -1;
  std::optional<Variant> variant;

  [[nodiscard]] auto key() const {
    return std::make_tuple(n, m, k, d, variant ? static_cast<int>(*variant) : -1);
  }
};

struct CheckResult {
  std::string id;
  CheckParams params;
  Integer lhs;
  Integer rhs;
  Relation relation = Relation::eq;
  bool holds = false;
};

inline CheckResult make_check(std::string id, CheckParams params, Integer lhs, Relation rel, Integer rhs) {
  bool holds = false;
  switch (rel) {
    case Relation::eq: holds = lhs == rhs; break;
    case Relation::ge: holds = lhs >= rhs; break;
    case Relation::le: holds = lhs <= rhs; break;
  }
  return {std::move(id), params, std::move(lhs), std::move(rhs), rel, holds};
}

/// A printed formula that disagrees with the reference value (enumeration,
/// corrected formula, or the inequality it was supposed to satisfy).
struct Discrepancy {
  std::string kind;
  std::string id;
  CheckParams params;
  Integer printed;
  Integer reference;
  std::string note;
};

/// Results plus non-blocking findings from one check routine.
struct CheckBatch {
  std::vector<CheckResult> results;
  std::vector<Discrepancy> discrepancies;

  void append(CheckBatch other) {
    std::move(other.results.begin(), other.results.end(), std::back_inserter(results));
    std::move(other.discrepancies.begin(), other.discrepancies.end(), std::back_inserter(discrepancies));
  }
  void append(std::vector<CheckResult> other) { std::move(other.begin(), other.end(), std::back_inserter(results)); }
};

namespace detail {

// sum_{j=j0}^{k} (-1)^{k-j} binom(D-j, k-j) f(j)
template <class F>
Integer alt_sum(std::int64_t D, std::int64_t k, F&& f, std::int64_t j0 = 0) {
  Integer sum = 0;
  for (std::int64_t j = std::max<std::int64_t>(j0, 0); j <= k; ++j) {
    Integer term = binom(D - j, k - j) * f(j);
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

inline std::vector<Integer> alpha_values(QuotientKind kind, int n, int m, Variant v = Variant::corrected) {
  return alpha_vector(kind, n, m, v).values;
}

inline Integer at_or_zero(const std::vector<Integer>& v, std::int64_t j) {
  return (j >= 0 && j < static_cast<std::int64_t>(v.size())) ? v[static_cast<std::size_t>(j)] : Integer(0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Path family

/// With d = phi(n, m): the inclusion-exclusion identity and the beta
/// nonnegativity for k <= d, and the ideal upper bound for k <= d + 1.
inline std::vector<CheckResult> check_path(int n, int m) {
  static_cast<void>(PathFamily(n, m));
  const int d = phi(n, m);
  const auto a = detail::alpha_values(QuotientKind::path_quotient, n, m);
  const auto alpha_at = [&](std::int64_t j) { return detail::at_or_zero(a, j); };
  std::vector<CheckResult> out;
  for (int k = 0; k <= d; ++k) {
    const Integer lhs = detail::alt_sum(d, k, alpha_at);
    Integer rhs = 0;
    for (int l = 0; m * l <= k; ++l) {
      Integer inner = detail::alt_sum(
          d, k, [&](std::int64_t j) { return binom(n - j + 1, l) * binom(n - m * l, j - m * l); }, m * l);
      if (l % 2 == 0)
        rhs += inner;
      else
        rhs -= inner;
    }
    out.push_back(make_check("path.identity", {n, m, k, d, {}}, lhs, Relation::eq, rhs));
    out.push_back(make_check("path.beta-nonneg", {n, m, k, d, {}}, beta_value(a, d, k), Relation::ge, 0));
  }
  for (int k = 0; k <= d + 1; ++k)
    out.push_back(make_check("path.ideal-upper", {n, m, k, d + 1, {}}, beta_value(a, d + 1, k), Relation::le,
                             binom(n - d + k - 2, k)));
  return out;
}

/// m = 2 specialisation with d = ceil(n/3) and alpha_j = binom(n-j+1, j).
inline std::vector<CheckResult> check_path_m2(int n) {
  if (n < 2) throw std::invalid_argument("m = 2 path checks require n >= 2");
  const int d = static_cast<int>(ceil_div(n, 3));
  const auto a = [&](std::int64_t j) { return binom(n - j + 1, j); };
  std::vector<CheckResult> out;
  out.push_back(make_check("path-m2.d", {n, 2, -1, d, {}}, d, Relation::eq, phi(n, 2)));
  for (int k = 0; k <= d; ++k) {
    Integer rhs = 0;
    for (int l = 0; 2 * l <= k; ++l) {
      Integer inner = detail::alt_sum(
          d, k, [&](std::int64_t j) { return binom(n - j + 1, l) * binom(n - 2 * l, j - 2 * l); }, 2 * l);
      if (l % 2 == 0)
        rhs += inner;
      else
        rhs -= inner;
    }
    const Integer lhs = detail::alt_sum(d, k, a);
    out.push_back(make_check("path-m2.identity", {n, 2, k, d, {}}, lhs, Relation::eq, rhs));
    out.push_back(make_check("path-m2.beta-nonneg", {n, 2, k, d, {}}, lhs, Relation::ge, 0));
  }
  for (int k = 0; k <= d + 1; ++k)
    out.push_back(make_check("path-m2.ideal-upper", {n, 2, k, d + 1, {}}, detail::alt_sum(d + 1, k, a), Relation::le,
                             binom(2 * n / 3 + k - 2, k)));
  return out;
}

// ---------------------------------------------------------------------------
// Cycle family

/// With d = n - floor(n/(m+1)) - ceil(n/(m+1)) and the chosen alpha variant:
/// beta^d(S/J) >= 0, beta^{d+m-1}(J/I) >= 0, and the J upper bound at d + 1.
inline std::vector<CheckResult> check_cycle(int n, int m, Variant variant = Variant::corrected) {
  static_cast<void>(CycleFamily(n, m));
  const int d = static_cast<int>(n - floor_div(n, m + 1) - ceil_div(n, m + 1));
  const auto q = detail::alpha_values(QuotientKind::cycle_quotient, n, m, variant);
  const auto r = detail::alpha_values(QuotientKind::cycle_rel, n, m, variant);
  std::vector<CheckResult> out;
  out.push_back(make_check("cycle.d", {n, m, -1, d, variant}, d, Relation::eq, phi(n - 1, m)));
  for (int k = 0; k <= d; ++k)
    out.push_back(make_check("cycle.quotient-beta-nonneg", {n, m, k, d, variant}, beta_value(q, d, k), Relation::ge, 0));
  for (int k = 0; k <= d + m - 1; ++k)
    out.push_back(
        make_check("cycle.rel-beta-nonneg", {n, m, k, d + m - 1, variant}, beta_value(r, d + m - 1, k), Relation::ge, 0));
  for (int k = 0; k <= d + 1; ++k)
    out.push_back(make_check("cycle.ideal-upper", {n, m, k, d + 1, variant}, beta_value(q, d + 1, k), Relation::le,
                             binom(n - d + k - 2, k)));
  return out;
}

/// m = 2 forms, evaluated exactly as written with ordinary binomials; the
/// J/I term there is binom(n-j+1, j-2).
inline std::vector<CheckResult> check_cycle_m2(int n) {
  if (n < 3) throw std::invalid_argument("m = 2 cycle checks require n >= 3");
  const int d1 = static_cast<int>(ceil_div(n - 1, 3));
  const int d2 = static_cast<int>(ceil_div(n + 2, 3));
  const auto quot = [&](std::int64_t j) { return binom(n - j + 1, j); };
  const auto rel = [&](std::int64_t j) { return binom(n - j + 1, j - 2); };
  std::vector<CheckResult> out;
  out.push_back(make_check("cycle-m2.d", {n, 2, -1, d1, {}}, d1, Relation::eq, phi(n - 1, 2)));
  out.push_back(make_check("cycle-m2.d-rel", {n, 2, -1, d2, {}}, d2, Relation::eq, phi(n - 1, 2) + 1));
  for (int k = 0; k <= d1; ++k)
    out.push_back(make_check("cycle-m2.quotient-vs-rel", {n, 2, k, d1, {}}, detail::alt_sum(d1, k, quot), Relation::ge,
                             detail::alt_sum(d1, k, rel, 2)));
  for (int k = 2; k <= d2; ++k)
    out.push_back(
        make_check("cycle-m2.rel-beta-nonneg", {n, 2, k, d2, {}}, detail::alt_sum(d2, k, rel, 2), Relation::ge, 0));
  for (int k = 0; k <= d2; ++k) {
    const Integer lhs = binom((2 * n + 1) / 3 + k - 2, k) - detail::alt_sum(d2, k, quot);
    out.push_back(make_check("cycle-m2.ideal-upper", {n, 2, k, d2, {}}, lhs, Relation::ge, detail::alt_sum(d2, k, rel, 2)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

/// Row-level properties of (1 + ... + t^{m-1})^N: inclusion-exclusion,
/// one-step recurrence, palindromic symmetry, and the row sum m^N.
inline std::vector<CheckResult> check_ext_binom_row(int N, int m) {
  std::vector<CheckResult> out;
  const auto row = coeff_row(N, m);
  const std::int64_t top = static_cast<std::int64_t>(N) * (m - 1);
  Integer total = 0;
  for (std::int64_t k = 0; k <= top; ++k) {
    const CheckParams p{N, m, static_cast<int>(k), -1, {}};
    const Integer v = row->at(k);
    total += v;
    out.push_back(make_check("ext-binom.ie-general", p, v, Relation::eq, ext_binom_ie(N, m, k)));
    out.push_back(make_check("ext-binom.symmetry", p, v, Relation::eq, row->at(top - k)));
    if (N >= 1) {
      Integer sum = 0;
      for (int i = 0; i < m; ++i) sum += ext_binom(N - 1, m, k - i);
      out.push_back(make_check("ext-binom.recurrence", p, v, Relation::eq, sum));
    }
  }
  Integer power = 1;
  for (int i = 0; i < N; ++i) power *= m;
  out.push_back(make_check("ext-binom.row-sum", {N, m, -1, -1, {}}, total, Relation::eq, power));
  return out;
}

/// Both sides of the alternating binomial-row identity for 0 <= k <= d <= n.
inline std::vector<CheckResult> check_chuv(int n) {
  std::vector<CheckResult> out;
  for (int d = 0; d <= n; ++d)
    for (int k = 0; k <= d; ++k) {
      auto [lhs, rhs] = chu_vandermonde(n, d, k);
      out.push_back(make_check("chu-vandermonde", {n, -1, k, d, {}}, lhs, Relation::eq, rhs));
    }
  return out;
}

struct IdentityOptions {
  bool include_chuv = true;
  int roundtrip_n_max = 18;
  int bijection_n_max = 14;
};

/// Exact identities at (n, m): the inclusion-exclusion formula, the
/// recurrence in coefficient and level-count form, Chu-Vandermonde, the
/// beta/alpha roundtrip and incremental form for every family alpha, and the
/// sequence bijection.
inline std::vector<CheckResult> check_identities(int n, int m, const IdentityOptions& opts = {}) {
  static_cast<void>(PathFamily(n, m));
  std::vector<CheckResult> out;

  for (int k = 0; k <= n; ++k) {
    Integer rhs = 0;
    for (int l = 0; m * l <= k; ++l) {
      Integer term = binom(n - k + 1, l) * binom(n - m * l, k - m * l);
      if (l % 2 == 0)
        rhs += term;
      else
        rhs -= term;
    }
    out.push_back(make_check("ext-binom.inclusion-exclusion", {n, m, k, -1, {}}, alpha_path_quotient(n, m, k),
                             Relation::eq, rhs));

    const int N = n - k + 1;
    Integer sum = 0;
    for (int i = 0; i < m; ++i) sum += ext_binom(N - 1, m, k - i);
    out.push_back(make_check("ext-binom.recurrence", {N, m, k, -1, {}}, ext_binom(N, m, k), Relation::eq, sum));
  }

  // Level-count form: alpha_k(S/I_{n,m}) = sum_{i<m} alpha_{k-i}(S_{n-1-i}/I_{n-1-i,m}).
  if (n >= 2 * m)
    for (int k = m; k <= n; ++k) {
      Integer sum = 0;
      for (int i = 0; i < m; ++i) sum += alpha_path_quotient(n - 1 - i, m, k - i);
      out.push_back(make_check("ext-binom.recurrence-alpha", {n, m, k, -1, {}}, alpha_path_quotient(n, m, k),
                               Relation::eq, sum));
    }

  if (opts.include_chuv) {
    auto c = check_chuv(n);
    std::move(c.begin(), c.end(), std::back_inserter(out));
  }

  if (n <= opts.roundtrip_n_max) {
    std::vector<QuotientKind> kinds{QuotientKind::path_quotient, QuotientKind::path_ideal};
    if (n > m && m >= 2)
      kinds.insert(kinds.end(), {QuotientKind::cycle_quotient, QuotientKind::cycle_ideal, QuotientKind::cycle_rel});
    for (auto kind : kinds) {
      const auto alpha = alpha_vector(kind, n, m);
      const std::string fam(name(kind));
      for (int d = 0; d <= n; ++d) {
        const auto beta = beta_from_alpha(alpha, d);
        const auto inc = beta_incremental(alpha, d);
        const auto back = alpha_from_beta(beta);
        for (int k = 0; k <= d; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          out.push_back(make_check("beta.roundtrip." + fam, {n, m, k, d, {}}, back[uk], Relation::eq, alpha.values[uk]));
          out.push_back(
              make_check("beta.incremental." + fam, {n, m, k, d, {}}, inc.values[uk], Relation::eq, beta.values[uk]));
        }
      }
    }
  }

  if (n <= opts.bijection_n_max) {
    const PathFamily fam(n, m);
    for (int k = 0; k <= n; ++k) {
      std::int64_t sequences = 0, broken = 0;
      for_each_run_sequence(n, m, k, [&](const RunSequence& a) {
        ++sequences;
        const auto u = seq_to_monomial(a);
        if (static_cast<int>(u.size()) != k || in_path_ideal(u, fam) || !(monomial_to_seq(u, fam) == a)) ++broken;
      });
      // subsets of size k outside I map back to themselves
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        if (std::popcount(c) != k) continue;
        const auto A = MonomialSet::from_mask(c);
        if (in_path_ideal(A, fam)) continue;
        if (!(seq_to_monomial(monomial_to_seq(A, fam)) == A)) ++broken;
      }
      out.push_back(
          make_check("bijection.count", {n, m, k, -1, {}}, sequences, Relation::eq, alpha_path_quotient(n, m, k)));
      out.push_back(make_check("bijection.roundtrip", {n, m, k, -1, {}}, broken, Relation::eq, 0));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

/// Closed form (corrected variant) against enumeration for every family
/// valid at (n, m). Printed-variant mismatches for J/I become discrepancies.
inline CheckBatch check_oracle(int n, int m, int cap = default_oracle_cap, int jobs = 1) {
  static_cast<void>(PathFamily(n, m));
  if (n > cap) throw oracle_cap_exceeded(n, cap);
  CheckBatch out;
  for (auto kind : all_quotient_kinds) {
    if (is_cycle(kind) && !(n > m && m >= 2)) continue;
    const auto oracle = enumerate_alpha(general_spec(kind, n, m), cap, jobs);
    const std::string id = "oracle." + std::string(name(kind));
    for (int k = 0; k <= n; ++k) {
      const auto& truth = oracle.values[static_cast<std::size_t>(k)];
      out.results.push_back(make_check(id, {n, m, k, -1, Variant::corrected}, alpha(kind, n, m, k), Relation::eq, truth));
      if (kind == QuotientKind::cycle_rel) {
        Integer printed = alpha_cycle_rel(n, m, k, Variant::printed);
        if (printed != truth)
          out.discrepancies.push_back({"printed-vs-oracle", id, {n, m, k, -1, Variant::printed}, printed, truth,
                                       "printed J/I level count differs from enumeration"});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// qdepth against the known sdepth lower bounds

inline std::vector<CheckResult> check_qdepth_bounds(int n, int m, Variant variant = Variant::corrected) {
  std::vector<CheckResult> out;
  const auto push = [&](const DepthBounds& b, std::optional<Variant> v) {
    const std::string base = "qdepth." + b.family;
    for (std::size_t i = 0; i < b.lower_bounds.size(); ++i) {
      const std::string id = b.lower_bounds.size() == 1 ? base : base + "." + std::to_string(i + 1);
      out.push_back(make_check(id, {n, m, -1, -1, v}, b.qdepth, Relation::ge, b.lower_bounds[i].value));
    }
  };
  const auto path = depth_bounds_path(n, m);
  push(path.quotient, std::nullopt);
  push(path.ideal, std::nullopt);
  if (n > m && m >= 2) {
    const auto cyc = depth_bounds_cycle(n, m, variant);
    push(cyc.quotient, variant);
    push(cyc.rel, variant);
    push(cyc.ideal, variant);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Static findings about the printed formulas, each backed by a computation.

struct ErrataFinding {
  std::string id;
  std::string description;
  std::vector<std::pair<std::string, std::string>> evidence;
  bool confirmed = false;
};

inline std::vector<ErrataFinding> errata_findings(int cap = default_oracle_cap) {
  std::vector<ErrataFinding> out;
  {
    const Integer printed = alpha_cycle_rel(8, 3, 4, Variant::printed);
    const Integer corrected = alpha_cycle_rel(8, 3, 4, Variant::corrected);
    ErrataFinding f{"cycle-rel-exponent",
                    "J/I level count: the middle exponent must be n-k-1 (interior sequence length); "
                    "n-l-k+1 agrees only for l = 2",
                    {{"n", "8"}, {"m", "3"}, {"k", "4"}, {"printed", printed.str()}, {"corrected", corrected.str()}},
                    printed != corrected};
    if (cap >= 8) {
      const auto oracle = enumerate_alpha(general_spec(QuotientKind::cycle_rel, 8, 3), cap);
      f.evidence.emplace_back("oracle", oracle.values[4].str());
      f.confirmed = f.confirmed && oracle.values[4] == corrected;
    }
    out.push_back(std::move(f));
  }
  {
    const MonomialSet u{1, 3, 4, 5};
    const bool in_ideal = in_path_ideal(u, PathFamily(7, 3));
    bool seq_valid = true;
    try {
      RunSequence{7, 3, {1, 3, 0, 0}}.validate();
    } catch (const std::invalid_argument&) {
      seq_valid = false;
    }
    out.push_back({"bijection-second-example",
                   "x1x3x4x5 lies in I_{7,3} and (1,3,0,0) has an entry above m-1 = 2",
                   {{"monomial_in_ideal", in_ideal ? "true" : "false"}, {"sequence_valid", seq_valid ? "true" : "false"}},
                   in_ideal && !seq_valid});
  }
  {
    // {1,2,4,5} with n=5, m=3: runs start at 1 and 4 with lengths 2 and 2.
    const int literal_index = 4 - 2 + 1;
    const auto seq = monomial_to_seq(MonomialSet{1, 2, 4, 5}, PathFamily(5, 3));
    out.push_back({"bijection-inverse-index",
                   "inverse map index must subtract the total length of earlier runs, not the run count",
                   {{"monomial", "{1,2,4,5}"},
                    {"n", "5"},
                    {"m", "3"},
                    {"literal_index", std::to_string(literal_index)},
                    {"sequence_length", std::to_string(seq.entries.size())}},
                   literal_index > static_cast<int>(seq.entries.size())});
  }
  {
    // Reconstruction with beta_k in place of beta_j inside the sum.
    const auto alpha = alpha_vector(QuotientKind::path_quotient, 7, 3);
    const auto beta = beta_from_alpha(alpha, 4);
    const int k = 4;
    Integer literal = 0;
    for (int j = 0; j <= k; ++j) literal += binom(4 - j, k - j) * beta.values[k];
    const auto fixed = alpha_from_beta(beta);
    out.push_back({"reconstruction-subscript",
                   "inverse beta transform needs beta_j inside the sum over j",
                   {{"n", "7"}, {"m", "3"}, {"d", "4"}, {"k", "4"}, {"alpha", alpha.values[4].str()},
                    {"with_beta_k", literal.str()}, {"with_beta_j", fixed[4].str()}},
                   literal != alpha.values[4] && fixed[4] == alpha.values[4]});
  }
  {
    const auto rel = alpha_vector(QuotientKind::cycle_rel, 5, 3);
    const int q = qdepth(rel);
    const int bound = phi(4, 3) + 3 - 1;
    out.push_back({"cycle-rel-lower-bound",
                   "qdepth(J/I) falls below phi(n-1,m)+m-1, so that sdepth/depth lower bound (and the J/I beta "
                   "inequality built on it) fails for m >= 3",
                   {{"n", "5"}, {"m", "3"}, {"qdepth", std::to_string(q)}, {"bound", std::to_string(bound)},
                    {"beta_4^4", beta_value(rel.values, 4, 4).str()}},
                   q < bound});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepOptions {
  int n_min = 1;
  int n_max = 12;
  int m_min = 1;
  int m_max = -1;  // -1: up to n
  Variant variant = Variant::corrected;
  int oracle_n_max = 18;
  int oracle_cap = default_oracle_cap;
  int jobs = 1;
  bool identities = true;
  bool theorems = true;
  bool oracle = true;
  bool bounds = true;
};

struct CheckTotals {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
};

struct SweepReport {
  SweepOptions options;
  std::vector<CheckResult> results;
  std::vector<CheckResult> failures;
  std::vector<Discrepancy> discrepancies;
  std::map<std::string, CheckTotals> totals;
  std::vector<ErrataFinding> errata;
  // printed vs corrected J/I level counts over every cycle point of the grid
  std::int64_t variant_compared = 0;
  std::int64_t variant_differ = 0;
  std::int64_t variant_m2_compared = 0;
  std::int64_t variant_m2_differ = 0;
  // qdepth(S/I_{n,m}) against phi(n,m)
  std::int64_t qdepth_phi_equal = 0;
  std::vector<std::tuple<int, int, Integer, Integer>> qdepth_phi_gaps;  // n, m, qdepth, phi
  double elapsed_ms = 0;

  [[nodiscard]] std::int64_t pass_count() const { return static_cast<std::int64_t>(results.size() - failures.size()); }
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Report order: (check id, n, m, k, d, variant).
inline bool result_less(const CheckResult& a, const CheckResult& b) {
  return std::make_tuple(a.id, a.params.key()) < std::make_tuple(b.id, b.params.key());
}

inline bool discrepancy_less(const Discrepancy& a, const Discrepancy& b) {
  return std::make_tuple(a.kind, a.id, a.params.key()) < std::make_tuple(b.kind, b.id, b.params.key());
}

/// Runs every applicable check over the (n, m) grid. Work units are grid
/// points (plus one Chu-Vandermonde unit per n); they may run on `jobs`
/// threads, and the output is sorted so it does not depend on scheduling.
inline SweepReport sweep(const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  struct Unit {
    int n;
    int m;  // 0: per-n unit
  };
  std::vector<Unit> units;
  for (int n = std::max(1, opts.n_min); n <= opts.n_max; ++n) {
    bool any = false;
    const int m_hi = opts.m_max < 0 ? n : std::min(n, opts.m_max);
    for (int m = std::max(1, opts.m_min); m <= m_hi; ++m) {
      units.push_back({n, m});
      any = true;
    }
    if (any && opts.identities) units.push_back({n, 0});
  }
  if (units.empty()) throw std::invalid_argument("sweep: parameter grid is empty");

  struct UnitOut {
    CheckBatch batch;
    std::int64_t compared = 0, differ = 0;
  };
  std::vector<UnitOut> outs(units.size());

  const auto run_unit = [&](const Unit& u, UnitOut& o) {
    const int n = u.n, m = u.m;
    if (m == 0) {
      o.batch.append(check_chuv(n));
      return;
    }
    if (opts.identities) o.batch.append(check_identities(n, m, {.include_chuv = false}));
    if (opts.theorems) {
      o.batch.append(check_path(n, m));
      if (m == 2) o.batch.append(check_path_m2(n));
      if (m == 2 && n >= 3) o.batch.append(check_cycle_m2(n));
    }
    const bool cycle = n > m && m >= 2;
    if (cycle) {
      if (opts.theorems) {
        o.batch.append(check_cycle(n, m, opts.variant));
        const Variant other = opts.variant == Variant::corrected ? Variant::printed : Variant::corrected;
        if (other == Variant::printed)
          for (auto& r : check_cycle(n, m, Variant::printed))
            if (!r.holds)
              o.batch.discrepancies.push_back({"printed-inequality-fails", r.id, r.params, r.lhs, r.rhs,
                                               "fails with the printed J/I level count (" + std::string(symbol(r.relation)) +
                                                   " expected)"});
      }
      for (int k = 0; k <= n; ++k) {
        const Integer printed = alpha_cycle_rel(n, m, k, Variant::printed);
        const Integer corrected = alpha_cycle_rel(n, m, k, Variant::corrected);
        ++o.compared;
        if (printed != corrected) {
          ++o.differ;
          o.batch.discrepancies.push_back({"printed-vs-corrected", "alpha.cycle-rel", {n, m, k, -1, Variant::printed},
                                           printed, corrected, "printed and corrected J/I level counts differ"});
        }
      }
    }
    if (opts.bounds) o.batch.append(check_qdepth_bounds(n, m, opts.variant));
    if (opts.oracle && n <= std::min(opts.oracle_cap, opts.oracle_n_max)) o.batch.append(check_oracle(n, m, opts.oracle_cap));
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < units.size(); ++i) run_unit(units[i], outs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
          try {
            run_unit(units[i], outs[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  SweepReport rep;
  rep.options = opts;
  for (std::size_t i = 0; i < units.size(); ++i) {
    rep.results.insert(rep.results.end(), std::make_move_iterator(outs[i].batch.results.begin()),
                       std::make_move_iterator(outs[i].batch.results.end()));
    rep.discrepancies.insert(rep.discrepancies.end(), std::make_move_iterator(outs[i].batch.discrepancies.begin()),
                             std::make_move_iterator(outs[i].batch.discrepancies.end()));
    rep.variant_compared += outs[i].compared;
    rep.variant_differ += outs[i].differ;
    if (units[i].m == 2) {
      rep.variant_m2_compared += outs[i].compared;
      rep.variant_m2_differ += outs[i].differ;
    }
  }
  std::stable_sort(rep.results.begin(), rep.results.end(), result_less);
  std::stable_sort(rep.discrepancies.begin(), rep.discrepancies.end(), discrepancy_less);
  for (const auto& r : rep.results) {
    auto& t = rep.totals[r.id];
    if (r.holds)
      ++t.pass;
    else {
      ++t.fail;
      rep.failures.push_back(r);
    }
    if (r.id == "qdepth.path-quotient") {
      if (r.lhs == r.rhs)
        ++rep.qdepth_phi_equal;
      else
        rep.qdepth_phi_gaps.emplace_back(r.params.n, r.params.m, r.lhs, r.rhs);
    }
  }
  rep.errata = errata_findings(opts.oracle_cap);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sqfd
