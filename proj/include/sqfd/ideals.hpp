#pragma once

// Squarefree monomials as support sets, the path ideal I_{n,m}, the cycle
// ideal J_{n,m}, closed-form level counts (alpha-vectors) of their quotients,
// the run-sequence bijection, and the brute-force enumeration oracle.
//
// Variables are 1-based throughout the public API: the monomial
// x_{i1} x_{i2} ... is the MonomialSet {i1, i2, ...}. Bit masks used by the
// oracle store variable i in bit i-1.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sqfd/extbinom.hpp"
#include "sqfd/integer.hpp"

namespace sqfd {

/// Support C of a squarefree monomial x_C; kept sorted and duplicate-free.
class MonomialSet {
 public:
  MonomialSet() = default;
  MonomialSet(std::initializer_list<int> vars) : MonomialSet(std::vector<int>(vars)) {}
  explicit MonomialSet(std::vector<int> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
      throw std::invalid_argument("MonomialSet: duplicate variable index");
    if (!vars_.empty() && vars_.front() < 1)
      throw std::invalid_argument("MonomialSet: variable indices are 1-based, got " + std::to_string(vars_.front()));
  }

  static MonomialSet from_mask(std::uint64_t mask) {
    std::vector<int> vars;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1U) vars.push_back(i + 1);
    return MonomialSet(std::move(vars));
  }

  [[nodiscard]] const std::vector<int>& vars() const { return vars_; }
  [[nodiscard]] std::size_t size() const { return vars_.size(); }
  [[nodiscard]] bool empty() const { return vars_.empty(); }
  [[nodiscard]] bool contains(int v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }
  [[nodiscard]] bool within(int n) const { return vars_.empty() || vars_.back() <= n; }

  /// Bit mask with variable i at bit i-1; requires every index <= 64.
  [[nodiscard]] std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : vars_) {
      if (v > 64) throw std::out_of_range("MonomialSet::mask: index exceeds 64");
      m |= std::uint64_t{1} << (v - 1);
    }
    return m;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vars_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<int> vars_;
};

/// Path ideal I_{n,m} = (x_1...x_m, x_2...x_{m+1}, ..., x_{n-m+1}...x_n).
struct PathFamily {
  int n;
  int m;

  PathFamily(int n_, int m_) : n(n_), m(m_) {
    if (!(n >= m && m >= 1))
      throw std::invalid_argument("path family requires n >= m >= 1, got n=" + std::to_string(n) +
                                  " m=" + std::to_string(m));
  }
};

/// Cycle ideal J_{n,m}: I_{n,m} plus the wrap-around products of m
/// cyclically consecutive variables.
struct CycleFamily {
  int n;
  int m;

  CycleFamily(int n_, int m_) : n(n_), m(m_) {
    if (!(n > m && m >= 2))
      throw std::invalid_argument("cycle family requires n > m >= 2, got n=" + std::to_string(n) +
                                  " m=" + std::to_string(m));
  }
};

enum class QuotientKind { path_quotient, path_ideal, cycle_quotient, cycle_ideal, cycle_rel };

inline constexpr QuotientKind all_quotient_kinds[] = {QuotientKind::path_quotient, QuotientKind::path_ideal,
                                                      QuotientKind::cycle_quotient, QuotientKind::cycle_ideal,
                                                      QuotientKind::cycle_rel};

inline std::string_view name(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::path_quotient: return "path-quotient";
    case QuotientKind::path_ideal: return "path-ideal";
    case QuotientKind::cycle_quotient: return "cycle-quotient";
    case QuotientKind::cycle_ideal: return "cycle-ideal";
    case QuotientKind::cycle_rel: return "cycle-rel";
  }
  return "?";
}

inline QuotientKind parse_quotient_kind(std::string_view s) {
  for (auto kind : all_quotient_kinds)
    if (name(kind) == s) return kind;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

inline bool is_cycle(QuotientKind kind) {
  return kind == QuotientKind::cycle_quotient || kind == QuotientKind::cycle_ideal || kind == QuotientKind::cycle_rel;
}

/// Which reading of the J/I level-count formula to use. `printed` takes the
/// middle exponent as n - l - k + 1; `corrected` uses n - k - 1, the length
/// of the interior run sequence, and is what enumeration confirms.
enum class Variant { printed, corrected };

inline std::string_view name(Variant v) { return v == Variant::printed ? "printed" : "corrected"; }

inline Variant parse_variant(std::string_view s) {
  if (s == "printed") return Variant::printed;
  if (s == "corrected") return Variant::corrected;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

/// Sequence (a_1, ..., a_{n-k+1}) with 0 <= a_i <= m-1 and sum k.
struct RunSequence {
  int n = 0;
  int m = 1;
  std::vector<int> entries;

  [[nodiscard]] int degree() const { return n + 1 - static_cast<int>(entries.size()); }

  void validate() const {
    if (entries.empty() || static_cast<int>(entries.size()) > n + 1)
      throw std::invalid_argument("RunSequence: length must be in 1..n+1");
    int sum = 0;
    for (int a : entries) {
      if (a < 0 || a > m - 1)
        throw std::invalid_argument("RunSequence: entry " + std::to_string(a) + " outside 0.." + std::to_string(m - 1));
      sum += a;
    }
    if (sum != degree())
      throw std::invalid_argument("RunSequence: entries sum to " + std::to_string(sum) + " but length " +
                                  std::to_string(entries.size()) + " requires sum " + std::to_string(degree()));
  }

  friend bool operator==(const RunSequence&, const RunSequence&) = default;
};

/// Level counts alpha_0..alpha_n of a quotient's characteristic poset.
struct AlphaVector {
  int n = 0;
  std::string source;
  std::vector<Integer> values;

  [[nodiscard]] Integer at(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(values.size())) return 0;
    return values[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Integer& v) { return v == 0; });
  }
};

/// Pair I <= J of squarefree monomial ideals given by generators. Empty
/// gens_I encodes I = 0; the single generator {} encodes the unit ideal S.
struct GeneralIdealSpec {
  int n = 0;
  std::vector<MonomialSet> gens_I;
  std::vector<MonomialSet> gens_J;

  void validate() const {
    if (n < 0) throw std::invalid_argument("GeneralIdealSpec: n must be >= 0");
    for (const auto* gens : {&gens_I, &gens_J})
      for (const auto& g : *gens)
        if (!g.within(n))
          throw std::invalid_argument("GeneralIdealSpec: generator " + g.str() + " exceeds n=" + std::to_string(n));
    for (const auto& gi : gens_I) {
      const bool covered = std::any_of(gens_J.begin(), gens_J.end(), [&](const MonomialSet& gj) {
        return std::includes(gi.vars().begin(), gi.vars().end(), gj.vars().begin(), gj.vars().end());
      });
      if (!covered) throw std::invalid_argument("GeneralIdealSpec: I is not contained in J (generator " + gi.str() + ")");
    }
  }
};

// ---------------------------------------------------------------------------
// Membership

inline void require_within(const MonomialSet& A, int n) {
  if (!A.within(n)) throw std::invalid_argument("monomial " + A.str() + " is not supported in [" + std::to_string(n) + "]");
}

/// True iff A contains m consecutive integers i..i+m-1 inside [n].
inline bool in_path_ideal(const MonomialSet& A, const PathFamily& fam) {
  require_within(A, fam.n);
  int run = 0;
  int prev = -1;
  for (int v : A.vars()) {
    run = (v == prev + 1) ? run + 1 : 1;
    if (run >= fam.m) return true;
    prev = v;
  }
  return false;
}

/// True iff A contains m cyclically consecutive residues modulo n.
inline bool in_cycle_ideal(const MonomialSet& A, const CycleFamily& fam) {
  require_within(A, fam.n);
  for (int start = 1; start <= fam.n; ++start) {
    bool all = true;
    for (int t = 0; t < fam.m && all; ++t) all = A.contains((start - 1 + t) % fam.n + 1);
    if (all) return true;
  }
  return false;
}

inline std::vector<MonomialSet> path_generators(const PathFamily& fam) {
  std::vector<MonomialSet> gens;
  for (int i = 1; i + fam.m - 1 <= fam.n; ++i) {
    std::vector<int> g;
    for (int t = 0; t < fam.m; ++t) g.push_back(i + t);
    gens.emplace_back(std::move(g));
  }
  return gens;
}

/// All n cyclic windows; the first n-m+1 are the path generators.
inline std::vector<MonomialSet> cycle_generators(const CycleFamily& fam) {
  std::vector<MonomialSet> gens;
  for (int i = 1; i <= fam.n; ++i) {
    std::vector<int> g;
    for (int t = 0; t < fam.m; ++t) g.push_back((i - 1 + t) % fam.n + 1);
    gens.emplace_back(std::move(g));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Closed-form level counts

/// Squarefree degree-k monomials outside I_{n,m}: ext_binom(n-k+1, m, k).
inline Integer alpha_path_quotient(int n, int m, int k) {
  PathFamily fam(n, m);
  if (k < 0 || k > fam.n) return 0;
  return ext_binom(n - k + 1, m, k);
}

/// Squarefree degree-k monomials inside I_{n,m}.
inline Integer alpha_path_ideal(int n, int m, int k) {
  PathFamily fam(n, m);
  if (k < 0 || k > fam.n) return 0;
  return binom(n, k) - alpha_path_quotient(n, m, k);
}

/// Degree-k monomials in J_{n,m} \ I_{n,m}:
///   sum_{l=m}^{2m-2} (2m-1-l) * ext_binom(N_l, m, k-l)
/// with N_l = n-l-k+1 (printed) or n-k-1 (corrected). Terms with a negative
/// exponent are zero.
inline Integer alpha_cycle_rel(int n, int m, int k, Variant variant = Variant::corrected) {
  CycleFamily fam(n, m);
  if (k < 0 || k > fam.n) return 0;
  Integer sum = 0;
  for (int l = m; l <= 2 * m - 2; ++l) {
    const std::int64_t exponent = variant == Variant::printed ? n - l - k + 1 : n - k - 1;
    if (exponent < 0) continue;
    sum += (2 * m - 1 - l) * ext_binom(exponent, m, k - l);
  }
  return sum;
}

inline Integer alpha_cycle_quotient(int n, int m, int k, Variant variant = Variant::corrected) {
  CycleFamily fam(n, m);
  if (k < 0 || k > fam.n) return 0;
  return alpha_path_quotient(n, m, k) - alpha_cycle_rel(n, m, k, variant);
}

inline Integer alpha_cycle_ideal(int n, int m, int k, Variant variant = Variant::corrected) {
  CycleFamily fam(n, m);
  if (k < 0 || k > fam.n) return 0;
  return binom(n, k) - alpha_cycle_quotient(n, m, k, variant);
}

inline Integer alpha(QuotientKind kind, int n, int m, int k, Variant variant = Variant::corrected) {
  switch (kind) {
    case QuotientKind::path_quotient: return alpha_path_quotient(n, m, k);
    case QuotientKind::path_ideal: return alpha_path_ideal(n, m, k);
    case QuotientKind::cycle_quotient: return alpha_cycle_quotient(n, m, k, variant);
    case QuotientKind::cycle_ideal: return alpha_cycle_ideal(n, m, k, variant);
    case QuotientKind::cycle_rel: return alpha_cycle_rel(n, m, k, variant);
  }
  throw std::logic_error("alpha: unhandled kind");
}

/// alpha_0..alpha_n of the named quotient from the closed forms.
inline AlphaVector alpha_vector(QuotientKind kind, int n, int m, Variant variant = Variant::corrected) {
  if (is_cycle(kind))
    static_cast<void>(CycleFamily(n, m));
  else
    static_cast<void>(PathFamily(n, m));
  AlphaVector out{n, std::string(name(kind)), {}};
  out.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.values.push_back(alpha(kind, n, m, k, variant));
  return out;
}

// ---------------------------------------------------------------------------
// Run-sequence bijection
//
// With prefix sums A_0 = 0, A_i = a_1 + ... + a_i, a nonzero entry a_i
// becomes the run x_{i+A_{i-1}} ... x_{i+A_i-1}. Consecutive runs are
// separated by at least the unused position i + A_i. Conversely the j-th
// maximal run of length b_j starting at p_j lands at index p_j - (b_1 + ...
// + b_{j-1}).

inline MonomialSet seq_to_monomial(const RunSequence& a) {
  a.validate();
  std::vector<int> vars;
  int prefix = 0;
  for (int i = 1; i <= static_cast<int>(a.entries.size()); ++i) {
    const int len = a.entries[i - 1];
    for (int t = 0; t < len; ++t) vars.push_back(i + prefix + t);
    prefix += len;
  }
  return MonomialSet(std::move(vars));
}

inline RunSequence monomial_to_seq(const MonomialSet& A, const PathFamily& fam) {
  if (in_path_ideal(A, fam))
    throw std::invalid_argument("monomial_to_seq: " + A.str() + " lies in I_{" + std::to_string(fam.n) + "," +
                                std::to_string(fam.m) + "}");
  const int k = static_cast<int>(A.size());
  RunSequence out{fam.n, fam.m, std::vector<int>(static_cast<std::size_t>(fam.n - k + 1), 0)};
  const auto& v = A.vars();
  int before = 0;  // total length of earlier runs
  for (std::size_t s = 0; s < v.size();) {
    std::size_t e = s + 1;
    while (e < v.size() && v[e] == v[e - 1] + 1) ++e;
    const int len = static_cast<int>(e - s);
    out.entries[static_cast<std::size_t>(v[s] - before - 1)] = len;
    before += len;
    s = e;
  }
  return out;
}

/// Calls fn on every valid RunSequence of degree k for (n, m).
inline void for_each_run_sequence(int n, int m, int k, const std::function<void(const RunSequence&)>& fn) {
  if (k < 0 || k > n) return;
  RunSequence seq{n, m, std::vector<int>(static_cast<std::size_t>(n - k + 1), 0)};
  const int len = n - k + 1;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == len) {
      if (remaining == 0) fn(seq);
      return;
    }
    const int slots_after = len - pos - 1;
    for (int a = 0; a <= std::min(m - 1, remaining); ++a) {
      if (remaining - a > slots_after * (m - 1)) continue;
      seq.entries[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, remaining - a);
    }
    seq.entries[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, k);
}

// ---------------------------------------------------------------------------
// Enumeration oracle

inline constexpr int default_oracle_cap = 24;

/// Thrown when the oracle would have to scan more than 2^cap subsets.
class oracle_cap_exceeded : public std::length_error {
 public:
  oracle_cap_exceeded(int n, int cap)
      : std::length_error("enumeration needs n=" + std::to_string(n) + " but the oracle cap is " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

/// alpha_k(J/I) straight from the definition: count k-subsets C of [n] that
/// contain some generator of J and no generator of I. The subset range may be
/// split across `jobs` threads; the reduction is a sum, so the result does
/// not depend on the split.
inline AlphaVector enumerate_alpha(const GeneralIdealSpec& spec, int cap = default_oracle_cap, int jobs = 1) {
  spec.validate();
  if (spec.n > cap || spec.n > 40) throw oracle_cap_exceeded(spec.n, std::min(cap, 40));
  std::vector<std::uint64_t> gi, gj;
  for (const auto& g : spec.gens_I) gi.push_back(g.mask());
  for (const auto& g : spec.gens_J) gj.push_back(g.mask());

  const std::uint64_t total = std::uint64_t{1} << spec.n;
  const auto counts_over = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(spec.n) + 1, 0);
    for (std::uint64_t c = lo; c < hi; ++c) {
      bool in_i = false;
      for (auto g : gi)
        if ((c & g) == g) {
          in_i = true;
          break;
        }
      if (in_i) continue;
      for (auto g : gj)
        if ((c & g) == g) {
          ++counts[static_cast<std::size_t>(std::popcount(c))];
          break;
        }
    }
    return counts;
  };

  jobs = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(jobs));
  if (jobs == 1 || total < 4096) {
    partial.assign(1, counts_over(0, total));
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min(total, chunk * w), hi = std::min(total, chunk * (w + 1));
      workers.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = counts_over(lo, hi); });
    }
    for (auto& t : workers) t.join();
  }
  AlphaVector out{spec.n, "general", std::vector<Integer>(static_cast<std::size_t>(spec.n) + 1, 0)};
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k) out.values[k] += p[k];
  return out;
}

/// The generator pair whose J \ I is the poset of the named quotient.
inline GeneralIdealSpec general_spec(QuotientKind kind, int n, int m) {
  const std::vector<MonomialSet> unit{MonomialSet{}};
  switch (kind) {
    case QuotientKind::path_quotient: return {n, path_generators(PathFamily(n, m)), unit};
    case QuotientKind::path_ideal: return {n, {}, path_generators(PathFamily(n, m))};
    case QuotientKind::cycle_quotient: return {n, cycle_generators(CycleFamily(n, m)), unit};
    case QuotientKind::cycle_ideal: return {n, {}, cycle_generators(CycleFamily(n, m))};
    case QuotientKind::cycle_rel:
      return {n, path_generators(PathFamily(n, m)), cycle_generators(CycleFamily(n, m))};
  }
  throw std::logic_error("general_spec: unhandled kind");
}

}  // namespace sqfd
