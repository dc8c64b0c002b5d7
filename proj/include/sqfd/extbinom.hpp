#pragma once

// Ordinary and extended binomial coefficients over exact integers.
//
// The extended coefficient ext_binom(N, m, k) is the coefficient of t^k in
// (1 + t + ... + t^{m-1})^N, i.e. the number of length-N sequences with
// entries in [0, m-1] summing to k.

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqfd/integer.hpp"

namespace sqfd {

namespace detail {

// Pascal rows for small nonnegative upper index, grown on demand.
class pascal_cache {
 public:
  static constexpr std::int64_t max_row = 1024;

  Integer get(std::int64_t a, std::int64_t b) {
    {
      std::shared_lock lock(mutex_);
      if (a < static_cast<std::int64_t>(rows_.size())) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= a) {
      const auto n = rows_.size();
      std::vector<Integer> row(n + 1);
      row[0] = 1;
      row[n] = 1;
      for (std::size_t i = 1; i < n; ++i) row[i] = rows_[n - 1][i - 1] + rows_[n - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

inline pascal_cache& pascal() {
  static pascal_cache cache;
  return cache;
}

}  // namespace detail

/// Ordinary binomial coefficient with the zero conventions the alternating
/// sums rely on: 0 if b < 0, 0 if 0 <= a < b, otherwise the falling-factorial
/// formula a(a-1)...(a-b+1)/b! (so binom(a, 0) = 1 for every a, and negative
/// upper indices give the generalized value).
inline Integer binom(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a >= 0) {
    if (b > a) return 0;
    if (a <= detail::pascal_cache::max_row) return detail::pascal().get(a, b);
    if (b > a - b) b = a - b;
  }
  // Running product stays integral: after step i it equals binom(a, i + 1).
  Integer r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r *= Integer(a - i);
    r /= Integer(i + 1);
  }
  return r;
}

/// Coefficients of (1 + t + ... + t^{m-1})^N, indexed 0..N(m-1).
struct CoeffRow {
  std::int64_t N = 0;
  int m = 1;
  std::vector<Integer> coeffs;

  /// Coefficient of t^k; zero outside 0..N(m-1).
  [[nodiscard]] Integer at(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
};

/// Memo of CoeffRows keyed by (N, m). Rows for a fixed m are built
/// incrementally from the previous exponent. Safe for concurrent readers and
/// concurrent growth; returned rows are immutable.
class CoeffTable {
 public:
  std::shared_ptr<const CoeffRow> row(std::int64_t N, int m) {
    if (N < 0) throw std::invalid_argument("CoeffTable: exponent N must be >= 0, got " + std::to_string(N));
    if (m < 1) throw std::invalid_argument("CoeffTable: m must be >= 1, got " + std::to_string(m));
    {
      std::shared_lock lock(mutex_);
      auto it = rows_.find(m);
      if (it != rows_.end() && N < static_cast<std::int64_t>(it->second.size())) return it->second[N];
    }
    std::unique_lock lock(mutex_);
    auto& rows = rows_[m];
    if (rows.empty()) rows.push_back(std::make_shared<const CoeffRow>(CoeffRow{0, m, {Integer(1)}}));
    while (static_cast<std::int64_t>(rows.size()) <= N) rows.push_back(next_row(*rows.back()));
    return rows[N];
  }

  std::size_t cached_rows() {
    std::shared_lock lock(mutex_);
    std::size_t total = 0;
    for (const auto& [m, rows] : rows_) total += rows.size();
    return total;
  }

 private:
  // Multiply by (1 + t + ... + t^{m-1}) with a sliding window sum.
  static std::shared_ptr<const CoeffRow> next_row(const CoeffRow& prev) {
    const int m = prev.m;
    const std::size_t len = prev.coeffs.size() + static_cast<std::size_t>(m - 1);
    std::vector<Integer> out(len);
    Integer window = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (k < prev.coeffs.size()) window += prev.coeffs[k];
      if (k >= static_cast<std::size_t>(m)) window -= prev.coeffs[k - m];
      out[k] = window;
    }
    return std::make_shared<const CoeffRow>(CoeffRow{prev.N + 1, m, std::move(out)});
  }

  std::shared_mutex mutex_;
  std::unordered_map<int, std::vector<std::shared_ptr<const CoeffRow>>> rows_;
};

inline CoeffTable& coeff_table() {
  static CoeffTable table;
  return table;
}

inline std::shared_ptr<const CoeffRow> coeff_row(std::int64_t N, int m) { return coeff_table().row(N, m); }

/// Coefficient of t^k in (1 + t + ... + t^{m-1})^N from the memoized rows.
inline Integer ext_binom(std::int64_t N, int m, std::int64_t k) { return coeff_row(N, m)->at(k); }

/// Same value as ext_binom, by inclusion-exclusion on (1 - t^m)^N / (1 - t)^N:
///   sum_{l=0}^{floor(k/m)} (-1)^l binom(N, l) binom(N + k - m l - 1, k - m l).
inline Integer ext_binom_ie(std::int64_t N, int m, std::int64_t k) {
  if (N < 0) throw std::invalid_argument("ext_binom_ie: exponent N must be >= 0, got " + std::to_string(N));
  if (m < 1) throw std::invalid_argument("ext_binom_ie: m must be >= 1, got " + std::to_string(m));
  if (k < 0) return 0;
  Integer sum = 0;
  for (std::int64_t l = 0; m * l <= k; ++l) {
    Integer term = binom(N, l) * binom(N + k - m * l - 1, k - m * l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace sqfd
