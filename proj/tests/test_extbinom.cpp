#include <gtest/gtest.h>

#include <functional>
#include <thread>
#include <vector>

#include "sqfd/extbinom.hpp"

using sqfd::binom;
using sqfd::ext_binom;
using sqfd::ext_binom_ie;
using sqfd::Integer;

namespace {

// Independent oracle: count length-N sequences over [0, m-1] with sum k.
std::int64_t count_sequences(int N, int m, int k) {
  std::int64_t count = 0;
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == N) {
      count += rem == 0;
      return;
    }
    for (int a = 0; a < m && a <= rem; ++a) rec(pos + 1, rem - a);
  };
  if (k >= 0) rec(0, k);
  return count;
}

}  // namespace

TEST(Binom, Conventions) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(-1, 0), 1);
  EXPECT_EQ(binom(-3, 0), 1);
  // generalized upper index: binom(-1, k) = (-1)^k, binom(-2, 3) = -4
  EXPECT_EQ(binom(-1, 1), -1);
  EXPECT_EQ(binom(-1, 4), 1);
  EXPECT_EQ(binom(-2, 3), -4);
}

TEST(Binom, LargeArgumentsAreExact) {
  // binom(2000, 3) goes through the product formula, binom(100, 50) through the table
  EXPECT_EQ(binom(2000, 3), Integer(2000) * 1999 * 1998 / 6);
  EXPECT_EQ(binom(100, 50).str(), "100891344545564193334812497256");
  EXPECT_EQ(binom(1500, 1499), 1500);
}

TEST(ExtBinom, Examples) {
  EXPECT_EQ(ext_binom(4, 3, 4), 19);
  EXPECT_EQ(ext_binom(0, 5, 0), 1);
  EXPECT_EQ(ext_binom(0, 1, 0), 1);
  EXPECT_EQ(ext_binom(7, 1, 1), 0);
  EXPECT_EQ(ext_binom(5, 2, 2), 10);
  EXPECT_EQ(ext_binom(3, 3, -1), 0);
  EXPECT_EQ(ext_binom(3, 3, 7), 0);
}

TEST(ExtBinom, InclusionExclusionExamples) {
  EXPECT_EQ(ext_binom_ie(4, 3, 4), 19);
  EXPECT_EQ(ext_binom_ie(4, 3, -2), 0);
  EXPECT_EQ(ext_binom_ie(3, 3, 3), 7);
  EXPECT_EQ(ext_binom_ie(0, 4, 0), 1);
  EXPECT_EQ(ext_binom_ie(0, 4, 2), 0);
}

TEST(ExtBinom, RejectsInvalidParameters) {
  EXPECT_THROW(ext_binom(-1, 3, 0), std::invalid_argument);
  EXPECT_THROW(ext_binom(3, 0, 0), std::invalid_argument);
  EXPECT_THROW(ext_binom_ie(-1, 3, 0), std::invalid_argument);
  EXPECT_THROW(ext_binom_ie(3, 0, 0), std::invalid_argument);
}

TEST(ExtBinom, MatchesSequenceCount) {
  for (int N = 0; N <= 7; ++N)
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= N * (m - 1); ++k) EXPECT_EQ(ext_binom(N, m, k), count_sequences(N, m, k)) << N << ' ' << m << ' ' << k;
}

TEST(ExtBinom, RowProperties) {
  for (int N = 0; N <= 40; ++N)
    for (int m = 1; m <= 8; ++m) {
      const auto row = sqfd::coeff_row(N, m);
      const std::int64_t top = static_cast<std::int64_t>(N) * (m - 1);
      ASSERT_EQ(row->degree(), top);
      Integer sum = 0, power = 1;
      for (int i = 0; i < N; ++i) power *= m;
      for (std::int64_t k = 0; k <= top; ++k) {
        const Integer v = row->at(k);
        ASSERT_GE(v, 0);
        ASSERT_EQ(v, ext_binom_ie(N, m, k)) << N << ' ' << m << ' ' << k;
        ASSERT_EQ(v, row->at(top - k));
        if (N >= 1) {
          Integer rec = 0;
          for (int i = 0; i < m; ++i) rec += ext_binom(N - 1, m, k - i);
          ASSERT_EQ(v, rec);
        }
        if (m == 2) {
          ASSERT_EQ(v, binom(N, k));
        }
        sum += v;
      }
      ASSERT_EQ(sum, power);
    }
}

TEST(ExtBinom, ConcurrentRowsAreDeterministic) {
  sqfd::CoeffTable table;
  std::vector<std::vector<Integer>> seen(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      for (int N = 60; N >= 0; N -= 1 + t % 3) seen[t].push_back(table.row(N, 3 + t % 4)->at(N));
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) {
    std::size_t i = 0;
    for (int N = 60; N >= 0; N -= 1 + t % 3) EXPECT_EQ(seen[t][i++], ext_binom_ie(N, 3 + t % 4, N));
  }
}
