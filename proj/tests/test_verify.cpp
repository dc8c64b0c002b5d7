#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "sqfd/report.hpp"
#include "sqfd/verify.hpp"

using namespace sqfd;

namespace {

bool all_hold(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.holds; });
}

std::vector<CheckResult> with_id(const std::vector<CheckResult>& rs, const std::string& id) {
  std::vector<CheckResult> out;
  std::copy_if(rs.begin(), rs.end(), std::back_inserter(out), [&](const CheckResult& r) { return r.id == id; });
  return out;
}

SweepOptions small_grid(int jobs) {
  SweepOptions o;
  o.n_min = 2;
  o.n_max = 9;
  o.oracle_n_max = 9;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST(Checks, MakeCheckRelations) {
  EXPECT_TRUE(make_check("x", {}, 3, Relation::eq, 3).holds);
  EXPECT_FALSE(make_check("x", {}, 2, Relation::ge, 3).holds);
  EXPECT_TRUE(make_check("x", {}, 2, Relation::le, 3).holds);
  EXPECT_EQ(symbol(Relation::ge), ">=");
}

TEST(Checks, PathFamilyHolds) {
  const auto rs = check_path(7, 3);
  EXPECT_FALSE(rs.empty());
  EXPECT_TRUE(all_hold(rs));
  EXPECT_FALSE(with_id(rs, "path.identity").empty());
  EXPECT_FALSE(with_id(rs, "path.beta-nonneg").empty());
  EXPECT_FALSE(with_id(rs, "path.ideal-upper").empty());
  for (int n = 2; n <= 30; ++n) {
    for (int m = 1; m <= n; ++m) ASSERT_TRUE(all_hold(check_path(n, m))) << n << ' ' << m;
    ASSERT_TRUE(all_hold(check_path_m2(n))) << n;
  }
}

TEST(Checks, CycleFamilyMEqualsTwoHolds) {
  for (int n = 3; n <= 30; ++n) {
    for (auto v : {Variant::printed, Variant::corrected}) ASSERT_TRUE(all_hold(check_cycle(n, 2, v))) << n;
    ASSERT_TRUE(all_hold(check_cycle_m2(n))) << n;
  }
}

TEST(Checks, CycleRelInequalityFailsAtFiveThree) {
  const auto rs = check_cycle(5, 3);
  EXPECT_TRUE(all_hold(with_id(rs, "cycle.quotient-beta-nonneg")));
  EXPECT_TRUE(all_hold(with_id(rs, "cycle.ideal-upper")));
  const auto rel = with_id(rs, "cycle.rel-beta-nonneg");
  ASSERT_FALSE(rel.empty());
  EXPECT_FALSE(all_hold(rel));
}

TEST(Checks, IdentitiesHold) {
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= n; ++m) ASSERT_TRUE(all_hold(check_identities(n, m))) << n << ' ' << m;
  for (int N = 0; N <= 20; ++N)
    for (int m = 1; m <= 6; ++m) ASSERT_TRUE(all_hold(check_ext_binom_row(N, m)));
}

TEST(Checks, OracleAgreesAndFlagsPrinted) {
  const auto batch = check_oracle(8, 3);
  EXPECT_TRUE(all_hold(batch.results));
  const auto it = std::find_if(batch.discrepancies.begin(), batch.discrepancies.end(),
                               [](const Discrepancy& d) { return d.params.k == 4; });
  ASSERT_NE(it, batch.discrepancies.end());
  EXPECT_EQ(it->kind, "printed-vs-oracle");
  EXPECT_EQ(it->printed, 5);
  EXPECT_EQ(it->reference, 7);
  EXPECT_TRUE(check_oracle(8, 2).discrepancies.empty());
  EXPECT_THROW(check_oracle(10, 3, 9), oracle_cap_exceeded);
}

TEST(Errata, AllConfirmed) {
  const auto es = errata_findings();
  EXPECT_EQ(es.size(), 5u);
  for (const auto& e : es) EXPECT_TRUE(e.confirmed) << e.id;
  const auto& first = es.front();
  EXPECT_EQ(first.id, "cycle-rel-exponent");
  const auto ev = [&](const std::string& key) {
    for (const auto& [k, v] : first.evidence)
      if (k == key) return v;
    return std::string();
  };
  EXPECT_EQ(ev("printed"), "5");
  EXPECT_EQ(ev("corrected"), "7");
  EXPECT_EQ(ev("oracle"), "7");
}

TEST(Sweep, DeterministicAcrossJobs) {
  const auto a = report_json(sweep(small_grid(1)), false).dump();
  const auto b = report_json(sweep(small_grid(4)), false).dump();
  const auto c = report_json(sweep(small_grid(4)), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
}

TEST(Sweep, EmptyGridRejected) {
  SweepOptions o;
  o.n_min = 5;
  o.n_max = 4;
  EXPECT_THROW(sweep(o), std::invalid_argument);
  o.n_min = 2;
  o.n_max = 3;
  o.m_min = 5;
  EXPECT_THROW(sweep(o), std::invalid_argument);
}

TEST(Sweep, CorrectedMEqualsTwoGridIsClean) {
  SweepOptions o = small_grid(2);
  o.m_min = 2;
  o.m_max = 2;
  const auto rep = sweep(o);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.variant_m2_differ, 0);
  EXPECT_GT(rep.variant_m2_compared, 0);
}

TEST(Sweep, FindsKnownFailuresForLargerM) {
  const auto rep = sweep(small_grid(2));
  EXPECT_FALSE(rep.ok());
  for (const auto& r : rep.failures) {
    EXPECT_GE(r.params.m, 3) << r.id;
    EXPECT_TRUE(r.id == "cycle.rel-beta-nonneg" || r.id.rfind("qdepth.cycle-rel", 0) == 0) << r.id;
  }
  EXPECT_GT(rep.variant_differ, 0);
  EXPECT_TRUE(std::is_sorted(rep.results.begin(), rep.results.end(), result_less));
}

TEST(Report, JsonShape) {
  const auto rep = sweep(small_grid(1));
  const auto j = report_json(rep);
  for (const char* key : {"meta", "ranges", "results", "discrepancies", "errata", "summary"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["meta"].contains("timing"));
  EXPECT_FALSE(report_json(rep, false)["meta"].contains("timing"));
  EXPECT_EQ(j["summary"]["pass"].get<std::int64_t>() + j["summary"]["fail"].get<std::int64_t>(),
            static_cast<std::int64_t>(j["results"].size()));
  EXPECT_TRUE(j["results"][0]["lhs"].is_string());
  EXPECT_TRUE(j["results"][0]["holds"].is_boolean());
}

TEST(Report, CsvShape) {
  const auto rep = sweep(small_grid(1));
  std::ostringstream os;
  write_csv(rep, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "id,n,m,k,d,variant,lhs,relation,rhs,holds");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    ASSERT_EQ(std::count(line.begin(), line.end(), ','), 9) << line;
  }
  EXPECT_EQ(rows, rep.results.size());
}

TEST(Report, SpecRoundtrip) {
  const auto spec = general_spec(QuotientKind::cycle_rel, 5, 3);
  const auto back = parse_spec(spec_json(spec));
  EXPECT_EQ(enumerate_alpha(back).values, enumerate_alpha(spec).values);
  EXPECT_THROW(parse_spec(nlohmann::json::array()), std::invalid_argument);
  EXPECT_THROW(load_spec("/nonexistent/spec.json"), std::invalid_argument);
}
