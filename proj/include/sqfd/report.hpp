#pragma once

// JSON/CSV rendering of sweep reports and JSON input of generator specs.
// Integers are always written as decimal strings.

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sqfd/hilbert.hpp"
#include "sqfd/ideals.hpp"
#include "sqfd/verify.hpp"

namespace sqfd {

using ordered_json = nlohmann::ordered_json;

inline ordered_json params_json(const CheckParams& p) {
  ordered_json j = ordered_json::object();
  if (p.n >= 0) j["n"] = p.n;
  if (p.m >= 0) j["m"] = p.m;
  if (p.k >= 0) j["k"] = p.k;
  if (p.d >= 0) j["d"] = p.d;
  if (p.variant) j["variant"] = std::string(name(*p.variant));
  return j;
}

inline ordered_json result_json(const CheckResult& r) {
  return {{"id", r.id},
          {"params", params_json(r.params)},
          {"lhs", r.lhs.str()},
          {"rhs", r.rhs.str()},
          {"relation", std::string(symbol(r.relation))},
          {"holds", r.holds}};
}

inline ordered_json discrepancy_json(const Discrepancy& d) {
  return {{"kind", d.kind},
          {"id", d.id},
          {"params", params_json(d.params)},
          {"printed", d.printed.str()},
          {"reference", d.reference.str()},
          {"note", d.note}};
}

/// Report document. The "timing" block under "meta" is the only part that
/// varies between runs with identical options.
inline ordered_json report_json(const SweepReport& rep, bool with_timing = true) {
  const auto& o = rep.options;
  ordered_json doc;
  doc["meta"] = {{"tool", "sqfd"}, {"variant", std::string(name(o.variant))}};
  if (with_timing) doc["meta"]["timing"] = {{"elapsed_ms", rep.elapsed_ms}, {"jobs", o.jobs}};
  doc["ranges"] = {{"n_min", o.n_min},
                   {"n_max", o.n_max},
                   {"m_min", o.m_min},
                   {"m_max", o.m_max},
                   {"oracle_n_max", std::min(o.oracle_n_max, o.oracle_cap)}};

  auto results = ordered_json::array();
  for (const auto& r : rep.results) results.push_back(result_json(r));
  doc["results"] = std::move(results);

  auto disc = ordered_json::array();
  for (const auto& d : rep.discrepancies) disc.push_back(discrepancy_json(d));
  doc["discrepancies"] = std::move(disc);

  auto errata = ordered_json::array();
  for (const auto& e : rep.errata) {
    ordered_json ev = ordered_json::object();
    for (const auto& [k, v] : e.evidence) ev[k] = v;
    errata.push_back({{"id", e.id}, {"description", e.description}, {"confirmed", e.confirmed}, {"evidence", ev}});
  }
  doc["errata"] = std::move(errata);

  auto totals = ordered_json::object();
  for (const auto& [id, t] : rep.totals) totals[id] = {{"pass", t.pass}, {"fail", t.fail}};

  auto gaps = ordered_json::array();
  for (const auto& [n, m, q, f] : rep.qdepth_phi_gaps) gaps.push_back({{"n", n}, {"m", m}, {"qdepth", q.str()}, {"phi", f.str()}});

  doc["summary"] = {
      {"pass", rep.pass_count()},
      {"fail", static_cast<std::int64_t>(rep.failures.size())},
      {"disc", static_cast<std::int64_t>(rep.discrepancies.size())},
      {"totals", std::move(totals)},
      {"variants",
       {{"compared", rep.variant_compared},
        {"differ", rep.variant_differ},
        {"m2_compared", rep.variant_m2_compared},
        {"m2_differ", rep.variant_m2_differ}}},
      {"qdepth_path_quotient_vs_phi", {{"equal", rep.qdepth_phi_equal}, {"gaps", std::move(gaps)}}}};
  return doc;
}

inline void write_csv(const SweepReport& rep, std::ostream& out) {
  out << "id,n,m,k,d,variant,lhs,relation,rhs,holds\n";
  const auto slot = [](int v) { return v >= 0 ? std::to_string(v) : std::string(); };
  for (const auto& r : rep.results) {
    out << r.id << ',' << slot(r.params.n) << ',' << slot(r.params.m) << ',' << slot(r.params.k) << ','
        << slot(r.params.d) << ',' << (r.params.variant ? name(*r.params.variant) : "") << ',' << r.lhs.str() << ','
        << symbol(r.relation) << ',' << r.rhs.str() << ',' << (r.holds ? "true" : "false") << '\n';
  }
}

inline void write_text(const SweepReport& rep, std::ostream& out) {
  for (const auto& [id, t] : rep.totals) out << id << " pass=" << t.pass << " fail=" << t.fail << '\n';
  for (const auto& r : rep.failures) {
    out << "FAIL " << r.id << ' ' << params_json(r.params).dump() << ": " << r.lhs.str() << ' ' << symbol(r.relation)
        << ' ' << r.rhs.str() << '\n';
  }
  for (const auto& e : rep.errata)
    out << "erratum " << e.id << (e.confirmed ? " (confirmed)" : " (not reproduced)") << ": " << e.description << '\n';
  out << "variants: compared=" << rep.variant_compared << " differ=" << rep.variant_differ
      << " m2_compared=" << rep.variant_m2_compared << " m2_differ=" << rep.variant_m2_differ << '\n';
  out << "summary: pass=" << rep.pass_count() << " fail=" << rep.failures.size() << " disc=" << rep.discrepancies.size()
      << '\n';
}

// ---------------------------------------------------------------------------
// Generator specs: {"n": int, "gens_I": [[int]], "gens_J": [[int]]}, 1-based.

inline GeneralIdealSpec parse_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("spec: expected an object with key \"n\"");
  GeneralIdealSpec spec;
  spec.n = j.at("n").get<int>();
  const auto read = [&](const char* key) {
    std::vector<MonomialSet> gens;
    if (!j.contains(key)) return gens;
    for (const auto& g : j.at(key)) gens.emplace_back(g.get<std::vector<int>>());
    return gens;
  };
  spec.gens_I = read("gens_I");
  spec.gens_J = read("gens_J");
  spec.validate();
  return spec;
}

inline GeneralIdealSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  try {
    return parse_spec(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("spec file '" + path + "': " + e.what());
  }
}

inline nlohmann::json spec_json(const GeneralIdealSpec& spec) {
  const auto gens = [](const std::vector<MonomialSet>& v) {
    auto a = nlohmann::json::array();
    for (const auto& g : v) a.push_back(g.vars());
    return a;
  };
  return {{"n", spec.n}, {"gens_I", gens(spec.gens_I)}, {"gens_J", gens(spec.gens_J)}};
}

inline ordered_json bounds_json(const DepthBounds& b) {
  ordered_json j{{"family", b.family}, {"phi", b.phi}, {"depth_lower", b.depth_lower}};
  j["depth_upper"] = b.depth_upper ? ordered_json(*b.depth_upper) : ordered_json(nullptr);
  j["sdepth_lower"] = b.sdepth_lower;
  j["sdepth_upper"] = b.sdepth_upper ? ordered_json(*b.sdepth_upper) : ordered_json(nullptr);
  j["qdepth"] = b.qdepth;
  auto lb = ordered_json::array();
  for (const auto& nb : b.lower_bounds) lb.push_back({{"label", nb.label}, {"value", nb.value}});
  j["lower_bounds"] = std::move(lb);
  j["consistent"] = b.consistent();
  return j;
}

}  // namespace sqfd
