#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqfd/extbinom.hpp"
#include "sqfd/hilbert.hpp"
#include "sqfd/ideals.hpp"
#include "sqfd/report.hpp"
#include "sqfd/verify.hpp"

namespace sqfd::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Enumeration cap: SQFD_ORACLE_CAP if set and valid, else the library default.
inline int oracle_cap_from_env() {
  if (const char* env = std::getenv("SQFD_ORACLE_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return default_oracle_cap;
}

namespace detail {

struct Options {
  std::int64_t N = -1;
  int m = -1;
  std::int64_t k = 0;
  int n = -1;
  int d = -1;
  std::string family = "path-quotient";
  std::string variant = "corrected";
  std::string spec_file;
  std::string format = "text";
  std::string out_file;
  std::string method;
  int jobs = 1;
  int oracle_cap = default_oracle_cap;
  // grids
  bool all = false;
  int n_min = 1;
  int n_max = 12;
  int m_min = 1;
  int m_max = -1;
  int oracle_n_max = 18;
  std::string check = "all";
};

inline std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

inline nlohmann::json strings(const std::vector<Integer>& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw std::invalid_argument("format '" + o.format + "' is not supported by this command");
}

// Alpha vector for --family/--n/--m or --spec; `use_oracle` enumerates.
inline AlphaVector family_alpha(const Options& o, bool use_oracle) {
  if (o.family == "general") {
    if (o.spec_file.empty()) throw std::invalid_argument("--family general needs --spec FILE");
    auto spec = load_spec(o.spec_file);
    auto a = enumerate_alpha(spec, o.oracle_cap, o.jobs);
    a.source = "general";
    return a;
  }
  if (o.n < 0 || o.m < 0) throw std::invalid_argument("--n and --m are required for family '" + o.family + "'");
  const auto kind = parse_quotient_kind(o.family);
  if (use_oracle) {
    auto a = enumerate_alpha(general_spec(kind, o.n, o.m), o.oracle_cap, o.jobs);
    a.source = std::string(name(kind));
    return a;
  }
  return alpha_vector(kind, o.n, o.m, parse_variant(o.variant));
}

inline void add_family(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "path-quotient|path-ideal|cycle-quotient|cycle-ideal|cycle-rel|general")
      ->check(CLI::IsMember({"path-quotient", "path-ideal", "cycle-quotient", "cycle-ideal", "cycle-rel", "general"}));
  cmd->add_option("--n", o.n, "number of variables")->check(CLI::NonNegativeNumber);
  cmd->add_option("--m", o.m, "run length")->check(CLI::PositiveNumber);
  cmd->add_option("--variant", o.variant, "J/I formula reading")->check(CLI::IsMember({"printed", "corrected"}));
  cmd->add_option("--spec", o.spec_file, "JSON generator spec for --family general");
}

inline void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out_file, "write output to FILE");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-cap", o.oracle_cap, "largest n the enumeration oracle accepts")->check(CLI::NonNegativeNumber);
}

inline int emit_report(const SweepReport& rep, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << report_json(rep).dump(2) << '\n';
  else if (o.format == "csv")
    write_csv(rep, out);
  else
    write_text(rep, out);
  return rep.ok() ? exit_ok : exit_check_failed;
}

inline SweepOptions sweep_options(const Options& o) {
  SweepOptions s;
  s.n_min = o.n_min;
  s.n_max = o.n_max;
  s.m_min = o.m_min;
  s.m_max = o.m_max;
  s.variant = parse_variant(o.variant);
  s.oracle_n_max = o.oracle_n_max;
  s.oracle_cap = o.oracle_cap;
  s.jobs = o.jobs;
  if (o.check != "all") {
    s.identities = o.check == "identities";
    s.theorems = o.check == "theorems";
    s.oracle = o.check == "oracle";
    s.bounds = o.check == "bounds";
  }
  return s;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  o.oracle_cap = oracle_cap_from_env();

  CLI::App app{"Exact invariants of squarefree path and cycle ideals", "sqfd"};
  app.require_subcommand(1);

  auto* coeff = app.add_subcommand("coeff", "coefficient of t^k in (1+t+...+t^{m-1})^N");
  coeff->add_option("--N", o.N, "exponent")->required()->check(CLI::NonNegativeNumber);
  coeff->add_option("--m", o.m, "number of terms")->required()->check(CLI::PositiveNumber);
  coeff->add_option("--k", o.k, "power of t")->required();
  coeff->add_option("--method", o.method, "dp|ie")->check(CLI::IsMember({"dp", "ie"}));
  detail::add_common(coeff, o);

  auto* alpha_cmd = app.add_subcommand("alpha", "level counts alpha_0..alpha_n");
  detail::add_family(alpha_cmd, o);
  detail::add_common(alpha_cmd, o);

  auto* beta_cmd = app.add_subcommand("beta", "beta_0^d..beta_d^d");
  detail::add_family(beta_cmd, o);
  beta_cmd->add_option("--d", o.d, "candidate depth")->required()->check(CLI::NonNegativeNumber);
  beta_cmd->add_option("--method", o.method, "direct|incremental")->check(CLI::IsMember({"direct", "incremental"}));
  detail::add_common(beta_cmd, o);

  auto* qdepth_cmd = app.add_subcommand("qdepth", "Hilbert depth");
  detail::add_family(qdepth_cmd, o);
  detail::add_common(qdepth_cmd, o);

  auto* bounds_cmd = app.add_subcommand("bounds", "known depth/sdepth bounds next to qdepth");
  bounds_cmd->add_option("--family", o.family, "path|cycle (any path-*/cycle-* name also accepted)");
  bounds_cmd->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"printed", "corrected"}));
  detail::add_common(bounds_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "run checks at one (n, m) or over a small grid");
  verify_cmd->add_option("--n", o.n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--m", o.m)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--all", o.all, "all m <= n <= --n-max");
  verify_cmd->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"printed", "corrected"}));
  verify_cmd->add_option("--check", o.check, "all|identities|theorems|oracle|bounds")
      ->check(CLI::IsMember({"all", "identities", "theorems", "oracle", "bounds"}));
  verify_cmd->add_option("--oracle-n-max", o.oracle_n_max)->check(CLI::NonNegativeNumber);
  detail::add_common(verify_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "run every check over an (n, m) grid and write a report");
  sweep_cmd->add_option("--n-min", o.n_min)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--n-max", o.n_max)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--m-min", o.m_min)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--m-max", o.m_max);
  sweep_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"printed", "corrected"}));
  sweep_cmd->add_option("--check", o.check)->check(CLI::IsMember({"all", "identities", "theorems", "oracle", "bounds"}));
  sweep_cmd->add_option("--oracle-n-max", o.oracle_n_max)->check(CLI::NonNegativeNumber);
  detail::add_common(sweep_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "level counts by brute-force enumeration");
  detail::add_family(oracle_cmd, o);
  detail::add_common(oracle_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }
  if (sweep_cmd->parsed() && sweep_cmd->count("--format") == 0) o.format = "json";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open '" << o.out_file << "' for writing\n";
      return exit_usage;
    }
    sink = &file;
  }
  std::ostream& os = *sink;

  try {
    if (coeff->parsed()) {
      detail::require_format(o, {"text", "json"});
      const Integer v = o.method == "ie" ? ext_binom_ie(o.N, o.m, o.k) : ext_binom(o.N, o.m, o.k);
      if (o.format == "json")
        os << nlohmann::json{{"N", o.N}, {"m", o.m}, {"k", o.k}, {"value", v.str()}}.dump() << '\n';
      else
        os << v.str() << '\n';
      return exit_ok;
    }

    if (alpha_cmd->parsed() || oracle_cmd->parsed()) {
      const bool enumerate = oracle_cmd->parsed();
      const auto a = detail::family_alpha(o, enumerate);
      int code = exit_ok;
      nlohmann::json cmp = nlohmann::json::array();
      if (enumerate && o.family != "general") {
        // Compare against both closed-form readings; only the corrected one gates the exit code.
        const auto kind = parse_quotient_kind(o.family);
        for (auto v : {Variant::corrected, Variant::printed}) {
          if (v == Variant::printed && kind == QuotientKind::path_quotient) continue;
          if (v == Variant::printed && kind == QuotientKind::path_ideal) continue;
          const auto closed = alpha_vector(kind, o.n, o.m, v).values;
          const bool match = closed == a.values;
          if (!match && v == Variant::corrected) code = exit_check_failed;
          cmp.push_back({{"variant", std::string(name(v))}, {"closed_form", detail::strings(closed)}, {"matches", match}});
          if (!match) err << "note: " << name(v) << " closed form differs from enumeration: " << detail::join(closed) << '\n';
        }
      }
      if (o.format == "json") {
        nlohmann::json j{{"family", a.source}, {"n", a.n}, {"alpha", detail::strings(a.values)}};
        if (o.family != "general") j["m"] = o.m;
        if (!enumerate) j["variant"] = o.variant;
        if (enumerate) j["comparison"] = cmp;
        os << j.dump() << '\n';
      } else if (o.format == "csv") {
        os << "k,alpha\n";
        for (std::size_t k = 0; k < a.values.size(); ++k) os << k << ',' << a.values[k].str() << '\n';
      } else {
        os << detail::join(a.values) << '\n';
      }
      return code;
    }

    if (beta_cmd->parsed()) {
      const auto a = detail::family_alpha(o, false);
      const auto b = o.method == "incremental" ? beta_incremental(a, o.d) : beta_from_alpha(a, o.d);
      if (o.format == "json")
        os << nlohmann::json{{"family", a.source}, {"n", a.n}, {"d", b.d}, {"beta", detail::strings(b.values)}}.dump()
           << '\n';
      else if (o.format == "csv") {
        os << "k,beta\n";
        for (std::size_t k = 0; k < b.values.size(); ++k) os << k << ',' << b.values[k].str() << '\n';
      } else
        os << detail::join(b.values) << '\n';
      return exit_ok;
    }

    if (qdepth_cmd->parsed()) {
      detail::require_format(o, {"text", "json"});
      const auto a = detail::family_alpha(o, false);
      const int q = qdepth(a);
      if (o.format == "json")
        os << nlohmann::json{{"family", a.source}, {"n", a.n}, {"qdepth", q}}.dump() << '\n';
      else
        os << q << '\n';
      return exit_ok;
    }

    if (bounds_cmd->parsed()) {
      detail::require_format(o, {"text", "json"});
      std::vector<DepthBounds> list;
      const bool cycle = o.family.rfind("cycle", 0) == 0;
      if (!cycle && o.family.rfind("path", 0) != 0) throw std::invalid_argument("bounds: --family must be path or cycle");
      if (cycle) {
        auto b = depth_bounds_cycle(o.n, o.m, parse_variant(o.variant));
        list = {b.quotient, b.rel, b.ideal};
      } else {
        auto b = depth_bounds_path(o.n, o.m);
        list = {b.quotient, b.ideal};
      }
      if (o.format == "json") {
        auto arr = ordered_json::array();
        for (const auto& b : list) arr.push_back(bounds_json(b));
        os << arr.dump(2) << '\n';
      } else {
        for (const auto& b : list) {
          os << b.family << ": phi=" << b.phi << " depth=" << b.depth_lower;
          if (b.depth_upper != b.depth_lower) os << ".." << (b.depth_upper ? std::to_string(*b.depth_upper) : "");
          os << " sdepth>=" << b.sdepth_lower;
          if (b.sdepth_upper) os << " sdepth<=" << *b.sdepth_upper;
          os << " qdepth=" << b.qdepth << (b.consistent() ? "" : " (lower bound exceeds qdepth)") << '\n';
        }
      }
      bool ok = true;
      for (const auto& b : list) ok = ok && b.consistent();
      return ok ? exit_ok : exit_check_failed;
    }

    if (verify_cmd->parsed()) {
      auto s = detail::sweep_options(o);
      if (o.all) {
        s.n_min = 1;
        s.n_max = o.n_max;
      } else {
        if (o.n < 0 || o.m < 0) throw std::invalid_argument("verify: give --n and --m, or --all --n-max N");
        static_cast<void>(PathFamily(o.n, o.m));
        s.n_min = s.n_max = o.n;
        s.m_min = s.m_max = o.m;
      }
      return detail::emit_report(sweep(s), o, os);
    }

    if (sweep_cmd->parsed()) return detail::emit_report(sweep(detail::sweep_options(o)), o, os);
  } catch (const oracle_cap_exceeded& e) {
    err << "error: " << e.what() << " (raise with --oracle-cap or SQFD_ORACLE_CAP)\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sqfd");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sqfd::cli
