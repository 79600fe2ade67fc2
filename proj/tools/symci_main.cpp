// symci: counting, census, and value-set pipelines behind one binary.
// Exit status: 0 all checks pass (or nothing to check), 1 any check failed,
// 2 contract/config/ceiling errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symci/census.hpp"
#include "symci/errors.hpp"
#include "symci/factpat.hpp"
#include "symci/ff.hpp"
#include "symci/report.hpp"
#include "symci/symsys.hpp"
#include "symci/upoly.hpp"
#include "symci/valueset.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace census = symci::census;
namespace factpat = symci::factpat;
namespace report = symci::report;
namespace symsys = symci::symsys;
namespace valueset = symci::valueset;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All option values flow through one string map: command line first, then
// config file entries for keys the command line left unset, then the
// environment (work ceiling only), then defaults at the typed getters.
struct RawOpts {
  std::map<std::string, std::string> kv;
  std::vector<std::string> allowed;

  bool has(const std::string& key) const { return kv.count(key) != 0; }
  std::string get(const std::string& key) const { return kv.at(key); }
  std::string get_or(const std::string& key, const std::string& dflt) const {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
  }
};

void add_value_opt(CLI::App* cmd, RawOpts& raw, const std::string& name,
                   const std::string& desc) {
  raw.allowed.push_back(name);
  cmd->add_option_function<std::string>(
      "--" + name, [&raw, name](const std::string& v) { raw.kv[name] = v; }, desc);
}

void add_flag_opt(CLI::App* cmd, RawOpts& raw, const std::string& name,
                  const std::string& desc) {
  raw.allowed.push_back(name);
  cmd->add_flag_callback(
      "--" + name, [&raw, name] { raw.kv[name] = "1"; }, desc);
}

void add_common_opts(CLI::App* cmd, RawOpts& raw) {
  add_value_opt(cmd, raw, "q", "field size (prime)");
  add_value_opt(cmd, raw, "p", "field characteristic (with --k)");
  add_value_opt(cmd, raw, "k", "extension degree over p");
  add_value_opt(cmd, raw, "work-ceiling", "enumeration budget in work units");
  add_value_opt(cmd, raw, "workers", "worker thread count");
  add_value_opt(cmd, raw, "out", "report file (stdout when absent)");
  add_value_opt(cmd, raw, "format", "report format: json or csv");
  add_value_opt(cmd, raw, "config", "key=value config file, merged under flags");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Plain key=value lines; flags win over config, config wins over env.
void merge_config_and_env(RawOpts& raw) {
  if (raw.has("config")) {
    const std::string text = slurp(raw.get("config"));
    std::istringstream in(text);
    std::string line;
    for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw CliError(raw.get("config") + ":" + std::to_string(lineno) +
                       ": expected key=value, got '" + line + "'");
      }
      auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t");
        auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (std::find(raw.allowed.begin(), raw.allowed.end(), key) == raw.allowed.end()) {
        throw CliError(raw.get("config") + ":" + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
      }
      raw.kv.emplace(key, value);  // emplace: command line keeps priority
    }
  }
  if (!raw.has("work-ceiling")) {
    if (const char* env = std::getenv("SYMCI_WORK_CEILING")) raw.kv["work-ceiling"] = env;
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    unsigned long long x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw CliError("--" + key + ": expected an unsigned integer, got '" + v + "'");
  }
}

std::int64_t parse_i64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw CliError("--" + key + ": expected an integer, got '" + v + "'");
  }
}

std::uint64_t require_u64(const RawOpts& raw, const std::string& key) {
  if (!raw.has(key)) throw CliError("--" + key + " is required");
  return parse_u64(key, raw.get(key));
}

std::uint32_t require_u32(const RawOpts& raw, const std::string& key) {
  std::uint64_t x = require_u64(raw, key);
  if (x > UINT32_MAX) throw CliError("--" + key + ": value out of range");
  return static_cast<std::uint32_t>(x);
}

const symci::ff::FieldCtx& resolve_field(const RawOpts& raw) {
  if (raw.has("q") && raw.has("p")) throw CliError("give either --q or --p/--k, not both");
  if (raw.has("q")) return symci::ff::build_field(require_u32(raw, "q"), 1);
  if (raw.has("p")) {
    std::uint32_t k = raw.has("k") ? require_u32(raw, "k") : 1;
    return symci::ff::build_field(require_u32(raw, "p"), k);
  }
  throw CliError("field size is required (--q, or --p with --k)");
}

std::uint64_t resolve_ceiling(const RawOpts& raw) {
  return raw.has("work-ceiling") ? parse_u64("work-ceiling", raw.get("work-ceiling"))
                                 : census::kDefaultWorkCeiling;
}

std::uint32_t resolve_workers(const RawOpts& raw) {
  std::uint32_t w = raw.has("workers") ? require_u32(raw, "workers") : 1;
  if (w == 0) throw CliError("--workers: must be at least 1");
  return w;
}

std::string resolve_format(const RawOpts& raw) {
  std::string f = raw.get_or("format", "json");
  if (f != "json" && f != "csv") throw CliError("--format: expected json or csv, got '" + f + "'");
  return f;
}

void write_out(const RawOpts& raw, const std::string& content) {
  if (raw.has("out")) {
    report::atomic_write(raw.get("out"), content);
  } else {
    std::cout << content;
  }
}

symci::ff::Fq reduce_mod_q(std::int64_t v, std::uint64_t q) {
  std::int64_t m = v % static_cast<std::int64_t>(q);
  if (m < 0) m += static_cast<std::int64_t>(q);
  return static_cast<symci::ff::Fq>(m);
}

std::vector<symci::ff::Fq> parse_window(const RawOpts& raw, std::uint64_t q) {
  if (!raw.has("a")) throw CliError("--a is required");
  std::vector<symci::ff::Fq> a;
  std::istringstream in(raw.get("a"));
  std::string item;
  while (std::getline(in, item, ',')) a.push_back(reduce_mod_q(parse_i64("a", item), q));
  if (a.empty()) throw CliError("--a: empty coefficient list");
  return a;
}

census::IneqSet parse_ineq(const std::string& spec, std::uint32_t r) {
  if (spec == "none" || spec.empty()) return census::IneqSet::none();
  if (spec == "all") return census::IneqSet::all_pairs(r);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw CliError("--ineq: expected i-j pairs separated by ';', got '" + item + "'");
    }
    pairs.emplace_back(static_cast<std::uint32_t>(parse_u64("ineq", item.substr(0, dash))),
                       static_cast<std::uint32_t>(parse_u64("ineq", item.substr(dash + 1))));
  }
  return census::IneqSet::from_pairs(std::move(pairs), r);
}

symsys::SymSystem load_system(const RawOpts& raw, const symci::ff::FieldCtx& F,
                              std::uint32_t r, std::uint32_t s) {
  if (!raw.has("system")) throw CliError("--system is required");
  const std::string text = slurp(raw.get("system"));
  std::istringstream in(text);
  std::string line;
  std::vector<symsys::MPoly> polys;
  for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      polys.push_back(symsys::MPoly::parse(F, s, line));
    } catch (const symci::ParseError& e) {
      throw CliError(raw.get("system") + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (polys.empty()) throw CliError(raw.get("system") + ": no polynomials found");
  return symsys::make_system(F, std::move(polys), r, /*enforce_range=*/false);
}

json check_to_json(const report::BoundCheck& c) {
  return json{{"name", c.name},
              {"D", c.D.str()},
              {"delta", c.delta.str()},
              {"main_term", report::rat_str(c.main_term)},
              {"bound", report::rat_str(c.bound)},
              {"observed", report::rat_str(c.observed)},
              {"deviation", report::rat_str(c.deviation)},
              {"pass", c.pass},
              {"vacuous", c.vacuous},
              {"hypothesis_met", c.hypothesis_met},
              {"slack", c.slack}};
}

json checks_to_json(const std::vector<report::BoundCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(check_to_json(c));
  return arr;
}

std::string checks_to_csv(const std::vector<report::BoundCheck>& checks) {
  std::ostringstream out;
  out << "name,D,delta,main_term,bound,observed,deviation,pass,vacuous,hypothesis_met,slack\n";
  for (const auto& c : checks) {
    out << c.name << ',' << c.D.str() << ',' << c.delta.str() << ','
        << report::rat_str(c.main_term) << ',' << report::rat_str(c.bound) << ','
        << report::rat_str(c.observed) << ',' << report::rat_str(c.deviation) << ','
        << (c.pass ? "true" : "false") << ',' << (c.vacuous ? "true" : "false") << ','
        << (c.hypothesis_met ? "true" : "false") << ',' << c.slack << '\n';
  }
  return out.str();
}

void print_check_lines(const std::vector<report::BoundCheck>& checks) {
  for (const auto& c : checks) {
    std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": deviation "
              << report::rat_str(c.deviation) << (c.pass ? " <= " : " > ")
              << report::rat_str(c.bound) << (c.vacuous ? " (vacuous)" : "")
              << (c.hypothesis_met ? "" : " (outside theorem range)") << "\n";
  }
}

bool all_pass(const std::vector<report::BoundCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json count_report_json(const char* command, const census::CountReport& rep,
                       const symsys::SymSystem& sys) {
  json j{{"schema", 1},
         {"command", command},
         {"q", rep.q},
         {"r", rep.r},
         {"m", rep.m},
         {"s", rep.s},
         {"d", rep.d},
         {"ineq", rep.ineq.to_string(rep.r)},
         {"in_theorem_range", sys.in_theorem_range},
         {"affine_count", rep.affine_count},
         {"distinct_count", rep.distinct_count},
         {"has_infinity", rep.has_infinity}};
  if (rep.has_infinity) j["infinity_count"] = rep.infinity_count;
  j["work"] = rep.work;
  return j;
}

std::string count_report_csv(const census::CountReport& rep) {
  std::ostringstream out;
  out << "q,r,m,s,d,ineq,affine_count,distinct_count,infinity_count,work\n";
  out << rep.q << ',' << rep.r << ',' << rep.m << ',' << rep.s << ',';
  for (std::size_t i = 0; i < rep.d.size(); ++i) out << (i ? " " : "") << rep.d[i];
  out << ',' << rep.ineq.to_string(rep.r) << ',' << rep.affine_count << ','
      << rep.distinct_count << ',';
  if (rep.has_infinity) out << rep.infinity_count;
  out << ',' << rep.work << '\n';
  return out.str();
}

// Rows ordered with 1^n first and n^1 last for every command that prints
// pattern tables; absent patterns get explicit zero rows.
std::vector<std::pair<symci::upoly::FactPattern, factpat::CensusTally>> census_rows(
    const factpat::Census& c) {
  std::map<symci::upoly::FactPattern, factpat::CensusTally> full;
  for (const auto& lam : factpat::enumerate_patterns(c.family.n)) full[lam] = {0, 0};
  for (const auto& [lam, tally] : c.tallies) full[lam] = tally;
  return {full.rbegin(), full.rend()};
}

int emit_and_exit(const RawOpts& raw, const json& j, const std::string& csv,
                  const std::vector<report::BoundCheck>& checks) {
  print_check_lines(checks);
  write_out(raw, resolve_format(raw) == "json" ? j.dump(2) + "\n" : csv);
  return all_pass(checks) ? 0 : 1;
}

int run_count_points(const RawOpts& raw, bool with_bounds) {
  const auto& F = resolve_field(raw);
  const std::uint32_t r = require_u32(raw, "r");
  const std::uint32_t s = require_u32(raw, "s");
  auto sys = load_system(raw, F, r, s);
  const std::string dflt = with_bounds ? "all" : "none";
  auto ineq = parse_ineq(raw.get_or("ineq", dflt), r);
  const std::uint64_t ceiling = resolve_ceiling(raw);
  const std::uint32_t workers = resolve_workers(raw);

  auto rep = census::count_points(sys, ineq, ceiling, workers);
  if (raw.has("infinity")) census::attach_infinity(rep, sys, ceiling, workers);
  std::vector<report::BoundCheck> checks;
  if (with_bounds || raw.has("verify-bounds")) checks = census::verify_estimate(rep, sys);

  json j = count_report_json(with_bounds ? "verify-bounds" : "count-points", rep, sys);
  std::string csv;
  if (with_bounds) {
    j["checks"] = checks_to_json(checks);
    csv = checks_to_csv(checks);
  } else {
    if (!checks.empty()) j["checks"] = checks_to_json(checks);
    csv = count_report_csv(rep);
  }
  return emit_and_exit(raw, j, csv, checks);
}

int run_pattern_census(const RawOpts& raw, bool bounds_only) {
  const auto& F = resolve_field(raw);
  const std::uint32_t n = require_u32(raw, "n");
  if (!raw.has("family")) throw CliError("--family is required");
  auto fam = factpat::load_family(F, n, slurp(raw.get("family")));
  auto c = factpat::family_census(fam, resolve_ceiling(raw), resolve_workers(raw));
  std::vector<report::BoundCheck> checks;
  if (bounds_only || raw.has("verify-bounds")) checks = factpat::verify_pattern_bounds(c);

  json rows = json::array();
  std::ostringstream rows_csv;
  rows_csv << "pattern,total,squarefree\n";
  for (const auto& [lam, tally] : census_rows(c)) {
    rows.push_back(json{{"pattern", lam.to_string()},
                        {"total", tally.total},
                        {"squarefree", tally.squarefree}});
    rows_csv << lam.to_string() << ',' << tally.total << ',' << tally.squarefree << '\n';
  }
  json j{{"schema", 1},
         {"command", bounds_only ? "verify-bounds" : "pattern-census"},
         {"q", fam.F->q},
         {"n", fam.n},
         {"s", fam.s},
         {"m", fam.m},
         {"in_theorem_range", fam.in_theorem_range},
         {"rows", rows},
         {"work", c.work}};
  if (bounds_only || !checks.empty()) j["checks"] = checks_to_json(checks);
  return emit_and_exit(raw, j, bounds_only ? checks_to_csv(checks) : rows_csv.str(), checks);
}

int run_value_set(const RawOpts& raw, bool bounds_only) {
  const auto& F = resolve_field(raw);
  const std::uint32_t n = require_u32(raw, "n");
  const std::uint32_t s = require_u32(raw, "s");
  auto win = valueset::make_window(F, n, s, parse_window(raw, F.q));
  const std::uint64_t ceiling = resolve_ceiling(raw);
  const std::uint32_t workers = resolve_workers(raw);
  const std::string method = raw.get_or("method", "both");
  if (method != "direct" && method != "chi" && method != "both") {
    throw CliError("--method: expected direct, chi, or both, got '" + method + "'");
  }

  std::optional<symci::BigRat> direct, via_chi;
  if (!bounds_only && method != "chi") direct = valueset::average_value_set_direct(win, ceiling, workers);
  if (!bounds_only && method != "direct")
    via_chi = valueset::average_value_set_via_chi(win, valueset::ChiMethod::subsets, ceiling, workers);
  std::vector<report::BoundCheck> checks;
  if (bounds_only || raw.has("verify-bounds"))
    checks = valueset::verify_value_set_bounds(win, ceiling, workers);

  json a_json = json::array();
  for (auto c : win.a) a_json.push_back(c);
  json j{{"schema", 1},
         {"command", bounds_only ? "verify-bounds" : "value-set"},
         {"q", F.q},
         {"n", n},
         {"s", s},
         {"a", a_json}};
  std::ostringstream csv;
  if (!bounds_only) {
    j["method"] = method;
    j["direct"] = direct ? json(report::rat_str(*direct)) : json(nullptr);
    j["via_chi"] = via_chi ? json(report::rat_str(*via_chi)) : json(nullptr);
    csv << "method,value\n";
    if (direct) csv << "direct," << report::rat_str(*direct) << '\n';
    if (via_chi) csv << "via_chi," << report::rat_str(*via_chi) << '\n';
  }
  if (bounds_only || !checks.empty()) j["checks"] = checks_to_json(checks);
  return emit_and_exit(raw, j, bounds_only ? checks_to_csv(checks) : csv.str(), checks);
}

int run_hypothesis_check(const RawOpts& raw) {
  const auto& F = resolve_field(raw);
  const std::uint32_t r = require_u32(raw, "r");
  const std::uint32_t s = require_u32(raw, "s");
  auto sys = load_system(raw, F, r, s);
  const std::uint32_t max_ext = raw.has("max-ext") ? require_u32(raw, "max-ext") : 2;
  auto rep = symsys::hypothesis_check(sys, max_ext, resolve_ceiling(raw));
  std::cerr << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.summary() << "\n";

  auto samples_json = [](const std::vector<symsys::ExtensionSample>& v) {
    json arr = json::array();
    for (const auto& e : v) {
      json failures = json::array();
      for (const auto& w : e.failures) failures.push_back(w);
      arr.push_back(json{{"degree", e.degree},
                         {"zeros", e.zeros},
                         {"failure_count", e.failure_count},
                         {"failures", failures}});
    }
    return arr;
  };
  json j{{"schema", 1},
         {"command", "hypothesis-check"},
         {"q", rep.q},
         {"s", rep.s},
         {"m", rep.m},
         {"r", sys.r},
         {"in_theorem_range", sys.in_theorem_range},
         {"max_ext", rep.max_ext},
         {"system_samples", samples_json(rep.system_samples)},
         {"leading_samples", samples_json(rep.leading_samples)},
         {"work", rep.work},
         {"pass", rep.pass}};
  std::ostringstream csv;
  csv << "set,degree,zeros,failure_count\n";
  for (const auto& e : rep.system_samples)
    csv << "system," << e.degree << ',' << e.zeros << ',' << e.failure_count << '\n';
  for (const auto& e : rep.leading_samples)
    csv << "leading," << e.degree << ',' << e.zeros << ',' << e.failure_count << '\n';
  write_out(raw, resolve_format(raw) == "json" ? j.dump(2) + "\n" : csv.str());
  return rep.pass ? 0 : 1;
}

// Dispatches on which instance descriptor is present: --system runs the
// counting estimates, --family the pattern estimates, --a the average
// value-set estimates.
int run_verify_bounds(const RawOpts& raw) {
  const int given = int(raw.has("system")) + int(raw.has("family")) + int(raw.has("a"));
  if (given != 1) throw CliError("give exactly one of --system, --family, --a");
  if (raw.has("system")) return run_count_points(raw, /*with_bounds=*/true);
  if (raw.has("family")) return run_pattern_census(raw, /*bounds_only=*/true);
  return run_value_set(raw, /*bounds_only=*/true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-system point counts, factorization censuses, and value-set averages"};
  app.require_subcommand(1);

  RawOpts count_raw, pattern_raw, value_raw, hypo_raw, verify_raw;

  auto* count_cmd = app.add_subcommand("count-points", "count zeros of a symmetric system");
  add_common_opts(count_cmd, count_raw);
  add_value_opt(count_cmd, count_raw, "r", "number of coordinates");
  add_value_opt(count_cmd, count_raw, "s", "number of Y variables");
  add_value_opt(count_cmd, count_raw, "system", "file with one Y-polynomial per line");
  add_value_opt(count_cmd, count_raw, "ineq", "inequalities: all, none, or i-j;k-l list");
  add_flag_opt(count_cmd, count_raw, "infinity", "also count points at infinity");
  add_flag_opt(count_cmd, count_raw, "verify-bounds", "append estimate checks");

  auto* pattern_cmd = app.add_subcommand("pattern-census", "factorization patterns of a family");
  add_common_opts(pattern_cmd, pattern_raw);
  add_value_opt(pattern_cmd, pattern_raw, "n", "polynomial degree");
  add_value_opt(pattern_cmd, pattern_raw, "family", "family constraint file");
  add_flag_opt(pattern_cmd, pattern_raw, "verify-bounds", "append estimate checks");

  auto* value_cmd = app.add_subcommand("value-set", "average value set of a coefficient window");
  add_common_opts(value_cmd, value_raw);
  add_value_opt(value_cmd, value_raw, "n", "polynomial degree");
  add_value_opt(value_cmd, value_raw, "s", "window length");
  add_value_opt(value_cmd, value_raw, "a", "window a_{n-1},...,a_{n-s} as comma list");
  add_value_opt(value_cmd, value_raw, "method", "direct, chi, or both (default both)");
  add_flag_opt(value_cmd, value_raw, "verify-bounds", "append estimate checks");

  auto* hypo_cmd = app.add_subcommand("hypothesis-check", "sample smoothness over extensions");
  add_common_opts(hypo_cmd, hypo_raw);
  add_value_opt(hypo_cmd, hypo_raw, "r", "number of coordinates");
  add_value_opt(hypo_cmd, hypo_raw, "s", "number of Y variables");
  add_value_opt(hypo_cmd, hypo_raw, "system", "file with one Y-polynomial per line");
  add_value_opt(hypo_cmd, hypo_raw, "max-ext", "largest extension degree sampled (default 2)");

  auto* verify_cmd = app.add_subcommand("verify-bounds", "run the estimate checks for one instance");
  add_common_opts(verify_cmd, verify_raw);
  add_value_opt(verify_cmd, verify_raw, "r", "number of coordinates (--system mode)");
  add_value_opt(verify_cmd, verify_raw, "s", "Y variables / window length");
  add_value_opt(verify_cmd, verify_raw, "system", "symmetric system file");
  add_value_opt(verify_cmd, verify_raw, "ineq", "inequalities for --system mode (default all)");
  add_flag_opt(verify_cmd, verify_raw, "infinity", "also check the at-infinity estimate");
  add_value_opt(verify_cmd, verify_raw, "n", "polynomial degree (--family / --a modes)");
  add_value_opt(verify_cmd, verify_raw, "family", "family constraint file");
  add_value_opt(verify_cmd, verify_raw, "a", "coefficient window as comma list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(count_cmd)) {
      merge_config_and_env(count_raw);
      return run_count_points(count_raw, false);
    }
    if (app.got_subcommand(pattern_cmd)) {
      merge_config_and_env(pattern_raw);
      return run_pattern_census(pattern_raw, false);
    }
    if (app.got_subcommand(value_cmd)) {
      merge_config_and_env(value_raw);
      return run_value_set(value_raw, false);
    }
    if (app.got_subcommand(hypo_cmd)) {
      merge_config_and_env(hypo_raw);
      return run_hypothesis_check(hypo_raw);
    }
    merge_config_and_env(verify_raw);
    return run_verify_bounds(verify_raw);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const symci::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
