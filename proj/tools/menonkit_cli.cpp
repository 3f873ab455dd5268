// menonkit command-line front end.
//
// Machine-readable by default: `compute` prints a bare integer, `table`
// emits CSV or a JSON record, `verify` and `bench` emit JSON records.
// --pretty switches table/verify/bench to a human-readable rendering.
//
// Exit codes: 0 ok, 1 identity failure found, 2 usage error,
// 3 numeric/overflow error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <menonkit/arith.hpp>
#include <menonkit/checked.hpp>
#include <menonkit/crsums.hpp>
#include <menonkit/errors.hpp>
#include <menonkit/totients.hpp>
#include <menonkit/verify.hpp>

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

constexpr std::int64_t kDefaultSieveMax = 1'000'000;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw usage_error("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw usage_error("not an integer: '" + text + "'");
  return value;
}

std::int64_t sieve_bound_from_env() {
  const char* raw = std::getenv("MENONKIT_SIEVE_MAX");
  if (raw == nullptr || *raw == '\0') return kDefaultSieveMax;
  const std::int64_t bound = parse_int(raw);
  if (bound < 1) throw usage_error("MENONKIT_SIEVE_MAX must be positive");
  return bound;
}

void emit_status_record(const std::string& command, const std::string& status) {
  ordered_json record;
  record["schema_version"] = "1";
  record["command"] = command;
  record["parameters"] = ordered_json::object();
  record["results"] = ordered_json::array();
  record["status"] = status;
  std::cout << record.dump(2) << "\n";
}

// ---- compute -------------------------------------------------------------

struct ComputeSpec {
  int arity;
  bool uses_s;
  bool uses_route;
};

const std::map<std::string, ComputeSpec>& compute_functions() {
  static const std::map<std::string, ComputeSpec> fns = {
      {"ggcd", {2, true, false}},   {"klee", {1, true, false}},
      {"jordan", {1, true, false}}, {"cohen_phi", {1, true, false}},
      {"tau_s", {1, true, false}},  {"mobius", {1, false, false}},
      {"phi", {1, false, false}},   {"tau", {1, false, false}},
      {"crs", {2, true, true}},     {"ramanujan", {2, false, false}},
  };
  return fns;
}

int run_compute(const std::vector<std::string>& args, int s, bool s_given,
                const std::string& route_name, bool route_given) {
  if (args.empty()) throw usage_error("compute: missing function name");
  const auto it = compute_functions().find(args[0]);
  if (it == compute_functions().end()) {
    throw usage_error("compute: unknown function '" + args[0] + "'");
  }
  const ComputeSpec& spec = it->second;
  if (static_cast<int>(args.size()) - 1 != spec.arity) {
    throw usage_error("compute " + args[0] + ": expected " + std::to_string(spec.arity) +
                      " argument(s)");
  }
  if (s_given && !spec.uses_s) throw usage_error("compute " + args[0] + ": --s not accepted");
  if (route_given && !spec.uses_route) {
    throw usage_error("compute " + args[0] + ": --route not accepted");
  }

  std::vector<std::int64_t> v;
  for (std::size_t i = 1; i < args.size(); ++i) v.push_back(parse_int(args[i]));

  std::int64_t result = 0;
  const std::string& fn = args[0];
  if (fn == "ggcd") {
    result = menonkit::generalized_gcd(v[0], v[1], s);
  } else if (fn == "klee") {
    result = menonkit::klee(v[0], s);
  } else if (fn == "jordan") {
    result = menonkit::jordan_totient(v[0], s);
  } else if (fn == "cohen_phi") {
    result = menonkit::cohen_totient(v[0], s);
  } else if (fn == "tau_s") {
    result = menonkit::tau_s(v[0], s);
  } else if (fn == "mobius") {
    result = menonkit::mobius(v[0]);
  } else if (fn == "phi") {
    result = menonkit::euler_phi(v[0]);
  } else if (fn == "tau") {
    result = menonkit::tau(v[0]);
  } else if (fn == "crs") {
    menonkit::CrsRoute route = menonkit::CrsRoute::divisor_sum;
    if (route_name == "definition") {
      route = menonkit::CrsRoute::definition;
    } else if (route_name == "closed_form") {
      route = menonkit::CrsRoute::closed_form;
    } else if (route_name != "divisor_sum") {
      throw usage_error("compute crs: unknown route '" + route_name + "'");
    }
    result = menonkit::cohen_ramanujan(v[0], s, v[1], route).value;
  } else {  // ramanujan
    result = menonkit::ramanujan_sum(v[0], v[1]);
  }
  std::cout << result << "\n";
  return kExitOk;
}

// ---- table ---------------------------------------------------------------

menonkit::BatchFn parse_batch_fn(const std::string& name) {
  if (name == "mobius") return menonkit::BatchFn::mobius;
  if (name == "phi") return menonkit::BatchFn::phi;
  if (name == "jordan") return menonkit::BatchFn::jordan;
  if (name == "klee") return menonkit::BatchFn::klee;
  if (name == "tau_s") return menonkit::BatchFn::tau_s;
  throw usage_error("table: unknown function '" + name +
                    "' (expected mobius|phi|jordan|klee|tau_s)");
}

int run_table(const std::string& fn_name, std::int64_t max, int s, const std::string& format,
              const std::string& out_path, bool pretty) {
  const menonkit::BatchFn fn = parse_batch_fn(fn_name);
  if (max < 1) throw usage_error("table: --max must be positive");
  if (s < 1) throw usage_error("table: --s must be positive");
  if (format != "csv" && format != "json") {
    throw usage_error("table: --format must be csv or json");
  }
  const std::int64_t bound = sieve_bound_from_env();
  if (max > bound) {
    throw usage_error("table: --max " + std::to_string(max) + " exceeds the sieve bound " +
                      std::to_string(bound) + " (raise MENONKIT_SIEVE_MAX)");
  }

  const menonkit::SieveTables tables = menonkit::build_sieve(std::max<std::int64_t>(max, 2));
  const std::vector<std::int64_t> values = tables.batch_eval(fn, s, 1, max);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw usage_error("table: cannot open '" + out_path + "' for writing");
    out = &file;
  }

  if (pretty && out_path.empty()) {
    for (std::int64_t n = 1; n <= max; ++n) {
      *out << fn_name << "(" << n << ") = " << values[static_cast<std::size_t>(n - 1)] << "\n";
    }
    return kExitOk;
  }
  if (format == "csv") {
    *out << "n,value\n";
    for (std::int64_t n = 1; n <= max; ++n) {
      *out << n << "," << values[static_cast<std::size_t>(n - 1)] << "\n";
    }
    return kExitOk;
  }
  ordered_json record;
  record["schema_version"] = "1";
  record["command"] = "table";
  record["parameters"] = {{"function", fn_name}, {"max", max}, {"s", s}, {"format", format}};
  ordered_json rows = ordered_json::array();
  for (std::int64_t n = 1; n <= max; ++n) {
    rows.push_back({{"n", n}, {"value", values[static_cast<std::size_t>(n - 1)]}});
  }
  record["results"] = std::move(rows);
  record["status"] = "ok";
  *out << record.dump(2) << "\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

ordered_json report_to_json(const menonkit::IdentityReport& report, int jobs) {
  const menonkit::SweepDomain& d = report.domain;
  ordered_json record;
  record["schema_version"] = "1";
  record["command"] = "verify";
  ordered_json params;
  params["identity"] = menonkit::to_string(report.id);
  params["n_max"] = d.n_max;
  params["s_min"] = d.s_min;
  params["s_max"] = d.s_max;
  params["k_max"] = d.k_max;
  params["r_max"] = d.r_max;
  params["j_max"] = d.j_max;
  params["samples"] = d.samples;
  params["seed"] = d.seed;
  params["budget"] = d.budget;
  params["jobs"] = jobs;
  params["inject_failure"] = d.inject_failure;
  record["parameters"] = std::move(params);
  ordered_json rows = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json row;
    ordered_json p;
    for (const auto& [key, value] : f.params) p[key] = value;
    row["params"] = std::move(p);
    row["lhs"] = f.lhs;
    row["rhs"] = f.rhs;
    rows.push_back(std::move(row));
  }
  record["results"] = std::move(rows);
  ordered_json summary;
  summary["checked"] = report.checked;
  summary["passed"] = report.passed;
  summary["skipped_overflow"] = report.skipped_overflow;
  summary["skipped_budget"] = report.skipped_budget;
  summary["wall_time_s"] = report.wall_time_s;
  record["summary"] = std::move(summary);
  record["status"] = report.ok() ? "ok" : "failures_found";
  return record;
}

int run_verify(const std::string& identity_name, const menonkit::SweepDomain& domain, int jobs,
               bool pretty) {
  const auto id = menonkit::parse_identity(identity_name);
  if (!id) {
    std::string names;
    for (const auto& n : menonkit::identity_names()) names += n + " ";
    throw usage_error("verify: unknown identity '" + identity_name + "' (one of: " + names +
                      ")");
  }
  const menonkit::IdentityReport report = menonkit::verify(*id, domain, jobs);
  if (pretty) {
    std::cout << "identity " << menonkit::to_string(report.id) << ": checked "
              << report.checked << ", passed " << report.passed << ", failed "
              << report.failures.size() << ", skipped " << report.skipped_overflow
              << " overflow / " << report.skipped_budget << " budget, "
              << report.wall_time_s << " s\n";
    for (const auto& f : report.failures) {
      std::cout << "  FAIL";
      for (const auto& [key, value] : f.params) std::cout << " " << key << "=" << value;
      std::cout << ": lhs " << f.lhs << " vs rhs " << f.rhs << "\n";
    }
  } else {
    std::cout << report_to_json(report, jobs).dump(2) << "\n";
  }
  return report.ok() ? kExitOk : kExitFailures;
}

// ---- bench -----------------------------------------------------------------

int run_bench(const std::string& target, std::int64_t size, bool pretty) {
  using clock = std::chrono::steady_clock;
  double seconds = 0;
  bool checksum_ok = true;
  std::uint64_t units = 0;

  if (target == "sieve") {
    if (size < 2) throw usage_error("bench sieve: size must be >= 2");
    const auto t0 = clock::now();
    const menonkit::SieveTables tables = menonkit::build_sieve(size);
    seconds = std::chrono::duration<double>(clock::now() - t0).count();
    units = static_cast<std::uint64_t>(size);
    // 100-sample checksum against point factorization.
    std::uint64_t state = 0x7c3a9d1full ^ static_cast<std::uint64_t>(size);
    for (int i = 0; i < 100; ++i) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      const std::int64_t idx =
          2 + static_cast<std::int64_t>(state % static_cast<std::uint64_t>(size - 1));
      const auto f = menonkit::factorize(idx);
      if (tables.spf(idx) != f.factors.front().prime) checksum_ok = false;
    }
  } else if (target == "crs") {
    if (size < 1) throw usage_error("bench crs: size must be positive");
    menonkit::SweepDomain d;
    d.n_max = 100;
    d.s_max = 3;
    d.r_max = static_cast<int>(size);
    const auto t0 = clock::now();
    const menonkit::IdentityReport report =
        menonkit::verify(menonkit::IdentityId::crs_route_agreement, d, 0);
    seconds = std::chrono::duration<double>(clock::now() - t0).count();
    units = report.checked;
    checksum_ok = report.ok();
  } else if (target == "menon") {
    if (size < 1) throw usage_error("bench menon: size must be positive");
    menonkit::SweepDomain d;
    d.n_max = size;
    d.s_min = 1;
    d.s_max = 1;
    const auto t0 = clock::now();
    const menonkit::IdentityReport report =
        menonkit::verify(menonkit::IdentityId::menon_s, d, 0);
    seconds = std::chrono::duration<double>(clock::now() - t0).count();
    units = report.checked;
    checksum_ok = report.ok();
  } else {
    throw usage_error("bench: unknown target '" + target + "' (expected sieve|crs|menon)");
  }

  const double throughput = seconds > 0 ? static_cast<double>(units) / seconds : 0.0;
  if (!checksum_ok) std::cerr << "bench " << target << ": checksum FAILED\n";
  if (pretty) {
    std::cout << "bench " << target << " size " << size << ": " << seconds << " s, "
              << throughput << " values/s, checksum " << (checksum_ok ? "ok" : "FAILED")
              << "\n";
  } else {
    ordered_json record;
    record["schema_version"] = "1";
    record["command"] = "bench";
    record["parameters"] = {{"target", target}, {"size", size}};
    record["results"] = ordered_json::array({{{"wall_time_s", seconds},
                                              {"throughput_per_s", throughput},
                                              {"checksum_ok", checksum_ok}}});
    record["status"] = checksum_ok ? "ok" : "numeric_error";
    std::cout << record.dump(2) << "\n";
  }
  return checksum_ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"menonkit: generalized-gcd arithmetic functions, Cohen-Ramanujan sums, and "
               "Menon-type identity verification"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand(
      "compute", "Evaluate one function: ggcd a b | klee n | jordan n | cohen_phi n | "
                 "tau_s m | mobius n | phi n | tau n | crs r n | ramanujan r n");
  compute->allow_extras();
  int compute_s = 1;
  std::string compute_route = "divisor_sum";
  compute->add_option("--s", compute_s, "Exponent s (default 1)");
  compute->add_option("--route", compute_route,
                      "CRS route: definition|divisor_sum|closed_form");

  auto* table = app.add_subcommand("table", "Tabulate a function over [1, max] via the sieve");
  std::string table_fn;
  std::int64_t table_max = 0;
  int table_s = 1;
  std::string table_format = "csv";
  std::string table_out;
  bool table_pretty = false;
  table->add_option("function", table_fn, "mobius|phi|jordan|klee|tau_s")->required();
  table->add_option("--max", table_max, "Largest n (must not exceed the sieve bound)")
      ->required();
  table->add_option("--s", table_s, "Exponent s (default 1)");
  table->add_option("--format", table_format, "csv|json (default csv)");
  table->add_option("--out", table_out, "Write to a file instead of stdout");
  table->add_flag("--pretty", table_pretty, "Human-readable table on stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Sweep one identity and report failures");
  std::string verify_identity;
  menonkit::SweepDomain domain;
  int verify_jobs = 0;
  bool verify_pretty = false;
  verify_cmd->add_option("identity", verify_identity,
                         "menon_classical|menon_s|menon_general|lemma1|lemma2|lemma3|"
                         "orthogonality|crs_route_agreement|totient_coherence")
      ->required();
  verify_cmd->add_option("--n-max", domain.n_max, "n range [1, n-max] (default 50)");
  verify_cmd->add_option("--s-min", domain.s_min, "smallest s (default 1)");
  verify_cmd->add_option("--s-max", domain.s_max, "largest s (default 2)");
  verify_cmd->add_option("--k-max", domain.k_max, "constrained positions (menon_general)");
  verify_cmd->add_option("--r-max", domain.r_max,
                         "unconstrained positions (menon_general) or modulus bound (crs)");
  verify_cmd->add_option("--j-max", domain.j_max, "j cap (lemma3) or |n| cap (orthogonality)");
  verify_cmd->add_option("--samples", domain.samples,
                         "a-vectors (menon_general) or psi tables (lemma2) per cell");
  verify_cmd->add_option("--seed", domain.seed, "Seed for sampled cells (default 0)");
  verify_cmd->add_option("--budget", domain.budget,
                         "Per-cell inner-loop budget (default 1e8)");
  verify_cmd->add_option("--jobs", verify_jobs,
                         "Worker threads (default: hardware concurrency)");
  verify_cmd->add_flag("--pretty", verify_pretty, "Human-readable summary");
  verify_cmd->add_flag("--inject-failure", domain.inject_failure, "")->group("");

  auto* bench = app.add_subcommand("bench", "Time the sieve, the CRS grid, or a Menon sweep");
  std::string bench_target;
  std::int64_t bench_size = 0;
  bool bench_pretty = false;
  bench->add_option("target", bench_target, "sieve|crs|menon")->required();
  bench->add_option("size", bench_size, "Sieve bound / grid size / n-max")->required();
  bench->add_flag("--pretty", bench_pretty, "Human-readable timing line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::string command = "?";
  try {
    if (compute->parsed()) {
      command = "compute";
      return run_compute(compute->remaining(), compute_s, compute->count("--s") > 0,
                         compute_route, compute->count("--route") > 0);
    }
    if (table->parsed()) {
      command = "table";
      return run_table(table_fn, table_max, table_s, table_format, table_out, table_pretty);
    }
    if (verify_cmd->parsed()) {
      command = "verify";
      return run_verify(verify_identity, domain, verify_jobs, verify_pretty);
    }
    command = "bench";
    return run_bench(bench_target, bench_size, bench_pretty);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "usage_error");
    return kExitUsage;
  } catch (const menonkit::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "usage_error");
    return kExitUsage;
  } catch (const menonkit::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "usage_error");
    return kExitUsage;
  } catch (const menonkit::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "numeric_error");
    return kExitNumeric;
  } catch (const menonkit::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "numeric_error");
    return kExitNumeric;
  } catch (const menonkit::internal_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_status_record(command, "numeric_error");
    return kExitNumeric;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: allocation failure\n";
    emit_status_record(command, "numeric_error");
    return kExitNumeric;
  }
}
