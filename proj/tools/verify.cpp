// verify: runs the check catalogue, lists it, and loads or writes algebras as JSON.
//
// exit codes: 0 all selected checks pass, 1 a check failed or an input was
// rejected by an axiom, 2 usage / config / unknown id, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "contra/contra.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

constexpr const char* config_env = "CONTRA_VERIFY_CONFIG";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

contra::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return contra::json::parse(in);
  } catch (const contra::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

contra::RunConfig load_config(const std::string& path) {
  std::string chosen = path;
  if (chosen.empty()) {
    if (const char* env = std::getenv(config_env)) chosen = env;
  }
  if (chosen.empty()) return {};
  try {
    return contra::config_from_json(read_json_file(chosen));
  } catch (const std::invalid_argument& e) {
    throw UsageError(chosen + ": " + e.what());
  }
}

void print_text(const contra::RunResult& result, std::ostream& out) {
  for (const auto& r : result.reports) {
    out << std::left << std::setw(20) << ("[" + std::string(contra::to_string(r.status)) + "]") << r.id << "  ("
        << std::fixed << std::setprecision(3) << r.elapsed.count() << " s)\n";
    if (r.passed()) continue;
    if (r.witnesses.contains("failures")) {
      for (const auto& f : r.witnesses["failures"]) out << "    - " << f["what"].get<std::string>() << "\n";
    }
    if (r.witnesses.contains("precondition")) {
      out << "    - precondition: " << r.witnesses["precondition"]["what"].get<std::string>() << "\n";
    }
  }
  const contra::json summary = contra::report_json(result, false)["summary"];
  out << summary["total"] << " checks: " << summary["pass"] << " pass, " << summary["fail"] << " fail, "
      << summary["precondition_failed"] << " precondition-failed\n";
}

int run_command(const std::string& config_path, const std::vector<int>& primes, const std::vector<std::string>& ids,
                const std::vector<std::string>& tags, const std::string& json_path, unsigned jobs, bool allow_large,
                bool quiet) {
  contra::RunConfig config = load_config(config_path);
  if (!primes.empty()) config.primes = primes;
  if (!json_path.empty()) config.json_path = json_path;
  if (jobs != 0) config.jobs = jobs;
  if (allow_large) config.allow_large = true;
  try {
    contra::validate_config(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto catalogue = contra::build_catalogue(config);
  std::vector<std::string> unknown;
  const auto selected = contra::select_checks(catalogue, ids, tags, unknown);
  if (!unknown.empty()) {
    std::string list;
    for (const auto& u : unknown) list += " " + u;
    throw UsageError("unknown check id:" + list + " (see `verify list`)");
  }
  if (selected.empty()) throw UsageError("the selection matches no checks");

  contra::Fixtures fixtures(config.policy);
  const contra::RunResult result = contra::run_checks(selected, fixtures, config.jobs);
  if (!quiet) print_text(result, std::cout);
  if (!config.json_path.empty()) {
    std::ofstream out(config.json_path);
    if (!out) throw UsageError("cannot write " + config.json_path);
    out << contra::report_json(result).dump(2) << "\n";
  }
  for (const auto& e : result.internal_errors) std::cerr << "internal error in " << e << "\n";
  if (!result.internal_errors.empty()) return exit_internal;
  return result.all_passed() ? exit_pass : exit_fail;
}

int list_command(const std::vector<int>& primes, bool allow_large) {
  contra::RunConfig config;
  if (!primes.empty()) config.primes = primes;
  config.allow_large = allow_large;
  try {
    contra::validate_config(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& e : contra::build_catalogue(config)) {
    std::string tags;
    for (const auto& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
    std::cout << std::left << std::setw(40) << e.id << " [" << tags << "]  " << e.anchor << "\n";
  }
  return exit_pass;
}

int ingest_command(const std::string& path) {
  const contra::json j = read_json_file(path);
  try {
    if (contra::has_hopf_fields(j)) {
      const contra::HopfData h = contra::hopf_from_json(j);
      std::cout << path << ": Hopf algebra of dim " << h.dim() << ", axioms pass\n";
    } else {
      const contra::StructureAlgebra a = contra::algebra_from_json(j);
      std::cout << path << ": algebra of dim " << a.dim() << ", axioms pass\n";
    }
  } catch (const contra::AxiomError& e) {
    std::cout << path << ": rejected, axiom '" << e.axiom() << "' fails\n";
    if (!e.witness().is_null()) std::cout << "  witness: " << e.witness().dump() << "\n";
    return exit_fail;
  } catch (const std::exception& e) {
    throw UsageError(path + ": schema error: " + e.what());
  }
  return exit_pass;
}

int export_command(int taft_p, int group_n, bool dual, const std::string& out_path) {
  if ((taft_p == 0) == (group_n == 0)) throw UsageError("export needs exactly one of --taft or --group");
  std::optional<contra::HopfData> h;
  try {
    h.emplace(taft_p != 0 ? contra::taft(taft_p, contra::Fixtures::xi(taft_p)) : contra::group_algebra(group_n));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (dual) h.emplace(contra::dual_hopf(*h));
  const std::string text = contra::to_json(*h).dump(1) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for anti-Yetter-Drinfeld contramodule algebras"};
  app.require_subcommand(1);

  std::string config_path, json_path;
  std::vector<int> primes;
  std::vector<std::string> ids, tags;
  unsigned jobs = 0;
  bool all = false, allow_large = false, quiet = false;

  CLI::App* run = app.add_subcommand("run", "run checks from the catalogue");
  run->add_flag("--all", all, "run every check (the default when nothing is selected)");
  run->add_option("--id", ids, "check id or name; repeatable")->take_all();
  run->add_option("--tag", tags, "run checks carrying the tag; repeatable")->take_all();
  run->add_option("--p", primes, "Taft primes, e.g. 2,3")->delimiter(',');
  run->add_option("--json", json_path, "write the JSON report here");
  run->add_option("--config", config_path, std::string("config file (default: $") + config_env + ")");
  run->add_option("--jobs", jobs, "worker threads (0: all cores)");
  run->add_flag("--allow-large", allow_large, "permit primes above 3");
  run->add_flag("-q,--quiet", quiet, "no text report");

  CLI::App* list = app.add_subcommand("list", "list the catalogue");
  list->add_option("--p", primes, "Taft primes")->delimiter(',');
  list->add_flag("--allow-large", allow_large, "permit primes above 3");

  std::string ingest_path;
  CLI::App* ingest = app.add_subcommand("ingest", "load an algebra or Hopf algebra from JSON and check its axioms");
  ingest->add_option("file", ingest_path, "JSON file")->required();

  int taft_p = 0, group_n = 0;
  bool dual = false;
  std::string out_path;
  CLI::App* exporter = app.add_subcommand("export", "write a built-in Hopf algebra as JSON");
  exporter->add_option("--taft", taft_p, "Taft algebra T_p(xi) for prime p");
  exporter->add_option("--group", group_n, "group algebra of Z/n");
  exporter->add_flag("--dual", dual, "write the dual Hopf algebra instead");
  exporter->add_option("-o,--output", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*run) {
      if (all && (!ids.empty() || !tags.empty())) throw UsageError("--all cannot be combined with --id or --tag");
      return run_command(config_path, primes, ids, tags, json_path, jobs, allow_large, quiet);
    }
    if (*list) return list_command(primes, allow_large);
    if (*ingest) return ingest_command(ingest_path);
    if (*exporter) return export_command(taft_p, group_n, dual, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}
