// Command-line front end: parse an input document, run the full pipeline,
// and emit a machine-readable or human-readable report.
//
// Exit codes: 0 success; 1 invalid input; 2 failed theorem check or internal
// error (the verified statements are theorems, so a failure means a bug).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cokahler/cokahler.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cokahler::ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_checks(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_analyze(const std::string& input_path, const std::string& omega_path,
                const std::string& checks_csv, const std::string& format) {
  cokahler::InputSpec spec = cokahler::parse_input(read_file(input_path));
  if (!omega_path.empty()) {
    cokahler::Json j;
    try {
      j = cokahler::Json::parse(read_file(omega_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw cokahler::ParseError(e.what());
    }
    cokahler::Matrix omega = cokahler::detail::integer_matrix_from_json(j, "omega");
    cokahler::detail::validate_omega(omega, spec.n);
    spec.omega = std::move(omega);
  }
  if (!checks_csv.empty()) {
    std::vector<std::string> checks = split_checks(checks_csv);
    for (const std::string& name : checks) {
      bool known = false;
      for (const std::string& k : cokahler::known_check_names()) known = known || k == name;
      if (!known) throw cokahler::ValidationError("unknown check name '" + name + "'");
    }
    spec.checks = std::move(checks);
  }
  const cokahler::Report report = cokahler::run_pipeline(spec);
  std::cout << cokahler::render(report, format);
  if (!cokahler::all_checks_pass(report)) {
    std::cerr << "error: a proved theorem check failed; this indicates a bug in the library\n";
    return 2;
  }
  return 0;
}

int run_corpus_command(const std::string& name, const std::string& format) {
  const std::vector<cokahler::CorpusRun> runs = cokahler::run_corpus(name);
  bool all_ok = true;
  for (const cokahler::CorpusRun& run : runs) {
    std::cout << "=== corpus entry: " << run.entry.name << " ===\n";
    std::cout << run.entry.description << "\n";
    std::cout << cokahler::render(run.report, format);
    if (run.ok()) {
      std::cout << "expectations: OK\n";
    } else {
      all_ok = false;
      std::cout << "expectations: MISMATCH\n";
      for (const std::string& diff : run.mismatches) std::cerr << "  " << diff << "\n";
    }
  }
  if (!all_ok) {
    std::cerr << "error: corpus expectations failed; this indicates a bug in the library\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact topological invariants of co-Kahler mapping tori T^{2n}_A"};
  app.require_subcommand(1);

  std::string input_path, omega_path, checks_csv;
  std::string format = "text";
  std::string corpus_name = "all";

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one input document");
  analyze->add_option("--input", input_path, "input JSON document")->required();
  analyze->add_option("--omega", omega_path, "JSON file with a 2n x 2n skew integer matrix "
                                             "overriding the standard omega");
  analyze->add_option("--checks", checks_csv, "comma-separated subset of checks to run");
  analyze->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* corpus = app.add_subcommand("corpus", "run the built-in example corpus");
  corpus->add_option("--name", corpus_name,
                     "entry name (cdm, mp(n), identity(n), catmap) or 'all'");
  corpus->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(input_path, omega_path, checks_csv, format);
    return run_corpus_command(corpus_name, format);
  } catch (const cokahler::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cokahler::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
