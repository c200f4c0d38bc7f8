#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "logder/arrangement_io.hpp"
#include "logder/error.hpp"
#include "logder/report.hpp"
#include "logder/suite.hpp"
#include "logder/theorems.hpp"

using namespace logder;

namespace {

enum Exit { ok = 0, not_found = 1, input_error = 2, falsified = 3, budget = 4 };

struct Input {
  std::string file;
  std::string corpus_name;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Loaded {
  ArrangementFile file;
  std::string source;
};

Loaded load(const Input& in) {
  if (!in.corpus_name.empty()) {
    if (!in.file.empty()) throw ParseError("give either a file or --corpus, not both", 0, 0);
    auto e = corpus(in.corpus_name);
    return {{e.arrangement, e.distinguished}, format_arrangement(e.arrangement, e.distinguished)};
  }
  if (in.file.empty()) throw ParseError("no arrangement given (FILE or --corpus NAME)", 0, 0);
  std::string text = slurp(in.file);
  return {parse_arrangement(text), text};
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("file", in.file, "Arrangement file ('-' for stdin)");
  cmd->add_option("--corpus", in.corpus_name, "Use a named corpus arrangement instead of a file");
}

int write_repro(const FalsificationError& e, const std::string& source, const std::string& command,
                const std::string& dir) {
  nlohmann::ordered_json bundle;
  bundle["check"] = e.check();
  bundle["detail"] = e.detail();
  bundle["command"] = command;
  bundle["input"] = source;
  std::string path = (std::filesystem::path(dir) / "logder-repro.json").string();
  std::ofstream out(path);
  if (out) out << bundle.dump(2) << "\n";
  std::cerr << "falsification: " << e.what() << "\n";
  std::cerr << (out ? "reproduction bundle written to " + path : "could not write " + path) << "\n";
  return falsified;
}

void print_suite(const std::vector<CriterionResult>& results, bool json) {
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json c;
      c["id"] = r.info.id;
      c["name"] = r.info.name;
      c["pass"] = r.pass();
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"check", row.check}, {"expected", row.expected}, {"actual", row.actual}, {"pass", row.pass}});
      c["rows"] = rows;
      j.push_back(c);
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& r : results) {
    std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.info.id << " " << r.info.name << ": " << r.info.title
              << "\n";
    for (const auto& row : r.rows) {
      std::cout << "    " << (row.pass ? "ok  " : "FAIL") << " " << row.check << "\n";
      std::cout << "         expected: " << row.expected << "\n";
      std::cout << "         actual:   " << row.actual << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic derivation modules of hyperplane arrangements"};
  app.require_subcommand(1);
  std::string repro_dir = ".";
  app.add_option("--repro-dir", repro_dir, "Where to write the reproduction bundle on a falsification event")
      ->capture_default_str();

  Input analyze_in;
  bool json = false, dump = false, timing = false;
  int degree_scan = -1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Freeness, SPOG data, Betti numbers and per-hyperplane verdicts");
  add_input(analyze_cmd, analyze_in);
  analyze_cmd->add_flag("--json", json, "Machine-readable report");
  analyze_cmd->add_flag("--dump-derivations", dump, "List generators and relations in full");
  analyze_cmd->add_option("--degree-scan", degree_scan, "Check the Hilbert function against the slice oracle up to D")
      ->capture_default_str();
  analyze_cmd->add_flag("--timing", timing, "Include the elapsed time in the JSON report");

  Input certify_in;
  std::string mode = "stair-spog", output;
  std::size_t budget_limit = 20000;
  bool certify_json = false;
  auto* certify_cmd = app.add_subcommand("certify", "Search for a stair-free or stair-SPOG proof tree");
  add_input(certify_cmd, certify_in);
  certify_cmd->add_option("--mode", mode, "stair-free or stair-spog")
      ->check(CLI::IsMember({"stair-free", "stair-spog"}))
      ->capture_default_str();
  certify_cmd->add_option("--budget", budget_limit, "Node expansion limit")->capture_default_str();
  certify_cmd->add_option("-o,--output", output, "Also write the certificate (JSON) to this path");
  certify_cmd->add_flag("--json", certify_json, "Print the certificate as JSON instead of a tree");

  std::string certificate_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-verify a JSON certificate");
  replay_cmd->add_option("certificate", certificate_path, "Certificate file ('-' for stdin)")->required();

  bool list = false, perturb = false, suite_json = false;
  std::vector<int> only;
  std::size_t random_cases = 1000;
  auto* suite_cmd = app.add_subcommand("paper-suite", "Run the worked-example regression suite");
  suite_cmd->add_flag("--list", list, "Print criterion identifiers without running");
  suite_cmd->add_flag("--perturb", perturb, "Replace x1 - x2 + 2x3 - 2x4 in ex-4.2 by x1 - x2 + 2x3 - 3x4");
  suite_cmd->add_option("--criterion", only, "Run only these criteria");
  suite_cmd->add_option("--random-cases", random_cases, "Random arrangements in the property sweep")
      ->capture_default_str();
  suite_cmd->add_flag("--json", suite_json, "Machine-readable results");

  std::string corpus_name;
  auto* corpus_cmd = app.add_subcommand("corpus", "List corpus names, or print one arrangement file");
  corpus_cmd->add_option("name", corpus_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return input_error;
  }

  std::string source;
  std::string command;
  for (int k = 0; k < argc; ++k) command += (k ? " " : "") + std::string(argv[k]);
  try {
    if (*analyze_cmd) {
      auto in = load(analyze_in);
      source = in.source;
      Report r = analyze(in.file.arrangement, in.file.distinguished, {dump, degree_scan});
      std::cout << (json ? report_json(r, timing) : report_text(r));
      return ok;
    }
    if (*certify_cmd) {
      auto in = load(certify_in);
      source = in.source;
      StairSearch search(budget_limit);
      SearchResult r = mode == "stair-free" ? search.stair_free(in.file.arrangement)
                                            : search.stair_spog(in.file.arrangement);
      if (r.status == SearchResult::Status::budget_exhausted) {
        std::cout << "budget exhausted after " << r.expansions << " expansions\n";
        return budget;
      }
      if (r.status == SearchResult::Status::not_found) {
        std::cout << "no certificate found (" << r.expansions << " expansions)\n";
        return not_found;
      }
      std::cout << (certify_json ? r.certificate->to_json() : r.certificate->to_text());
      if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw Error("cannot write " + output);
        out << r.certificate->to_json();
      }
      return ok;
    }
    if (*replay_cmd) {
      auto c = Certificate::from_json(slurp(certificate_path));
      auto r = replay(c);
      std::cout << (r.ok ? "verified: " : "rejected: ") << r.message << "\n";
      return r.ok ? ok : not_found;
    }
    if (*suite_cmd) {
      if (list) {
        for (const auto& c : suite_criteria()) std::cout << c.id << " " << c.name << ": " << c.title << "\n";
        return ok;
      }
      SuiteOptions options;
      options.perturb = perturb;
      options.random_cases = random_cases;
      std::vector<CriterionResult> results;
      bool all = true;
      for (const auto& c : suite_criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        results.push_back(run_criterion(c.id, options));
        all = all && results.back().pass();
      }
      print_suite(results, suite_json);
      return all ? ok : not_found;
    }
    if (*corpus_cmd) {
      if (corpus_name.empty()) {
        for (const auto& n : corpus_names()) std::cout << n << "  " << corpus(n).description << "\n";
        return ok;
      }
      auto e = corpus(corpus_name);
      std::cout << "# " << e.description << "\n" << format_arrangement(e.arrangement, e.distinguished);
      return ok;
    }
  } catch (const FalsificationError& e) {
    return write_repro(e, source, command, repro_dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return input_error;
  } catch (const ArrangementError& e) {
    std::cerr << "invalid arrangement: " << e.what() << "\n";
    return input_error;
  } catch (const LatticeTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return falsified;
  }
  return ok;
}
