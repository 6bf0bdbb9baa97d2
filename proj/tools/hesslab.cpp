// Command-line surface: one JSON query document in, one JSON report out.
// Subcommands mirror the engine operations; verify-corpus runs the shipped
// fixture suites and check-certificate re-verifies a stored report.

#include <hesslab/reports.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using hesslab::Json;

Json load_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin, nullptr, true, true);
  std::ifstream in(path);
  if (!in) throw hesslab::JsonError("cannot open input file " + path);
  return Json::parse(in, nullptr, true, true);
}

void render_table(const Json& report, std::ostream& os) {
  if (report.contains("error")) {
    os << "error: " << report.at("error").get<std::string>() << "\n";
    return;
  }
  if (report.contains("verdicts")) {
    for (const auto& [key, value] : report.at("verdicts").items())
      os << key << "\t" << value.dump() << "\n";
  }
  if (report.contains("certificates") && report.at("certificates").contains("reason"))
    os << "reason\t" << report.at("certificates").at("reason").get<std::string>() << "\n";
  if (report.contains("profile")) os << "profile\t" << report.at("profile").dump() << "\n";
}

std::string default_fixtures_dir(const char* argv0) {
  // look next to the binary, then in the working directory
  std::string self(argv0 ? argv0 : "");
  const auto slash = self.find_last_of('/');
  const std::string bindir = slash == std::string::npos ? "." : self.substr(0, slash);
  for (const std::string& cand : {bindir + "/../../fixtures", bindir + "/../fixtures", std::string("fixtures")}) {
    std::ifstream probe(cand + "/table1.json");
    if (probe) return cand;
  }
  return "fixtures";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification engine for Hessenberg/Schubert equality questions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string fixtures_dir = default_fixtures_dir(argv[0]);
  hesslab::RunOptions opts;
  long long seed = -1;
  int budget_degree = -1;
  long long budget_terms = -1;
  bool timings = false;

  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--fixtures", fixtures_dir, "fixture corpus directory");
  app.add_option("--seed", seed, "seed for randomized sweeps and witnesses");
  app.add_option("--budget-degree", budget_degree, "Groebner degree budget override");
  app.add_option("--budget-terms", budget_terms, "Groebner term budget override");
  app.add_flag("--timings", timings, "include timings in reports (breaks byte-determinism)");

  std::map<std::string, CLI::App*> query_cmds;
  std::map<std::string, std::string> query_inputs;
  for (const std::string name :
       {"equality", "profile", "euler", "poincare", "lift", "hw", "avoiders"}) {
    CLI::App* sub = app.add_subcommand(name, "run a " + name + " query document");
    sub->fallthrough();
    query_inputs[name] = "-";
    sub->add_option("input", query_inputs[name], "query document path (or - for stdin)");
    query_cmds[name] = sub;
  }

  CLI::App* verify = app.add_subcommand("verify-corpus", "run a shipped fixture corpus");
  verify->fallthrough();
  std::string corpus_name;
  int instances = 2500;
  verify->add_option("name", corpus_name, "table1 | examples | folding | formulas | all")
      ->required();
  verify->add_option("--instances", instances,
                     "randomized sweep size per negative classification row");

  CLI::App* check = app.add_subcommand("check-certificate", "re-verify a stored report");
  check->fallthrough();
  std::string report_path = "-";
  check->add_option("report", report_path, "report document path (or - for stdin)");

  CLI11_PARSE(app, argc, argv);

  opts.timings = timings;
  if (seed >= 0) opts.seed = static_cast<uint64_t>(seed);
  if (budget_degree >= 0) opts.budget_degree = budget_degree;
  if (budget_terms >= 0) opts.budget_terms = budget_terms;
  opts.no_row_instances = instances;

  try {
    for (const auto& [name, sub] : query_cmds) {
      if (!sub->parsed()) continue;
      Json query;
      try {
        query = load_json(query_inputs[name]);
      } catch (const std::exception& e) {
        Json err{{"tool", {{"name", hesslab::kToolName}, {"version", hesslab::kToolVersion}}},
                 {"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 3;
      }
      query["query"] = name;
      hesslab::RunResult res = hesslab::run(query, opts);
      if (format == "table")
        render_table(res.report, std::cout);
      else
        std::cout << res.report.dump(2) << "\n";
      return res.exit_code;
    }

    if (verify->parsed()) {
      std::vector<std::string> names;
      if (corpus_name == "all")
        names = {"table1", "examples", "folding", "formulas"};
      else
        names = {corpus_name};
      bool all_pass = true;
      for (const std::string& name : names) {
        hesslab::CorpusResult res = hesslab::verify_corpus(name, fixtures_dir, opts);
        for (const auto& line : res.lines) {
          std::cout << (line.pass ? "PASS" : "FAIL") << "  [" << name << "] " << line.id;
          if (!line.detail.empty()) std::cout << "  (" << line.detail << ")";
          std::cout << "\n";
        }
        if (!res.all_pass()) all_pass = false;
      }
      return all_pass ? 0 : 1;
    }

    if (check->parsed()) {
      Json report;
      try {
        report = load_json(report_path);
      } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
      }
      hesslab::RunResult res = hesslab::check_certificate(report);
      if (format == "table") {
        const auto& chk = res.report.at("check");
        std::cout << (chk.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : chk.at("failures")) std::cout << "  " << f.get<std::string>() << "\n";
      } else {
        std::cout << res.report.dump(2) << "\n";
      }
      return res.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
