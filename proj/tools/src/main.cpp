#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toploc/cli/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const std::vector<toploc::cli::QueryResult>& results, bool json) {
  for (const auto& r : results) {
    if (json) std::cout << r.json.dump() << "\n";
    else std::cout << r.text << "\n";
  }
  return toploc::cli::exit_code(results);
}

int report_parse_error(const std::string& file, const toploc::cli::ParseError& e, bool json) {
  if (json) {
    toploc::Json out{{"schema", 1},
                     {"error",
                      {{"code", std::string(toploc::error_code_name(e.code()))},
                       {"message", e.what()},
                       {"line", e.line()},
                       {"column", e.column()}}}};
    std::cout << out.dump() << "\n";
  }
  std::cerr << file << ":" << e.line() << ":" << e.column() << ": error " << toploc::error_code_name(e.code()) << ": "
            << e.what() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toploc: top local cohomology of finitely generated modules"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool parallel = false;
  unsigned truncation = 0;
  std::size_t budget = 0;
  auto* run = app.add_subcommand("run", "Evaluate the queries of a session file");
  run->add_option("file", file, "Session file")->required()->check(CLI::ExistingFile);
  run->add_flag("--json", json, "One JSON object per query");
  run->add_option("--truncation", truncation, "Series truncation order N")->check(CLI::Range(2u, 64u));
  run->add_option("--budget", budget, "Reduction step budget for Groebner computations")->check(CLI::PositiveNumber);
  run->add_flag("--parallel", parallel, "Run queries concurrently");

  std::string field = "F2";
  auto* cdm = app.add_subcommand("cd-monomial", "Cohomological dimension of every monomial ideal in a session file");
  cdm->add_option("file", file, "Session file")->required()->check(CLI::ExistingFile);
  cdm->add_option("--field", field, "Homology field")->check(CLI::IsMember({"F2", "QQ"}));
  cdm->add_flag("--json", json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    toploc::cli::Session session = toploc::cli::parse(read_file(file));
    if (*run) {
      toploc::cli::RunOptions opts;
      opts.parallel = parallel;
      if (truncation) opts.truncation = truncation;
      if (budget) opts.budget = budget;
      return emit(toploc::cli::run(session, opts), json);
    }
    toploc::Field f = field == "QQ" ? toploc::Field::rationals() : toploc::Field::prime(2);
    return emit(toploc::cli::run_cd_monomial(session, f), json);
  } catch (const toploc::cli::ParseError& e) {
    return report_parse_error(file, e, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
