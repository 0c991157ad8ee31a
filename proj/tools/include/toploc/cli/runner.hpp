#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toploc/cli/session.hpp"
#include "toploc/toplocal/report_json.hpp"

namespace toploc::cli {

struct RunOptions {
  bool parallel = false;
  std::optional<unsigned> truncation;
  std::optional<std::size_t> budget;
};

enum class Outcome { Decided, Undecided, Failed };

struct QueryResult {
  Json json;
  std::string text;
  Outcome outcome = Outcome::Decided;
};

std::vector<QueryResult> run(const Session& session, const RunOptions& options = {});
QueryResult run_query(const Session& session, const Query& query, const Context& ctx);

/// 0 when every answer is decided, 2 when any is UNKNOWN/UNSTABLE/CONDITIONAL, 1 on errors.
int exit_code(const std::vector<QueryResult>& results);

Context make_context(const Session& session, const RunOptions& options = {});
ModuleSpec make_module(const Session& session, const std::string& name);

/// cd of every monomial ideal declared in the session, with its Betti table.
std::vector<QueryResult> run_cd_monomial(const Session& session, const Field& field);

}  // namespace toploc::cli
