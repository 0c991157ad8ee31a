#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toploc/error.hpp"
#include "toploc/groebner/ideal.hpp"

namespace toploc::cli {

/// An ideal argument: a declared name, or an inline `ideal(...)` when name is empty.
struct IdealArg {
  std::string name;
  IdealHandle ideal;
};

struct NamedIdeal {
  std::string name;
  IdealHandle ideal;
};

struct NamedModule {
  std::string name;
  IdealArg quotient;
};

struct Hint {
  IdealArg target;
  std::vector<IdealHandle> components;
};

enum class QueryKind {
  AttTop,
  SuppTop,
  Vanishes,
  Classify,
  SemilocalAtt,
  Structure,
  CdMonomial,
  LowerBound,
  AttCompletion,
};

std::string_view query_name(QueryKind kind) noexcept;
std::optional<QueryKind> query_kind(std::string_view name) noexcept;

struct Query {
  QueryKind kind;
  std::vector<IdealArg> ideals;
  std::string module;  // empty for cd_monomial
  int c = 0;           // lower_bound only
  int line = 0;
};

struct Options {
  unsigned truncation = 8;
  std::optional<std::size_t> budget;
  Field field = Field::prime(2);
};

struct Session {
  std::string ring_name;
  Ring ring;
  std::optional<IdealHandle> local_at;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedModule> modules;
  std::vector<Hint> hints;
  std::vector<Query> queries;
  Options options;

  const NamedIdeal* find_ideal(std::string_view name) const;
  const NamedModule* find_module(std::string_view name) const;
};

/// Error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, message), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

Session parse(std::string_view source);

/// Canonical source text; parse(print(s)) reproduces s.
std::string print(const Session& session);

}  // namespace toploc::cli
