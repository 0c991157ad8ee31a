#include <algorithm>
#include <cctype>
#include <charconv>

#include "toploc/algebra/poly_parse.hpp"
#include "toploc/cli/session.hpp"
#include "toploc/variety/prime.hpp"

namespace toploc::cli {

namespace {

constexpr std::pair<QueryKind, std::string_view> kQueryNames[] = {
    {QueryKind::AttTop, "att_top"},           {QueryKind::SuppTop, "supp_top"},
    {QueryKind::Vanishes, "vanishes"},        {QueryKind::Classify, "classify"},
    {QueryKind::SemilocalAtt, "semilocal_att"}, {QueryKind::Structure, "structure"},
    {QueryKind::CdMonomial, "cd_monomial"},   {QueryKind::LowerBound, "lower_bound"},
    {QueryKind::AttCompletion, "att_completion"},
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Session run() {
    skip();
    if (!at_keyword("ring")) fail(ErrorCode::Syntax, "expected `ring` declaration");
    ring_decl();
    while (skip(), pos_ < src_.size()) {
      std::size_t start = pos_;
      std::string kw = ident("statement");
      if (kw == "ideal") ideal_decl();
      else if (kw == "module") module_decl();
      else if (kw == "hint") hint_decl();
      else if (kw == "query") query_decl();
      else if (kw == "option") option_decl();
      else if (kw == "ring") fail_at(start, ErrorCode::Syntax, "only one ring per session");
      else fail_at(start, ErrorCode::Syntax, "unknown statement `" + kw + "`");
    }
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail_at(std::size_t at, ErrorCode code, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(code, msg, line, col);
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { fail_at(pos_, code, msg); }

  int line_of(std::size_t at) const {
    return 1 + static_cast<int>(std::count(src_.begin(), src_.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(ErrorCode::Syntax, pos_ < src_.size() ? std::string("expected `") + c + "`, found `" + src_[pos_] + "`"
                                                 : std::string("expected `") + c + "` before end of input");
    }
  }

  bool at_keyword(std::string_view kw) {
    skip();
    if (src_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    return end >= src_.size() || !ident_char(src_[end]);
  }

  std::string ident(const char* what) {
    skip();
    if (pos_ >= src_.size() || !ident_start(src_[pos_])) fail(ErrorCode::Syntax, std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void keyword(std::string_view kw) {
    std::size_t at = (skip(), pos_);
    if (ident("keyword") != kw) fail_at(at, ErrorCode::Syntax, "expected `" + std::string(kw) + "`");
  }

  std::uint64_t number() {
    skip();
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc() || end == src_.data() + pos_) fail(ErrorCode::Syntax, "expected a non-negative integer");
    pos_ = static_cast<std::size_t>(end - src_.data());
    return value;
  }

  /// A polynomial ending at a depth-0 `,` `;` `)` or `]`.
  Poly poly() {
    skip();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '(') ++depth;
      if ((c == ')' || c == ']') && depth == 0) break;
      if (c == ')') --depth;
      if ((c == ',' || c == ';') && depth == 0) break;
      if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) break;
      ++pos_;
    }
    std::string_view text = src_.substr(start, pos_ - start);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail(ErrorCode::Syntax, "expected a polynomial");
    try {
      return parse_poly(s_.ring, text);
    } catch (const PolyParseError& e) {
      std::size_t at = e.offset() >= text.size() ? pos_ : start + e.offset();
      fail_at(at, e.code(), e.what());
    } catch (const Error& e) {
      fail_at(start, e.code(), e.what());
    }
  }

  std::vector<Poly> poly_list(char close) {
    std::vector<Poly> out;
    if (peek() == close) return out;
    do {
      out.push_back(poly());
    } while (accept(','));
    return out;
  }

  IdealHandle inline_ideal() {
    keyword("ideal");
    expect('(');
    std::vector<Poly> gens = poly_list(')');
    expect(')');
    return IdealHandle(s_.ring, std::move(gens));
  }

  std::string fresh_name(const char* what) {
    std::size_t at = (skip(), pos_);
    std::string name = ident(what);
    if (name == s_.ring_name || s_.find_ideal(name) || s_.find_module(name)) {
      fail_at(at, ErrorCode::Syntax, "`" + name + "` is already declared");
    }
    if (s_.ring->index_of(name)) fail_at(at, ErrorCode::Syntax, "`" + name + "` is a ring variable");
    return name;
  }

  IdealArg ideal_arg() {
    if (at_keyword("ideal")) return IdealArg{"", inline_ideal()};
    std::size_t at = (skip(), pos_);
    std::string name = ident("an ideal");
    if (const NamedIdeal* i = s_.find_ideal(name)) return IdealArg{name, i->ideal};
    if (s_.find_module(name)) fail_at(at, ErrorCode::TypeMismatch, "`" + name + "` is a module, expected an ideal");
    fail_at(at, ErrorCode::UnknownIdentifier, "unknown ideal `" + name + "`");
  }

  std::string module_arg() {
    std::size_t at = (skip(), pos_);
    std::string name = ident("a module");
    if (s_.find_module(name)) return name;
    if (s_.find_ideal(name)) fail_at(at, ErrorCode::TypeMismatch, "`" + name + "` is an ideal, expected a module");
    fail_at(at, ErrorCode::UnknownIdentifier, "unknown module `" + name + "`");
  }

  void ring_decl() {
    keyword("ring");
    s_.ring_name = ident("ring name");
    expect('=');
    std::size_t at = (skip(), pos_);
    std::string fname = ident("a field (QQ or F<p>)");
    Field field = Field::rationals();
    if (fname == "QQ") {
      field = Field::rationals();
    } else if (fname.size() > 1 && fname[0] == 'F' &&
               std::all_of(fname.begin() + 1, fname.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      unsigned long p = std::stoul(fname.substr(1));
      if (!is_prime_number(p) || p >= (1ul << 31)) fail_at(at, ErrorCode::Syntax, fname + " is not a prime field");
      field = Field::prime(static_cast<std::uint32_t>(p));
    } else {
      fail_at(at, ErrorCode::Syntax, "unknown field `" + fname + "`");
    }
    expect('[');
    std::vector<std::string> vars;
    do {
      std::size_t vat = (skip(), pos_);
      std::string v = ident("a variable");
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) fail_at(vat, ErrorCode::Syntax, "duplicate variable `" + v + "`");
      if (v == s_.ring_name) fail_at(vat, ErrorCode::Syntax, "variable shadows the ring name");
      vars.push_back(v);
    } while (accept(','));
    expect(']');
    if (vars.size() > 16) fail(ErrorCode::Unsupported, "at most 16 variables are supported");
    MonomialOrder order = MonomialOrder::degrevlex();
    if (at_keyword("order")) {
      keyword("order");
      std::size_t oat = (skip(), pos_);
      std::string o = ident("a monomial order");
      if (o == "lex") order = MonomialOrder::lex();
      else if (o != "degrevlex") fail_at(oat, ErrorCode::Syntax, "unknown order `" + o + "`");
    }
    s_.ring = make_ring(field, vars, order);
    if (at_keyword("local")) {
      keyword("local");
      keyword("at");
      std::size_t lat = (skip(), pos_);
      expect('(');
      std::vector<Poly> gens = poly_list(')');
      expect(')');
      IdealHandle m(s_.ring, std::move(gens));
      auto cert = certify_prime(m);
      if (!cert || !cert->is_maximal()) {
        fail_at(lat, ErrorCode::Precondition, "`local at` needs a maximal ideal of a rational point");
      }
      s_.local_at = m;
    }
    expect(';');
  }

  void ideal_decl() {
    std::string name = fresh_name("ideal name");
    expect('=');
    IdealHandle ideal = at_keyword("ideal") ? inline_ideal() : IdealHandle(s_.ring, poly_list(';'));
    expect(';');
    s_.ideals.push_back(NamedIdeal{name, ideal});
  }

  void module_decl() {
    std::string name = fresh_name("module name");
    expect('=');
    std::size_t at = (skip(), pos_);
    if (ident("ring name") != s_.ring_name) fail_at(at, ErrorCode::UnknownIdentifier, "unknown ring");
    expect('/');
    IdealArg quotient = ideal_arg();
    expect(';');
    s_.modules.push_back(NamedModule{name, quotient});
  }

  void hint_decl() {
    keyword("minprimes");
    expect('(');
    IdealArg target = ideal_arg();
    expect(')');
    expect('=');
    expect('[');
    std::vector<IdealHandle> comps;
    if (peek() != ']') {
      do {
        comps.push_back(inline_ideal());
      } while (accept(','));
    }
    expect(']');
    expect(';');
    s_.hints.push_back(Hint{target, comps});
  }

  void option_decl() {
    std::size_t at = (skip(), pos_);
    std::string key = ident("an option name");
    expect('=');
    if (key == "truncation") {
      std::uint64_t n = number();
      if (n < 2 || n > 64) fail_at(at, ErrorCode::Syntax, "truncation must lie in [2, 64]");
      s_.options.truncation = static_cast<unsigned>(n);
    } else if (key == "budget") {
      s_.options.budget = number();
    } else if (key == "field") {
      std::size_t fat = (skip(), pos_);
      std::string f = ident("QQ or F2");
      if (f == "QQ") s_.options.field = Field::rationals();
      else if (f == "F2") s_.options.field = Field::prime(2);
      else fail_at(fat, ErrorCode::Syntax, "homology field must be QQ or F2");
    } else {
      fail_at(at, ErrorCode::Syntax, "unknown option `" + key + "`");
    }
    expect(';');
  }

  void query_decl() {
    std::size_t at = (skip(), pos_);
    std::string name = ident("a query");
    auto kind = query_kind(name);
    if (!kind) fail_at(at, ErrorCode::UnknownIdentifier, "unknown query `" + name + "`");
    Query q{*kind, {}, "", 0, line_of(at)};
    expect('(');
    switch (*kind) {
      case QueryKind::Classify:
        do {
          q.ideals.push_back(ideal_arg());
        } while (accept(','));
        expect(';');
        q.module = module_arg();
        break;
      case QueryKind::SemilocalAtt:
        expect('[');
        do {
          q.ideals.push_back(ideal_arg());
        } while (accept(','));
        expect(']');
        expect(';');
        q.module = module_arg();
        break;
      case QueryKind::CdMonomial:
        q.ideals.push_back(ideal_arg());
        break;
      case QueryKind::LowerBound:
        q.ideals.push_back(ideal_arg());
        expect(',');
        q.module = module_arg();
        expect(',');
        q.c = static_cast<int>(number());
        break;
      default:
        q.ideals.push_back(ideal_arg());
        expect(',');
        q.module = module_arg();
        break;
    }
    expect(')');
    expect(';');
    s_.queries.push_back(std::move(q));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Session s_;
};

std::string poly_list_text(const std::vector<Poly>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  return out;
}

std::string ideal_text(const IdealHandle& ideal) {
  return ideal.is_zero() ? "ideal(0)" : "ideal(" + poly_list_text(ideal.generators()) + ")";
}

std::string arg_text(const IdealArg& arg) { return arg.name.empty() ? ideal_text(arg.ideal) : arg.name; }

}  // namespace

std::string_view query_name(QueryKind kind) noexcept {
  for (const auto& [k, name] : kQueryNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<QueryKind> query_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kQueryNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const NamedIdeal* Session::find_ideal(std::string_view name) const {
  auto it = std::find_if(ideals.begin(), ideals.end(), [&](const NamedIdeal& i) { return i.name == name; });
  return it == ideals.end() ? nullptr : &*it;
}

const NamedModule* Session::find_module(std::string_view name) const {
  auto it = std::find_if(modules.begin(), modules.end(), [&](const NamedModule& m) { return m.name == name; });
  return it == modules.end() ? nullptr : &*it;
}

Session parse(std::string_view source) { return Parser(source).run(); }

std::string print(const Session& s) {
  std::string out = "ring " + s.ring_name + " = " + s.ring->field().name() + "[";
  for (std::size_t i = 0; i < s.ring->nvars(); ++i) {
    if (i) out += ",";
    out += s.ring->variables()[i];
  }
  out += "] order ";
  out += s.ring->order() == MonomialOrder::lex() ? "lex" : "degrevlex";
  if (s.local_at) out += " local at (" + poly_list_text(s.local_at->generators()) + ")";
  out += ";\n";
  if (s.options.truncation != 8) out += "option truncation = " + std::to_string(s.options.truncation) + ";\n";
  if (s.options.budget) out += "option budget = " + std::to_string(*s.options.budget) + ";\n";
  if (s.options.field.kind() == FieldKind::Rationals) out += "option field = QQ;\n";
  for (const NamedIdeal& i : s.ideals) {
    out += "ideal " + i.name + " = " + (i.ideal.is_zero() ? "ideal(0)" : poly_list_text(i.ideal.generators())) + ";\n";
  }
  for (const NamedModule& m : s.modules) out += "module " + m.name + " = " + s.ring_name + " / " + arg_text(m.quotient) + ";\n";
  for (const Hint& h : s.hints) {
    out += "hint minprimes(" + arg_text(h.target) + ") = [";
    for (std::size_t i = 0; i < h.components.size(); ++i) {
      if (i) out += ", ";
      out += ideal_text(h.components[i]);
    }
    out += "];\n";
  }
  for (const Query& q : s.queries) {
    out += "query " + std::string(query_name(q.kind)) + "(";
    auto args = [&](const char* open, const char* close) {
      out += open;
      for (std::size_t i = 0; i < q.ideals.size(); ++i) {
        if (i) out += ", ";
        out += arg_text(q.ideals[i]);
      }
      out += close;
    };
    switch (q.kind) {
      case QueryKind::Classify: args("", "; " ); out += q.module; break;
      case QueryKind::SemilocalAtt: args("[", "]; "); out += q.module; break;
      case QueryKind::CdMonomial: args("", ""); break;
      case QueryKind::LowerBound: args("", ", "); out += q.module + ", " + std::to_string(q.c); break;
      default: args("", ", "); out += q.module; break;
    }
    out += ");\n";
  }
  return out;
}

}  // namespace toploc::cli
