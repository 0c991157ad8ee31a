#include "toploc/cli/runner.hpp"

#include <future>
#include <sstream>

#include "toploc/groebner/groebner.hpp"
#include "toploc/variety/minimal_primes.hpp"

namespace toploc::cli {

namespace {

std::string route_text(const std::string& route) {
  static const std::pair<const char*, const char*> kRoutes[] = {
      {"cd-below-dim-for-all-assh", "H^d vanishes iff cd(a, R/p) < d for every p in Assh M"},
      {"generator-count", "a is generated by fewer than dim R/p elements modulo p"},
      {"isolated-point", "m is an isolated point of V(a + p)"},
      {"unique-analytic-prime", "p is analytically irreducible at m and m is not isolated in V(a + p)"},
      {"branch-test", "each analytic branch of p at m tested for an isolated zero of a"},
      {"unknown-certificate", "analytic branches of p at m not certified"},
      {"local-cd-at-candidate-points", "cd(a, R/p) = dim R/p checked at every maximal ideal where it can occur"},
      {"local-cd-at-localization-point", "cd(a, R/p) = dim R/p checked at the localizing maximal ideal"},
      {"ideal-not-in-localization", "a is the unit ideal in the local ring"},
  };
  for (const auto& [id, text] : kRoutes) {
    if (route == id) return route + " (" + text + ")";
  }
  return route;
}

std::string primes_text(const std::vector<PrimeCert>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out + "}";
}

std::string tag_text(const AnalyticPrimeTag& t) {
  return "(" + t.m.to_string() + ", " + t.p.to_string() + ", " + t.branch + ")";
}

std::string tags_text(const std::vector<AnalyticPrimeTag>& ts) {
  std::string out = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += tag_text(ts[i]);
  }
  return out + "}";
}

std::string flag_text(bool conditional, bool incomplete) {
  std::string out;
  if (conditional) out += " [CONDITIONAL]";
  if (incomplete) out += " [INCOMPLETE]";
  return out;
}

std::string arg_text(const IdealArg& arg) { return arg.name.empty() ? arg.ideal.to_string() : arg.name; }

std::string call_text(const Query& q) {
  std::string out = std::string(query_name(q.kind)) + "(";
  if (q.kind == QueryKind::SemilocalAtt) out += "[";
  for (std::size_t i = 0; i < q.ideals.size(); ++i) {
    if (i) out += ", ";
    out += arg_text(q.ideals[i]);
  }
  if (q.kind == QueryKind::SemilocalAtt) out += "]";
  if (!q.module.empty()) out += (q.kind == QueryKind::Classify || q.kind == QueryKind::SemilocalAtt ? "; " : ", ") + q.module;
  if (q.kind == QueryKind::LowerBound) out += ", " + std::to_string(q.c);
  return out + ")";
}

Json header(const Query& q) {
  Json args = Json::array();
  for (const IdealArg& a : q.ideals) args.push_back(arg_text(a));
  if (!q.module.empty()) args.push_back(q.module);
  if (q.kind == QueryKind::LowerBound) args.push_back(q.c);
  return Json{{"schema", 1}, {"query", std::string(query_name(q.kind))}, {"args", args}};
}

QueryResult finish(const Query& q, Json body, std::string text, bool decided) {
  Json out = header(q);
  for (auto& [k, v] : body.items()) out[k] = v;
  return QueryResult{std::move(out), call_text(q) + ": " + text, decided ? Outcome::Decided : Outcome::Undecided};
}

void local_lines(std::ostringstream& os, const CdResult& r) {
  os << "\n  p = " << r.p.to_string() << ": cd = dim R/p " << r.value.name() << flag_text(r.value.conditional, !r.candidates_complete)
     << "\n    via " << route_text(r.route);
  for (const LocalCd& l : r.local) {
    os << "\n    at m = " << l.m.to_string() << ": " << l.value.name() << " via " << route_text(l.route);
    for (const TagVerdict& t : l.tags) {
      os << "\n      branch " << t.tag.branch << ": " << t.survives.name();
      if (t.branch) os << "  " << t.branch->to_string();
    }
  }
  if (!r.note.empty()) os << "\n    note: " << r.note;
}

QueryResult cd_monomial_result(const Query& q, const IdealHandle& ideal, const Field& field) {
  int cd = cd_monomial(ideal, field);
  BettiTable table = betti_table(squarefree_radical(ideal), field);
  Json body{{"field", field.name()}, {"cd", cd}};
  std::ostringstream os;
  os << "cd = " << cd << " over " << field.name();
  if (field.is_prime_field()) {
    int cd_q = cd_monomial(ideal, Field::rationals());
    body["cd_QQ"] = cd_q;
    if (cd_q != cd) os << " (differs over QQ: " << cd_q << ")";
  }
  body["betti"] = to_json(table, ideal.ring());
  os << "\n  betti totals:";
  for (std::size_t b : table.totals) os << " " << b;
  return finish(q, std::move(body), os.str(), true);
}

}  // namespace

Context make_context(const Session& session, const RunOptions& options) {
  Context ctx;
  ctx.truncation = options.truncation.value_or(session.options.truncation);
  for (const Hint& h : session.hints) ctx.hints.add(h.target.ideal, h.components);
  return ctx;
}

ModuleSpec make_module(const Session& session, const std::string& name) {
  const NamedModule* m = session.find_module(name);
  if (!m) throw Error(ErrorCode::UnknownIdentifier, "unknown module `" + name + "`");
  std::optional<PrimeCert> local;
  if (session.local_at) local = certify_prime(*session.local_at);
  return ModuleSpec(m->quotient.ideal, local);
}

QueryResult run_query(const Session& session, const Query& q, const Context& ctx) {
  try {
    std::ostringstream os;
    switch (q.kind) {
      case QueryKind::Vanishes: {
        VanishReport r = vanishes_top(q.ideals[0].ideal, make_module(session, q.module), ctx);
        os << r.value.name() << flag_text(r.value.conditional, false) << "\n  route: " << route_text(r.route)
           << "\n  Att = " << primes_text(r.att.att) << " inside Assh M = " << primes_text(r.att.assh.primes)
           << ", d = " << r.att.assh.d;
        if (r.witness) {
          os << "\n  witness: p = " << r.witness->p.to_string() << ", m = " << r.witness->m.to_string() << " via "
             << route_text(r.witness->route);
        }
        for (const CdResult& c : r.att.per_prime) local_lines(os, c);
        return finish(q, to_json(r), os.str(), r.value.decided());
      }
      case QueryKind::AttTop: {
        AttReport r = att_top(q.ideals[0].ideal, make_module(session, q.module), ctx);
        os << primes_text(r.att) << flag_text(r.conditional, !r.possible.empty());
        if (!r.possible.empty()) os << "\n  undecided: " << primes_text(r.possible);
        os << "\n  Assh M = " << primes_text(r.assh.primes) << ", d = " << r.assh.d;
        for (const CdResult& c : r.per_prime) local_lines(os, c);
        return finish(q, to_json(r), os.str(), !r.conditional && r.possible.empty());
      }
      case QueryKind::SuppTop: {
        SuppReport r = supp_top(q.ideals[0].ideal, make_module(session, q.module), ctx);
        os << primes_text(r.support) << flag_text(r.conditional, !r.complete);
        if (!r.possible.empty()) os << "\n  undecided: " << primes_text(r.possible);
        return finish(q, to_json(r), os.str(), !r.conditional && r.complete);
      }
      case QueryKind::AttCompletion: {
        CompletionReport r = att_top_completion(q.ideals[0].ideal, make_module(session, q.module), ctx);
        os << tags_text(r.tags) << flag_text(r.conditional, r.incomplete);
        if (!r.unknown.empty()) os << "\n  undecided: " << tags_text(r.unknown);
        return finish(q, to_json(r), os.str(), !r.conditional && !r.incomplete);
      }
      case QueryKind::Structure: {
        StructureReport r = structure_report(q.ideals[0].ideal, make_module(session, q.module), ctx);
        os << "support " << primes_text(r.support) << flag_text(r.conditional, r.incomplete)
           << "\n  radical of support: " << r.support_radical.to_string()
           << "\n  surviving: " << tags_text(r.surviving) << "\n  killed: " << tags_text(r.killed);
        if (!r.undecided.empty()) os << "\n  undecided: " << tags_text(r.undecided);
        return finish(q, to_json(r), os.str(), !r.conditional && !r.incomplete);
      }
      case QueryKind::SemilocalAtt: {
        std::vector<PrimeCert> ms;
        for (const IdealArg& a : q.ideals) {
          auto cert = certify_prime(a.ideal);
          if (!cert || !cert->is_maximal()) throw Error(ErrorCode::Precondition, arg_text(a) + " is not a rational maximal ideal");
          ms.push_back(*cert);
        }
        SemilocalReport r = att_top_semilocal(ms, make_module(session, q.module), ctx);
        os << primes_text(r.att) << flag_text(r.assh.conditional, false) << "\n  a = " << r.a.to_string();
        for (const auto& [p, m] : r.witnesses) os << "\n  " << p.to_string() << " inside " << m.to_string();
        return finish(q, to_json(r), os.str(), !r.assh.conditional);
      }
      case QueryKind::Classify: {
        std::vector<std::pair<std::string, IdealHandle>> ideals;
        for (const IdealArg& a : q.ideals) ideals.emplace_back(arg_text(a), a.ideal);
        ClassifyReport r = classify(ideals, make_module(session, q.module), ctx);
        std::size_t classes = 0;
        for (const SupportGroup& g : r.groups) classes += g.classes.size();
        os << classes << (classes == 1 ? " class" : " classes") << flag_text(r.conditional, r.incomplete);
        for (const SupportGroup& g : r.groups) {
          os << "\n  support " << primes_text(g.support) << ": " << g.tag_count << " tags, bound "
             << (g.bound_holds ? "holds" : "FAILS");
          for (std::size_t c = 0; c < g.classes.size(); ++c) {
            os << "\n    class " << c << ":";
            for (std::size_t i : g.classes[c]) os << " " << r.entries[i].name;
            os << "  tags " << tags_text(r.entries[g.classes[c].front()].completion.tags);
          }
          for (const auto& [i, j] : g.quotients) os << "\n    class " << i << " is a proper quotient of class " << j;
        }
        return finish(q, to_json(r), os.str(), !r.conditional && !r.incomplete);
      }
      case QueryKind::LowerBound: {
        LowerBoundReport r = lower_bound_att(q.ideals[0].ideal, make_module(session, q.module), q.c, ctx);
        os << primes_text(r.primes);
        bool decided = true;
        if (r.contained_in_att) {
          os << "\n  contained in Att: " << r.contained_in_att->name();
          decided = r.contained_in_att->decided();
        }
        return finish(q, to_json(r), os.str(), decided);
      }
      case QueryKind::CdMonomial:
        return cd_monomial_result(q, q.ideals[0].ideal, session.options.field);
    }
    throw Error(ErrorCode::Internal, "unhandled query");
  } catch (const Error& e) {
    Json out = header(q);
    out["error"] = Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    return QueryResult{std::move(out), call_text(q) + ": error " + std::string(error_code_name(e.code())) + ": " + e.what(),
                       Outcome::Failed};
  }
}

std::vector<QueryResult> run(const Session& session, const RunOptions& options) {
  if (auto budget = options.budget ? options.budget : session.options.budget) gb::set_default_step_budget(*budget);
  Context ctx = make_context(session, options);
  std::vector<QueryResult> out;
  if (options.parallel) {
    std::vector<std::future<QueryResult>> jobs;
    for (const Query& q : session.queries) {
      jobs.push_back(std::async(std::launch::async, [&session, &q, &ctx] { return run_query(session, q, ctx); }));
    }
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const Query& q : session.queries) out.push_back(run_query(session, q, ctx));
  }
  return out;
}

int exit_code(const std::vector<QueryResult>& results) {
  int code = 0;
  for (const QueryResult& r : results) {
    if (r.outcome == Outcome::Failed) return 1;
    if (r.outcome == Outcome::Undecided) code = 2;
  }
  return code;
}

std::vector<QueryResult> run_cd_monomial(const Session& session, const Field& field) {
  std::vector<QueryResult> out;
  for (const NamedIdeal& i : session.ideals) {
    Query q{QueryKind::CdMonomial, {IdealArg{i.name, i.ideal}}, "", 0, 0};
    try {
      if (!i.ideal.is_monomial()) throw Error(ErrorCode::Precondition, i.name + " is not a monomial ideal");
      out.push_back(cd_monomial_result(q, i.ideal, field));
    } catch (const Error& e) {
      Json j = header(q);
      j["error"] = Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      out.push_back(QueryResult{std::move(j), call_text(q) + ": error " + std::string(error_code_name(e.code())) + ": " + e.what(),
                                Outcome::Failed});
    }
  }
  return out;
}

}  // namespace toploc::cli
