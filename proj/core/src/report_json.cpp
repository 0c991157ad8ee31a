#include "toploc/toplocal/report_json.hpp"


namespace toploc {

namespace {

std::string value_name(const TriBool& t) { return std::string(t.name()); }

Json tri_json(const TriBool& t) { return value_name(t); }

}  // namespace

Json ideal_json(const IdealHandle& I) {
  if (I.generators().empty()) return Json::array({"0"});
  Json out = Json::array();
  for (const std::string& g : I.canonical_generators()) out.push_back(g);
  return out;
}

Json prime_json(const PrimeCert& p) { return ideal_json(p.ideal()); }

Json primes_json(const std::vector<PrimeCert>& ps) {
  Json out = Json::array();
  for (const PrimeCert& p : ps) out.push_back(prime_json(p));
  return out;
}

Json tag_json(const AnalyticPrimeTag& t) {
  return Json{{"m", prime_json(t.m)}, {"p", prime_json(t.p)}, {"branch", t.branch}};
}

Json tags_json(const std::vector<AnalyticPrimeTag>& ts) {
  Json out = Json::array();
  for (const AnalyticPrimeTag& t : ts) out.push_back(tag_json(t));
  return out;
}

Json flags_json(bool conditional, bool incomplete) {
  return Json{{"conditional", conditional}, {"incomplete", incomplete}};
}

Json to_json(const BranchDatum& b) {
  return Json{{"id", b.id()}, {"series", b.to_string()}, {"truncation", b.truncation}, {"stable", b.stable}};
}

Json to_json(const Dim0Detail& d) {
  return Json{{"verdict", std::string(dim0_verdict_name(d.verdict))},
              {"truncation", d.truncation},
              {"hilbert_samuel", d.hilbert_samuel}};
}

Json to_json(const IrreducibilityCert& c) {
  Json out{{"verdict", std::string(cert_verdict_name(c.verdict))}, {"reason", std::string(cert_reason_name(c.reason))}};
  if (!c.branches.empty()) {
    Json bs = Json::array();
    for (const BranchDatum& b : c.branches) bs.push_back(to_json(b));
    out["branches"] = bs;
  }
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const LocalCd& l) {
  Json out{{"m", prime_json(l.m)},
           {"p", prime_json(l.p)},
           {"value", tri_json(l.value)},
           {"route", l.route},
           {"isolated", l.isolated},
           {"certificate", to_json(l.cert)}};
  Json tags = Json::array();
  for (const TagVerdict& t : l.tags) {
    Json tj = tag_json(t.tag);
    tj["survives"] = tri_json(t.survives);
    if (t.branch) tj["series"] = t.branch->to_string();
    if (t.detail) tj["dim0"] = to_json(*t.detail);
    tags.push_back(tj);
  }
  out["tags"] = tags;
  out["tags_known"] = l.tags_known;
  out["flags"] = flags_json(l.value.conditional, false);
  return out;
}

Json to_json(const CdResult& r) {
  Json local = Json::array();
  for (const LocalCd& l : r.local) local.push_back(to_json(l));
  Json out{{"p", prime_json(r.p)}, {"value", tri_json(r.value)}, {"route", r.route}, {"local", local}};
  if (!r.note.empty()) out["note"] = r.note;
  out["flags"] = flags_json(r.value.conditional, !r.candidates_complete);
  return out;
}

Json to_json(const AttReport& r) {
  Json per = Json::array();
  for (const CdResult& c : r.per_prime) per.push_back(to_json(c));
  return Json{{"d", r.assh.d},
              {"assh", primes_json(r.assh.primes)},
              {"att", primes_json(r.att)},
              {"possible", primes_json(r.possible)},
              {"per_prime", per},
              {"flags", flags_json(r.conditional, !r.possible.empty())}};
}

Json to_json(const SuppReport& r) {
  return Json{{"support", primes_json(r.support)},
              {"possible", primes_json(r.possible)},
              {"flags", flags_json(r.conditional, !r.complete)}};
}

Json to_json(const VanishReport& r) {
  Json out{{"value", tri_json(r.value)}, {"route", r.route}};
  if (r.witness) out["witness"] = Json{{"p", prime_json(r.witness->p)}, {"m", prime_json(r.witness->m)}};
  out["att"] = primes_json(r.att.att);
  out["possible"] = primes_json(r.att.possible);
  out["flags"] = flags_json(r.value.conditional, r.value.is_unknown());
  return out;
}

Json to_json(const SemilocalReport& r) {
  Json witnesses = Json::array();
  for (const auto& [p, m] : r.witnesses) witnesses.push_back(Json{{"p", prime_json(p)}, {"m", prime_json(m)}});
  return Json{{"d", r.assh.d},
              {"ideal", ideal_json(r.a)},
              {"att", primes_json(r.att)},
              {"witnesses", witnesses},
              {"flags", flags_json(r.assh.conditional, false)}};
}

Json to_json(const CompletionReport& r) {
  return Json{{"tags", tags_json(r.tags)},
              {"unknown", tags_json(r.unknown)},
              {"flags", flags_json(r.conditional, r.incomplete)}};
}

Json to_json(const StructureReport& r) {
  return Json{{"support", primes_json(r.support)},
              {"support_radical", ideal_json(r.support_radical)},
              {"surviving", tags_json(r.surviving)},
              {"killed", tags_json(r.killed)},
              {"undecided", tags_json(r.undecided)},
              {"flags", flags_json(r.conditional, r.incomplete)}};
}

Json to_json(const ClassifyReport& r) {
  Json entries = Json::array();
  for (const ClassifyEntry& e : r.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"ideal", ideal_json(e.ideal)},
                           {"support", primes_json(e.support.support)},
                           {"tags", tags_json(e.completion.tags)},
                           {"flags", flags_json(e.support.conditional || e.completion.conditional,
                                                !e.support.complete || e.completion.incomplete)}});
  }
  Json groups = Json::array();
  for (const SupportGroup& g : r.groups) {
    Json classes = Json::array();
    for (const auto& cls : g.classes) {
      Json names = Json::array();
      for (std::size_t i : cls) names.push_back(r.entries[i].name);
      classes.push_back(names);
    }
    Json quotients = Json::array();
    for (const auto& [i, j] : g.quotients) quotients.push_back(Json{{"quotient", i}, {"of", j}});
    groups.push_back(Json{{"support", primes_json(g.support)},
                          {"classes", classes},
                          {"quotients", quotients},
                          {"tag_count", g.tag_count},
                          {"bound_holds", g.bound_holds},
                          {"flags", flags_json(r.conditional, g.incomplete)}});
  }
  return Json{{"entries", entries}, {"groups", groups}, {"flags", flags_json(r.conditional, r.incomplete)}};
}

Json to_json(const LowerBoundReport& r) {
  Json out{{"primes", primes_json(r.primes)}};
  if (r.contained_in_att) out["contained_in_att"] = tri_json(*r.contained_in_att);
  out["flags"] = flags_json(false, r.contained_in_att && r.contained_in_att->is_unknown());
  return out;
}

Json to_json(const BettiTable& t, const Ring& ring) {
  Json entries = Json::array();
  for (const auto& [key, rank] : t.entries) {
    Json w = Json::array();
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (key.second & (1u << i)) w.push_back(ring->variables()[i]);
    }
    entries.push_back(Json{{"i", key.first}, {"W", w}, {"rank", rank}});
  }
  return Json{{"totals", t.totals}, {"pd", t.pd}, {"depth", t.depth}, {"entries", entries}};
}

}  // namespace toploc
