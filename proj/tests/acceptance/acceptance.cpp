#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/homology_oracle.hpp"
#include "support/testing.hpp"
#include "toploc/cli/runner.hpp"
#include "toploc/cli/session.hpp"
#include "toploc/groebner/ideal_ops.hpp"
#include "toploc/sr/complex.hpp"
#include "toploc/sr/hochster.hpp"
#include "toploc/toplocal/classify.hpp"
#include "toploc/toplocal/toplocal.hpp"
#include "toploc/variety/points.hpp"

namespace {

using namespace toploc;
using testing::I;
using testing::keys;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

PrimeCert prime(const IdealHandle& ideal) {
  auto cert = certify_prime(ideal);
  if (!cert) throw Error(ErrorCode::Precondition, "not a certified prime: " + ideal.to_string());
  return *cert;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome monomial_cross_validation() {
  Outcome out;
  std::size_t checked = 0;
  auto check = [&](const Ring& r, const std::vector<std::uint32_t>& gens) {
    IdealHandle a = testing::squarefree_ideal(r, gens);
    const int n = static_cast<int>(r->nvars());
    int cd = cd_monomial(a);
    int oracle = testing::oracle_pd(gens, static_cast<unsigned>(n));
    if (cd != oracle) out.fail("cd_monomial disagrees with oracle on " + a.to_string());
    VanishReport v = vanishes_top(a, ModuleSpec(IdealHandle::zero(r)), Context{});
    if (!v.value.decided()) {
      out.fail("undecided on " + a.to_string());
    } else if (v.value.is_yes() != (cd < n)) {
      out.fail("vanishes_top disagrees with cd < n on " + a.to_string());
    }
    ++checked;
  };
  Ring r3 = testing::qq({"x", "y", "z"});
  auto all = testing::all_antichains(3);
  if (all.size() != 18) out.fail("expected 18 antichains, got " + std::to_string(all.size()));
  for (const auto& gens : all) check(r3, gens);
  Ring r4 = testing::qq({"x", "y", "z", "w"});
  testing::Gen g(2024);
  for (int i = 0; i < 120; ++i) check(r4, g.antichain(4, 6));
  out.detail = out.pass ? std::to_string(checked) + " ideals" : out.detail;
  return out;
}

Outcome semilocal_consistency() {
  Outcome out;
  Ring r = testing::fp(5, {"x", "y"});
  Context ctx;
  std::vector<PrimeCert> pts;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      pts.push_back(prime(point_ideal(r, {r->field().from_integer(i), r->field().from_integer(j)})));
    }
  }
  std::vector<ModuleSpec> modules{ModuleSpec(IdealHandle::zero(r)), ModuleSpec(I(r, {"x"})),
                                  ModuleSpec(I(r, {"x*y"}))};
  std::size_t checked = 0;
  auto check = [&](const std::vector<std::size_t>& pick) {
    std::vector<IdealHandle> ms;
    std::vector<PrimeCert> certs;
    for (std::size_t k : pick) {
      ms.push_back(pts[k].ideal());
      certs.push_back(pts[k]);
    }
    IdealHandle a = gb::intersect_all(ms);
    for (const ModuleSpec& M : modules) {
      AttReport att = att_top(a, M, ctx);
      SemilocalReport semi = att_top_semilocal(certs, M, ctx);
      if (!att.possible.empty()) out.fail("undecided att_top for " + a.to_string());
      if (keys(att.att) != keys(semi.att)) out.fail("att_top differs from semilocal for " + a.to_string());
      ++checked;
    }
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    check({i});
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      check({i, j});
      for (std::size_t k = j + 1; k < pts.size(); ++k) check({i, j, k});
    }
  }

  std::size_t groth = 0;
  for (const ModuleSpec& M : modules) {
    AsshResult top = assh(M);
    for (const PrimeCert& m : pts) {
      std::vector<PrimeCert> inside;
      for (const PrimeCert& p : top.primes) {
        if (gb::contains(m.ideal(), p.ideal())) inside.push_back(p);
      }
      if (inside.empty()) continue;
      AttReport global = att_top(m.ideal(), M, ctx);
      if (keys(global.att) != keys(inside)) out.fail("global att_top(m) is not Assh inside m at " + m.to_string());
      if (inside.size() == top.primes.size() && keys(global.att) != keys(top.primes)) {
        out.fail("att_top(m) != Assh M at " + m.to_string());
      }
      ModuleSpec local(M.ideal(), m);
      AttReport at_m = att_top(m.ideal(), local, ctx);
      if (at_m.att.empty() || keys(at_m.att) != keys(at_m.assh.primes)) {
        out.fail("localized att_top(m) != Assh at " + m.to_string());
      }
      ++groth;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " semilocal cases, " + std::to_string(groth) + " Grothendieck cases";
  return out;
}

Outcome nodal_surface() {
  Outcome out;
  Ring r = testing::qq({"x", "y", "z"});
  PrimeCert origin = prime(I(r, {"x", "y", "z"}));
  IdealHandle f = I(r, {"y^2 - x^2 - x^3"});
  PrimeCert pf = prime(f);
  ModuleSpec M(f, origin);
  IdealHandle curve = I(r, {"x + y - y*z", "(z - 1)^2*(x + 1) - 1"});
  IdealHandle m = origin.ideal();

  std::vector<std::vector<std::string>> verdicts;
  for (unsigned N : {8u, 16u}) {
    Context ctx;
    ctx.truncation = N;
    LocalCd l = cd_top_at(curve, pf, origin, ctx);
    if (l.tags.size() != 2) {
      out.fail("expected 2 branches at N=" + std::to_string(N));
      return out;
    }
    std::vector<std::string> v;
    for (const TagVerdict& t : l.tags) {
      if (!t.survives.decided()) out.fail("undecided branch at N=" + std::to_string(N));
      v.push_back(t.tag.branch + ":" + std::string(t.survives.name()));
    }
    verdicts.push_back(v);
  }
  if (verdicts[0] != verdicts[1]) out.fail("branch verdicts change between N=8 and N=16");

  Context ctx;
  CompletionReport cp = att_top_completion(curve, M, ctx);
  CompletionReport cm = att_top_completion(m, M, ctx);
  bool subset = std::all_of(cp.tags.begin(), cp.tags.end(), [&](const AnalyticPrimeTag& t) {
    return std::any_of(cm.tags.begin(), cm.tags.end(), [&](const AnalyticPrimeTag& u) { return same_tag(t, u); });
  });
  if (cp.tags.size() != 1 || cm.tags.size() != 2 || !subset) out.fail("completion tag sets are not 1 inside 2");

  ClassifyReport rep = classify({{"p", curve}, {"m", m}}, M, ctx);
  if (rep.groups.size() != 1 || rep.groups[0].classes.size() != 2) {
    out.fail("classify does not give two classes");
  } else if (rep.groups[0].quotients != std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}) {
    out.fail("H^2_p is not reported as a proper quotient of H^2_m");
  }

  for (const IdealHandle& a : {curve, m}) {
    AttReport att = att_top(a, M, ctx);
    if (att.att.size() != 1 || !same_prime(att.att[0], pf)) out.fail("contracted att is not the zero ideal of R/(f)");
  }
  if (out.pass) out.detail = "branches " + verdicts[0][0] + ", " + verdicts[0][1];
  return out;
}

Outcome classify_bound() {
  Outcome out;
  std::size_t runs = 0;
  std::size_t groups = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(TOPLOC_FIXTURE_DIR)) {
    if (e.path().extension() == ".tl") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    cli::Session s = cli::parse(read_file(path));
    Context ctx = cli::make_context(s);
    for (const cli::Query& q : s.queries) {
      if (q.kind != cli::QueryKind::Classify) continue;
      cli::QueryResult res = cli::run_query(s, q, ctx);
      if (res.json.contains("error")) {
        out.fail(path.filename().string() + ": " + res.json["error"]["message"].get<std::string>());
        continue;
      }
      ++runs;
      for (const auto& g : res.json["groups"]) {
        std::size_t classes = g["classes"].size();
        std::size_t tags = g["tag_count"].get<std::size_t>();
        if (tags >= 63 || classes > (std::size_t{1} << tags)) {
          out.fail(path.filename().string() + ": " + std::to_string(classes) + " classes over " +
                   std::to_string(tags) + " tags");
        }
        if (!g["bound_holds"].get<bool>()) out.fail(path.filename().string() + ": bound_holds is false");
        ++groups;
      }
    }
  }
  if (runs == 0) out.fail("no classify query in the fixture corpus");
  if (out.pass) out.detail = std::to_string(runs) + " runs, " + std::to_string(groups) + " groups";
  return out;
}

class PrimeGen {
 public:
  PrimeGen(const Ring& r, std::uint64_t seed) : r_(r), g_(seed) {}

  testing::Gen& gen() { return g_; }

  std::string c() {
    int v = g_.uniform(-1, 2);
    return v < 0 ? " + " + std::to_string(-v) : " - " + std::to_string(v);
  }

  IdealHandle of_dim(int d) {
    static const char* vars[] = {"x", "y", "z"};
    auto v = [&]() { return std::string(vars[g_.uniform(0, 2)]); };
    switch (d) {
      case 2: {
        switch (g_.uniform(0, 3)) {
          case 0: return I(r_, {v() + c()});
          case 1: return I(r_, {"x - y" + c()});
          case 2: return I(r_, {"x + y + z" + c()});
          default: return I(r_, {"z - x^2" + c()});
        }
      }
      case 1: {
        int i = g_.uniform(0, 2);
        int j = (i + g_.uniform(1, 2)) % 3;
        if (g_.uniform(0, 3) == 0) return I(r_, {"x - y", "z" + c()});
        return I(r_, {std::string(vars[i]) + c(), std::string(vars[j]) + c()});
      }
      default:
        return I(r_, {"x" + c(), "y" + c(), "z" + c()});
    }
  }

  IdealHandle any() { return of_dim(g_.uniform(0, 2)); }

 private:
  Ring r_;
  testing::Gen g_;
};

Outcome invariance() {
  Outcome out;
  Ring r = testing::qq({"x", "y", "z"});
  PrimeGen pg(r, 77);
  testing::Gen& g = pg.gen();
  Context ctx;
  std::size_t triples = 0;
  std::size_t nonempty = 0;

  struct Snapshot {
    std::vector<std::vector<std::string>> att, possible, support;
    std::string vanishes;
    std::vector<std::string> tags;
  };
  auto snap = [&](const IdealHandle& a, const ModuleSpec& M) {
    Snapshot s;
    AttReport att = att_top(a, M, ctx);
    s.att = keys(att.att);
    s.possible = keys(att.possible);
    SuppReport supp = supp_top(att);
    s.support = keys(supp.support);
    s.vanishes = std::string(vanishes_top(a, M, ctx).value.name());
    for (const AnalyticPrimeTag& t : att_top_completion(att).tags) s.tags.push_back(t.key());
    std::sort(s.tags.begin(), s.tags.end());
    return s;
  };
  auto same = [](const Snapshot& x, const Snapshot& y) {
    return x.att == y.att && x.possible == y.possible && x.support == y.support && x.vanishes == y.vanishes &&
           x.tags == y.tags;
  };

  while (triples < 200) {
    IdealHandle p1 = pg.any();
    IdealHandle p2 = pg.any();
    const bool single = g.coin();
    IdealHandle a = single ? p1 : gb::intersect(p1, p2);
    IdealHandle a2 = [&] {
      switch (g.uniform(0, 2)) {
        case 0: return single ? gb::product(p1, p1) : gb::product(p1, p2);
        case 1: return gb::product(a, a);
        default: return single ? gb::product(gb::product(p1, p1), p1) : gb::intersect(gb::product(p1, p1), p2);
      }
    }();
    if (!gb::radical_contains(a, a2) || !gb::radical_contains(a2, a)) continue;

    int d = g.uniform(1, 2);
    std::vector<IdealHandle> comps{pg.of_dim(d)};
    if (g.coin()) {
      IdealHandle other = pg.of_dim(d);
      if (!gb::same_ideal(other, comps[0])) comps.push_back(other);
    }
    IdealHandle b1 = gb::intersect_all(comps);
    IdealHandle q = pg.of_dim(g.uniform(0, d - 1));
    std::vector<IdealHandle> comps2 = comps;
    if (std::none_of(comps.begin(), comps.end(), [&](const IdealHandle& c) { return gb::contains(q, c); })) {
      comps2.push_back(q);
    }
    IdealHandle b2 = [&] {
      switch (g.uniform(0, 2)) {
        case 0: return gb::intersect(b1, q);
        case 1: return gb::product(b1, b1);
        default: return gb::product(b1, q);
      }
    }();
    if (gb::dimension(b1) != d || gb::dimension(b2) != d) continue;
    ctx = Context{};
    ctx.hints.add(b1, comps);
    ctx.hints.add(gb::intersect(b1, q), comps2);
    ctx.hints.add(b2, gb::same_ideal(b2, gb::product(b1, b1)) ? comps : comps2);

    try {
      ModuleSpec M1(b1);
      ModuleSpec M2(b2);
      if (keys(assh(M1, ctx.hints).primes) != keys(assh(M2, ctx.hints).primes)) {
        out.fail("constructed Assh differs for " + b1.to_string() + " and " + b2.to_string());
      }
      Snapshot base = snap(a, M1);
      if (!same(base, snap(a2, M1))) out.fail("radical invariance fails: " + a.to_string() + " vs " + a2.to_string());
      if (!same(base, snap(a, M2))) out.fail("Assh invariance fails: " + b1.to_string() + " vs " + b2.to_string());
      if (!base.att.empty()) ++nonempty;
      ClassifyReport c1 = classify({{"a", a}, {"a2", a2}}, M1, ctx);
      bool one_class = std::all_of(c1.groups.begin(), c1.groups.end(),
                                   [](const SupportGroup& grp) { return grp.classes.size() == 1; });
      if (c1.groups.size() != 1 || !one_class) out.fail("classify separates " + a.to_string() + " and " + a2.to_string());
    } catch (const Error& e) {
      out.fail(std::string("error: ") + e.what() + " on a=" + a.to_string() + " b1=" + b1.to_string());
    }
    ++triples;
  }
  if (out.pass) out.detail = std::to_string(triples) + " triples, " + std::to_string(nonempty) + " with nonempty att";
  return out;
}

Outcome oracle_ground_truths() {
  Outcome out;
  Ring r3 = testing::qq({"x", "y", "z"});
  Ring r4 = testing::qq({"x", "y", "z", "w"});
  struct Case {
    IdealHandle ideal;
    std::vector<std::uint32_t> gens;
    int pd;
  };
  std::vector<Case> cases{{I(r3, {"x*y", "x*z"}), {0b011, 0b101}, 2},
                          {I(r4, {"x*z", "x*w", "y*z", "y*w"}), {0b0101, 0b1001, 0b0110, 0b1010}, 3}};
  for (const Case& c : cases) {
    const unsigned n = static_cast<unsigned>(c.ideal.ring()->nvars());
    SimplicialComplex delta = stanley_reisner(c.ideal);
    for (std::uint32_t W = 0; W < (1u << n); ++W) {
      auto faces = testing::oracle_faces(c.gens, W);
      SimplicialComplex sub = delta.induced(W);
      for (int i = -1; i < static_cast<int>(n); ++i) {
        if (reduced_homology_rank(sub, i, Field::prime(2)) != testing::oracle_homology_f2(faces, i)) {
          out.fail("induced homology mismatch on " + c.ideal.to_string());
        }
      }
    }
    int oracle = testing::oracle_pd(c.gens, n);
    int pd = betti_table(c.ideal).pd;
    if (oracle != c.pd || pd != c.pd) {
      out.fail("pd of " + c.ideal.to_string() + " is " + std::to_string(pd) + ", oracle " + std::to_string(oracle));
    }
  }

  SimplicialComplex triangle({"a", "b", "c"}, {0b011, 0b101, 0b110});
  SimplicialComplex boundary({"a", "b", "c", "d"}, {0b0111, 0b1011, 0b1101, 0b1110});
  const std::vector<std::size_t> triangle_hand{0, 0, 1, 0};
  const std::vector<std::size_t> boundary_hand{0, 0, 0, 1, 0};
  for (const Field& f : {Field::prime(2), Field::rationals()}) {
    for (int i = -1; i <= 2; ++i) {
      if (reduced_homology_rank(triangle, i, f) != triangle_hand[static_cast<std::size_t>(i + 1)]) {
        out.fail("hollow triangle H_" + std::to_string(i));
      }
    }
    for (int i = -1; i <= 3; ++i) {
      if (reduced_homology_rank(boundary, i, f) != boundary_hand[static_cast<std::size_t>(i + 1)]) {
        out.fail("simplex boundary H_" + std::to_string(i));
      }
    }
  }
  if (out.pass) out.detail = "pd 2 and 3, 48 induced subcomplexes";
  return out;
}

Outcome cusp_soundness() {
  Outcome out;
  cli::Session s = cli::parse(read_file(std::filesystem::path(TOPLOC_FIXTURE_DIR) / "cusp.tl"));
  auto results = cli::run(s);
  for (const auto& res : results) {
    if (!res.json.contains("value")) {
      out.fail("query without a value");
      continue;
    }
    std::string v = res.json["value"].get<std::string>();
    if (v != "UNKNOWN") out.fail("cusp query answered " + v);
  }
  int code = cli::exit_code(results);
  if (code != 2) out.fail("exit code " + std::to_string(code));
  if (out.pass) out.detail = "UNKNOWN, exit 2";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "monomial cross-validation", monomial_cross_validation},
      {2, "semilocal consistency over F5", semilocal_consistency},
      {3, "nodal surface example", nodal_surface},
      {4, "classify bound over fixtures", classify_bound},
      {5, "radical and Assh invariance", invariance},
      {6, "oracle ground truths", oracle_ground_truths},
      {7, "three-valued soundness on the cusp", cusp_soundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.id == 1 && secs > 120.0) o.fail("runtime over 2 minutes");
    std::printf("[%s] %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
