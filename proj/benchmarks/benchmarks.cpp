#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "toploc/algebra/poly_parse.hpp"
#include "toploc/analytic/branches.hpp"
#include "toploc/groebner/groebner.hpp"
#include "toploc/sr/hochster.hpp"
#include "toploc/toplocal/toplocal.hpp"

namespace {

using namespace toploc;

IdealHandle ideal(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const std::string& g : gens) ps.push_back(parse_poly(r, g));
  return IdealHandle(r, std::move(ps));
}

void BM_GroebnerCyclic(benchmark::State& state) {
  const bool four = state.range(0) == 4;
  Ring r = four ? make_ring(Field::rationals(), {"a", "b", "c", "d"}) : make_ring(Field::rationals(), {"a", "b", "c"});
  std::vector<std::string> gens = four ? std::vector<std::string>{"a + b + c + d", "a*b + b*c + c*d + d*a",
                                                                   "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"}
                                       : std::vector<std::string>{"a + b + c", "a*b + b*c + c*a", "a*b*c - 1"};
  std::vector<Poly> ps;
  for (const std::string& g : gens) ps.push_back(parse_poly(r, g));
  for (auto _ : state) benchmark::DoNotOptimize(gb::reduced_groebner_basis(r, ps));
}
BENCHMARK(BM_GroebnerCyclic)->Arg(3)->Arg(4);

void BM_HochsterBetti(benchmark::State& state) {
  std::vector<std::string> vars;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  Ring r = make_ring(Field::rationals(), vars);
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) gens.push_back(vars[i] + "*" + vars[(i + 1) % n]);
  IdealHandle cycle = ideal(r, gens);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(cycle));
}
BENCHMARK(BM_HochsterBetti)->DenseRange(4, 10, 2);

void BM_BranchDim0(benchmark::State& state) {
  Ring r = make_ring(Field::rationals(), {"x", "y", "z"});
  Poly f = parse_poly(r, "y^2 - x^2 - x^3");
  IdealHandle curve = ideal(r, {"x + y - y*z", "(z - 1)^2*(x + 1) - 1"});
  const unsigned N = static_cast<unsigned>(state.range(0));
  std::vector<Scalar> origin(3, Scalar(0));
  auto branches = plane_branches(f, origin, N);
  for (auto _ : state) {
    for (const BranchDatum& b : branches) benchmark::DoNotOptimize(branch_dim0_test(b, curve, N));
  }
}
BENCHMARK(BM_BranchDim0)->Arg(8)->Arg(16);

void BM_NodalAttTop(benchmark::State& state) {
  Ring r = make_ring(Field::rationals(), {"x", "y", "z"});
  IdealHandle curve = ideal(r, {"x + y - y*z", "(z - 1)^2*(x + 1) - 1"});
  ModuleSpec M(ideal(r, {"y^2 - x^2 - x^3"}));
  Context ctx;
  for (auto _ : state) benchmark::DoNotOptimize(att_top(curve, M, ctx));
}
BENCHMARK(BM_NodalAttTop);

}  // namespace

BENCHMARK_MAIN();
