#include <benchmark/benchmark.h>

#include "zeta3/charpoly.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/plane.hpp"
#include "zeta3/roots.hpp"
#include "zeta3/spectra.hpp"
#include "zeta3/zeta.hpp"

using namespace zeta3;

namespace {

const TrianglePresentation& presentation() {
  static const TrianglePresentation t = [] {
    PresentationSearchOptions o;
    o.cover_requirement = CoverRequirement{2, 4};
    return find_triangle_presentation(projective_plane(2), o);
  }();
  return t;
}

// range(0) == 0: the base; otherwise the first connected Z/2 cover.
ComplexDescription subject(int which) {
  if (which == 0) return base_quotient(presentation());
  return abelian_cover(presentation(), connected_voltages(presentation(), 2).front());
}

void BM_SearchLexFirst(benchmark::State& state) {
  const IncidenceStructure plane = projective_plane(static_cast<int>(state.range(0)));
  PresentationSearchOptions o;
  o.allow_torsion = state.range(0) == 3;
  for (auto _ : state) benchmark::DoNotOptimize(find_triangle_presentation(plane, o));
}
BENCHMARK(BM_SearchLexFirst)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SearchWithCovers(benchmark::State& state) {
  const IncidenceStructure plane = projective_plane(2);
  PresentationSearchOptions o;
  o.cover_requirement = CoverRequirement{2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(find_triangle_presentation(plane, o));
}
BENCHMARK(BM_SearchWithCovers)->Unit(benchmark::kMillisecond);

void BM_CharRevLB(benchmark::State& state) {
  const SparseIntegerMatrix lb = build_LB(subject(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(char_rev(lb));
  state.SetLabel(std::to_string(lb.dimension()) + "x" + std::to_string(lb.dimension()));
}
BENCHMARK(BM_CharRevLB)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DetPolyHecke(benchmark::State& state) {
  const ComplexDescription cx = subject(static_cast<int>(state.range(0)));
  const PolynomialMatrix h = hecke_matrix(cx.q, build_A1(cx), build_A2(cx));
  const DetPolyOptions opts{state.range(1) != 0, 5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(det_poly_matrix(h, 3 * h.rows(), opts));
}
BENCHMARK(BM_DetPolyHecke)->Args({0, 0})->Args({1, 0})->Args({1, 1})->Unit(benchmark::kMicrosecond);

void BM_VerifyIdentity(benchmark::State& state) {
  const ComplexDescription cx = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(zeta_parts(cx)).holds);
}
BENCHMARK(BM_VerifyIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ZerosPB(benchmark::State& state) {
  const IntegerPolynomial pb = zeta_parts(subject(static_cast<int>(state.range(0)))).pb;
  for (auto _ : state) benchmark::DoNotOptimize(zero_moduli(pb));
  state.SetLabel("degree " + std::to_string(pb.degree()));
}
BENCHMARK(BM_ZerosPB)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpectralReport(benchmark::State& state) {
  const ZetaParts parts = zeta_parts(subject(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_report(parts).verdicts.agree());
}
BENCHMARK(BM_SpectralReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
