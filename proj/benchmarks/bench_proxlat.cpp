#include <benchmark/benchmark.h>

#include "proxlat/canext.hpp"
#include "proxlat/fixtures.hpp"
#include "proxlat/morphext.hpp"
#include "proxlat/spectra.hpp"

using namespace proxlat;

namespace {

// Open-basis presentation of the discrete space on n points: the Boolean
// lattice with 2^n elements and R the order.
ProximityLattice boolean_presentation(std::size_t n) {
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  return open_basis_presentation(space_from_order(points, up));
}

ProximityLattice chain_presentation(std::size_t n) {
  return ProximityLattice::with_order(fixtures::chain(n));
}

void BM_VerifyAxiomsReduced(benchmark::State& state) {
  auto p = boolean_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(p.lattice(), p.relation()));
  state.SetLabel(std::to_string(p.size()) + " elements");
}
BENCHMARK(BM_VerifyAxiomsReduced)->DenseRange(2, 5);

void BM_VerifyAxiomsExhaustive(benchmark::State& state) {
  auto p = chain_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_axioms(p.lattice(), p.relation(), QuantifierMode::exhaustive));
}
BENCHMARK(BM_VerifyAxiomsExhaustive)->DenseRange(4, 10, 2);

void BM_PiExtension(benchmark::State& state) {
  auto p = boolean_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pi_extension(p));
}
BENCHMARK(BM_PiExtension)->DenseRange(2, 4);

void BM_ConceptLattice(benchmark::State& state) {
  auto pol = round_polarity(chain_presentation(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(concept_lattice(pol));
}
BENCHMARK(BM_ConceptLattice)->Arg(8)->Arg(12)->Arg(16)->Arg(32);

void BM_EnumerateJMorphisms(benchmark::State& state) {
  auto src = boolean_presentation(2);
  auto tgt = chain_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_morphisms(src, tgt, MorphismClass::j));
}
BENCHMARK(BM_EnumerateJMorphisms)->DenseRange(3, 7, 2);

void BM_Spectrum(benchmark::State& state) {
  auto p = boolean_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p));
}
BENCHMARK(BM_Spectrum)->DenseRange(2, 5);

void BM_CanextViaDuality(benchmark::State& state) {
  auto p = boolean_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canext_via_duality(p));
}
BENCHMARK(BM_CanextViaDuality)->DenseRange(2, 3);

void BM_T0Spaces(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(t0_spaces(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_T0Spaces)->DenseRange(2, 4);

void BM_ExtendIdentity(benchmark::State& state) {
  auto p = boolean_presentation(static_cast<std::size_t>(state.range(0)));
  auto e = pi_extension(p);
  auto id = identity_morphism(p);
  for (auto _ : state) benchmark::DoNotOptimize(check_preservation(extend_pi(e, e, id)));
}
BENCHMARK(BM_ExtendIdentity)->DenseRange(2, 3);

}  // namespace
BENCHMARK_MAIN();
