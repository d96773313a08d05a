#include <benchmark/benchmark.h>

#include "rigdist/integration.hpp"
#include "rigdist/lawcheck.hpp"
#include "rigdist/strength.hpp"

using namespace rigdist;

namespace {

Dist nat_interval(std::int64_t n) {
  const Rig nat = rig_natural();
  std::vector<std::pair<Element, Coeff>> entries;
  for (std::int64_t i = 0; i < n; ++i)
    entries.emplace_back(Element::atom(std::to_string(i)), Coeff(i % 3 + 1));
  return Dist(nat, std::move(entries));
}

ElementMap addition_map(std::int64_t n) {
  std::vector<std::pair<Element, Element>> rows;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      rows.emplace_back(Element::pair(Element::atom(std::to_string(i)),
                                      Element::atom(std::to_string(j))),
                        Element::atom(std::to_string(i + j)));
  return ElementMap::from_pairs(std::move(rows));
}

void BM_ConvolvePolynomials(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const Dist p = nat_interval(n);
  const ElementMap plus = addition_map(n);
  for (auto _ : state) {
    Dist c = convolve(p, p, plus);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ConvolvePolynomials)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_TensorProduct(benchmark::State& state) {
  const Dist p = nat_interval(state.range(0));
  for (auto _ : state) {
    Dist t = psi(p, p);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TensorProduct)->RangeMultiplier(2)->Range(4, 64);

void BM_Flatten(benchmark::State& state) {
  const Rig nat = rig_natural();
  const std::int64_t n = state.range(0);
  std::vector<std::pair<Element, Coeff>> outer;
  for (std::int64_t i = 0; i < n; ++i)
    outer.emplace_back(dist_as_element(nat_interval(i % 8 + 1)), Coeff(i + 1));
  const Dist m(nat, std::move(outer));
  for (auto _ : state) {
    Dist f = flatten(m);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Flatten)->RangeMultiplier(2)->Range(4, 64);

void BM_IntegrateRational(benchmark::State& state) {
  const Rig q = rig_rational();
  const std::int64_t n = state.range(0);
  std::vector<Element> atoms;
  std::vector<std::pair<Element, Coeff>> weights, values;
  for (std::int64_t i = 0; i < n; ++i) {
    const Element x = Element::atom(std::to_string(i));
    atoms.push_back(x);
    weights.emplace_back(x, Coeff(Rat::make(1, i % 9 + 1)));
    values.emplace_back(x, Coeff(Rat::make(i % 7, 3)));
  }
  const FinSpace carrier{atoms};
  const Dist p(q, std::move(weights));
  const Fn phi(q, carrier, std::move(values));
  for (auto _ : state) {
    Coeff v = integrate(p, phi);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IntegrateRational)->RangeMultiplier(4)->Range(4, 256);

void BM_LawSuiteBool(benchmark::State& state) {
  for (auto _ : state) {
    auto reports = run_suite(rig_boolean(), 2, 0);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_LawSuiteBool);

}  // namespace

BENCHMARK_MAIN();
