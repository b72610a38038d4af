/*
 * Copyright 2026 The canonsys Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "canonsys/canonical.hpp"
#include "canonsys/catalog.hpp"
#include "canonsys/invariants.hpp"
#include "canonsys/prng.hpp"

using namespace canonsys;

namespace {

ReflGroup make_group(const char* ref) {
  GroupSpec spec = expand_catalog(ref);
  AnalyzeOptions options;
  options.name = spec.name;
  return ReflGroup::analyze(spec.generators, options);
}

Poly dense_poly(unsigned n, unsigned degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Poly f(n);
  for (const ExpVec& e : monomials_of_degree(n, degree))
    f += Poly::monomial(n, e, CycloNum(make_rational(
                                  static_cast<long>(rng.below(17)) - 8,
                                  static_cast<long>(rng.below(4)) + 1)));
  return f;
}

void BM_cyclo_mul(benchmark::State& state) {
  const CycloNum a = CycloNum::root_of_unity(12, 7) + CycloNum(3);
  const CycloNum b = CycloNum::root_of_unity(12, 5) - CycloNum(make_rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_cyclo_mul);

void BM_cyclo_inv(benchmark::State& state) {
  const CycloNum a = CycloNum::root_of_unity(12, 7) + CycloNum(3);
  for (auto _ : state) benchmark::DoNotOptimize(inv(a));
}
BENCHMARK(BM_cyclo_inv);

void BM_poly_mul(benchmark::State& state) {
  const Poly f = dense_poly(3, 4, 1);
  const Poly g = dense_poly(3, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_poly_mul);

void BM_star_apply(benchmark::State& state) {
  const ReflGroup g = make_group("B:3");
  const Poly f = dense_poly(3, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(star_apply(f, g.delta()));
}
BENCHMARK(BM_star_apply);

void BM_closure_b3(benchmark::State& state) {
  const GroupSpec spec = expand_catalog("B:3");
  for (auto _ : state) benchmark::DoNotOptimize(closure(spec.generators));
}
BENCHMARK(BM_closure_b3);

void BM_molien_b3(benchmark::State& state) {
  const ReflGroup g = make_group("B:3");
  for (auto _ : state) benchmark::DoNotOptimize(g.molien_coeffs(12));
}
BENCHMARK(BM_molien_b3);

void BM_invariant_space(benchmark::State& state) {
  const ReflGroup g = make_group("B:3");
  const unsigned degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_space(g, degree));
}
BENCHMARK(BM_invariant_space)->Arg(6)->Arg(10);

void BM_pipeline_dihedral6(benchmark::State& state) {
  const ReflGroup g = make_group("dihedral:6");
  for (auto _ : state) {
    CanonicalSystem cs = compute_canonical_system(g, 0);
    benchmark::DoNotOptimize(cs);
  }
}
BENCHMARK(BM_pipeline_dihedral6);

void BM_verify_canonical_b3(benchmark::State& state) {
  const ReflGroup g = make_group("B:3");
  const CanonicalSystem cs = compute_canonical_system(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_canonical(g, cs));
}
BENCHMARK(BM_verify_canonical_b3);

}  // namespace

BENCHMARK_MAIN();
