#include <benchmark/benchmark.h>

#include "mutkit/laurent.hpp"
#include "mutkit/markov.hpp"
#include "mutkit/mutation.hpp"
#include "mutkit/polytope.hpp"

namespace {

using namespace mutkit;

LaurentPoly lifted_112() {
    LaurentPoly f(3);
    f.add_term(IntVec{0, 1, -1}, 1);
    f.add_term(IntVec{0, 0, -1}, 1);
    f.add_term(IntVec{1, 0, -1}, 2);
    f.add_term(IntVec{2, 0, -1}, 1);
    f.add_term(IntVec{-1, -2, 3}, 1);
    return f;
}

LaurentPoly lambda_112() {
    LaurentPoly f(2);
    f.add_term(IntVec{0, 1}, 1);
    f.add_term(IntVec{0, 0}, 1);
    f.add_term(IntVec{1, 0}, 2);
    f.add_term(IntVec{2, 0}, 1);
    return f;
}

void BM_WallCrossing(benchmark::State& state) {
    LaurentPoly w = lifted_112(), lam = lambda_112();
    for (auto _ : state) {
        auto out = bsp_transform(w, 2, lam);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_WallCrossing);

void BM_Substitution(benchmark::State& state) {
    LaurentPoly w = lifted_112(), lam = lambda_112();
    for (auto _ : state) {
        LaurentPoly out = substitute_axis(w, 2, lam);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Substitution);

void BM_NewtonHull(benchmark::State& state) {
    LaurentPoly f = pow(lambda_112(), 6);
    for (auto _ : state) {
        LatticePolytope p = newton(f);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_NewtonHull);

void BM_MutatePolytope(benchmark::State& state) {
    LatticePolytope p = newton(lifted_112());
    WidthVector w(IntVec{0, 0, 1});
    LatticePolytope f =
        LatticePolytope::from_points(3, {IntVec{0, 0, 0}, IntVec{0, 1, 0}, IntVec{2, 0, 0}});
    for (auto _ : state) {
        MutationOutcome mo = mutate_polytope(p, w, f);
        benchmark::DoNotOptimize(mo);
    }
}
BENCHMARK(BM_MutatePolytope);

void BM_AugmentationLift(benchmark::State& state) {
    LaurentPoly w = clifford_potential(4);
    Exponent v(4, -1);
    for (auto _ : state) {
        LiftResult lift = augmentation_lift(w, v);
        benchmark::DoNotOptimize(lift);
    }
}
BENCHMARK(BM_AugmentationLift);

void BM_Fingerprint(benchmark::State& state) {
    Pipeline pipe;
    LatticePolytope p = pipe.exotic(MarkovTriple(1, 1, 2), 3).polytope;
    for (auto _ : state) {
        Fingerprint fp = fingerprint(p);
        benchmark::DoNotOptimize(fp);
    }
}
BENCHMARK(BM_Fingerprint);

void BM_FamilyReportDepth1(benchmark::State& state) {
    for (auto _ : state) {
        FamilyReport rep = family_report(1, 3);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_FamilyReportDepth1);

}  // namespace

BENCHMARK_MAIN();
