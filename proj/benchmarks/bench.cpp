#include <benchmark/benchmark.h>

#include "orbita/dsl.hpp"
#include "orbita/orbit.hpp"

using namespace orbita;

namespace {

Morphism make_map(const std::string& components) {
    ParseResult r = parse("map f : P1 -> P1 = " + components);
    return *r.document->find_map("f");
}

void bm_enumerate_bounded(benchmark::State& state) {
    BigInt m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bounded(1, m).points.size());
}
BENCHMARK(bm_enumerate_bounded)->Arg(10)->Arg(50)->Arg(200);

void bm_resultant(benchmark::State& state) {
    unsigned d = static_cast<unsigned>(state.range(0));
    std::vector<BigInt> ca(d + 1), cb(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        ca[i] = BigInt(3) * i + 1;
        cb[i] = BigInt(7) - i;
    }
    BinaryForm F(d, ca), G(d, cb);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(F, G));
}
BENCHMARK(bm_resultant)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void bm_cofactors(benchmark::State& state) {
    unsigned d = static_cast<unsigned>(state.range(0));
    std::vector<BigInt> ca(d + 1), cb(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        ca[i] = BigInt(3) * i + 1;
        cb[i] = BigInt(7) - i;
    }
    BinaryForm F(d, ca), G(d, cb);
    for (auto _ : state) benchmark::DoNotOptimize(solve_sylvester_cofactors(F, G).res);
}
BENCHMARK(bm_cofactors)->Arg(2)->Arg(5)->Arg(10);

void bm_periodic_points(benchmark::State& state) {
    Morphism f = make_map("[x0^2 - x1^2, x1^2]");
    for (auto _ : state) benchmark::DoNotOptimize(periodic_points(f).cycles.size());
}
BENCHMARK(bm_periodic_points);

void bm_ec_mul(benchmark::State& state) {
    auto e = EllipticCurve::create(0, -2);
    ECPoint g(BigRat(3), BigRat(5));
    long long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ec_mul(e, m, g).is_infinity());
}
BENCHMARK(bm_ec_mul)->Arg(5)->Arg(25)->Arg(100);

void bm_parse(benchmark::State& state) {
    std::string src = "map f : P1 -> P1 = [7*x0^4 - 3*x0^2*x1^2 + x1^4, x0*x1^3 + 5*x1^4]";
    for (auto _ : state) benchmark::DoNotOptimize(parse(src).ok());
}
BENCHMARK(bm_parse);

} // namespace

BENCHMARK_MAIN();
