#include "arqkit/diagrams.hpp"
#include "arqkit/knitting.hpp"
#include "arqkit/matrices.hpp"
#include "arqkit/translation_quiver.hpp"
#include "arqkit/tubes.hpp"

#include <benchmark/benchmark.h>

using namespace arqkit;

namespace {

Quiver linear_quiver(int n)
{
    Quiver q;
    for (int i = 1; i <= n; ++i)
        q.add_vertex(std::to_string(i));
    for (int i = 1; i < n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
    return q;
}

DiagramType tag(DiagramType::Family f, int n)
{
    DiagramType t;
    t.family = f;
    t.n = n;
    return t;
}

} // namespace

static void BM_KnitLinear(benchmark::State& state)
{
    Quiver q = linear_quiver(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(knit_hereditary(q, KnitDirection::Right));
}
BENCHMARK(BM_KnitLinear)->Arg(4)->Arg(8)->Arg(16);

static void BM_KnitKronecker(benchmark::State& state)
{
    Quiver q = parse_quiver("vertices 1 2; arrows a:1->2 b:1->2");
    for (auto _ : state)
        benchmark::DoNotOptimize(knit_hereditary(q, KnitDirection::Left, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KnitKronecker)->Arg(8)->Arg(32);

static void BM_TranslationMatrixPower(benchmark::State& state)
{
    Slice s = dynkin_slice(tag(DiagramType::Family::E, 8));
    IntMatrix m = translation_matrix(s.window, s.sigma);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.pow(static_cast<unsigned long long>(state.range(0))));
}
BENCHMARK(BM_TranslationMatrixPower)->Arg(15)->Arg(1000);

static void BM_IsomorphismStableTube(benchmark::State& state)
{
    int r = static_cast<int>(state.range(0));
    TranslationQuiver a = stable_tube(r, 6);
    TranslationQuiver b = coray_insertion(stable_tube(r, 6), 0, 1);
    TranslationQuiver c = coray_insertion(stable_tube(r, 6), 0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_isomorphism(a, a));
        benchmark::DoNotOptimize(find_isomorphism(b, c));
    }
}
BENCHMARK(BM_IsomorphismStableTube)->Arg(2)->Arg(4);

static void BM_ClassifyCatalog(benchmark::State& state)
{
    auto catalog = diagram_catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& entry : catalog)
            benchmark::DoNotOptimize(classify(entry.second));
}
BENCHMARK(BM_ClassifyCatalog)->Arg(12);

BENCHMARK_MAIN();
