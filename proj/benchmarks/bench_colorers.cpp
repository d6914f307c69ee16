#include <benchmark/benchmark.h>

#include <hgcolor/certified.hpp>
#include <hgcolor/generators.hpp>
#include <hgcolor/local_lemma.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/recolor.hpp>
#include <hgcolor/sparse_vertex.hpp>
#include <hgcolor/stream_io.hpp>

#include <sstream>

namespace {

using namespace hgcolor;

void BM_TapeDraw(benchmark::State& state) {
    const RandomTape tape(42, p_default(12));
    VertexId u = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tape.draw(u++));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TapeDraw);

void BM_UniformEdgeGen(benchmark::State& state) {
    const std::uint64_t v = state.range(0);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(uniform_random_edge(v, 12, 7, i++));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_UniformEdgeGen)->Arg(144)->Arg(4096);

void BM_StreamColor(benchmark::State& state) {
    const std::uint64_t q = state.range(0);
    const auto edges = gen_uniform_random(144, 12, q, 5);
    const RandomTape tape(9, p_default(12));
    for (auto _ : state) {
        VectorEdgeSource src(edges);
        benchmark::DoNotOptimize(stream_color(src, tape));
    }
    state.SetItemsProcessed(state.iterations() * q);
}
BENCHMARK(BM_StreamColor)->Arg(900)->Arg(3600);

void BM_CertifiedStreamColor(benchmark::State& state) {
    const std::uint64_t q = state.range(0);
    const auto edges = gen_uniform_random(144, 12, q, 5);
    const RandomTape tape(9, p_default(12));
    for (auto _ : state) {
        VectorEdgeSource src(edges);
        benchmark::DoNotOptimize(certified_stream_color(src, tape));
    }
    state.SetItemsProcessed(state.iterations() * q);
}
BENCHMARK(BM_CertifiedStreamColor)->Arg(900)->Arg(3600);

void BM_BalancedStreamColor(benchmark::State& state) {
    const auto edges = gen_uniform_random(25, 10, 844, 3);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        VectorEdgeSource src(edges);
        benchmark::DoNotOptimize(balanced_stream_color(src, 25, 10, seed++));
    }
    state.SetItemsProcessed(state.iterations() * edges.size());
}
BENCHMARK(BM_BalancedStreamColor);

void BM_LocalStreamColor(benchmark::State& state) {
    const auto edges = gen_uniform_random(64, 8, 50, 11);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        VectorEdgeSource src(edges);
        benchmark::DoNotOptimize(local_stream_color(src, 8, seed++, 24));
    }
    state.SetItemsProcessed(state.iterations() * edges.size());
}
BENCHMARK(BM_LocalStreamColor);

void BM_ParseStream(benchmark::State& state) {
    std::ostringstream text;
    write_stream(text, EdgeStreamHeader{12, 144, 900}, gen_uniform_random(144, 12, 900, 2));
    const std::string data = text.str();
    for (auto _ : state) {
        std::istringstream in(data);
        EdgeStreamReader reader(in);
        std::uint64_t edges = 0;
        while (reader.next()) ++edges;
        benchmark::DoNotOptimize(edges);
    }
    state.SetItemsProcessed(state.iterations() * 900);
}
BENCHMARK(BM_ParseStream);

void BM_MonoProbExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mono_prob_exact(256, 16));
    }
}
BENCHMARK(BM_MonoProbExact);

}  // namespace
