#include <benchmark/benchmark.h>

#include "opd/embedding.hpp"
#include "opd/groebner.hpp"
#include "opd/presets.hpp"
#include "opd/rewriting.hpp"

using namespace opd;

static void BM_enumerate(benchmark::State& state) {
  const Signature sig = preset("prelie").sig;
  const int arity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long total = 0;
    for (const Tree& t : enumerate_monomials(sig, arity)) total += tree_weight(t);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_enumerate)->Arg(5)->Arg(6);

static void BM_complete_lie(benchmark::State& state) {
  const Presentation p = preset("lie");
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = complete(p, N, 1);
    benchmark::DoNotOptimize(r.basis.size());
  }
}
BENCHMARK(BM_complete_lie)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_complete_dend(benchmark::State& state) {
  const Presentation p = preset("dend");
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = complete(p, N, 1);
    benchmark::DoNotOptimize(r.basis.size());
  }
}
BENCHMARK(BM_complete_dend)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_normal_form(benchmark::State& state) {
  const Presentation p = preset("dend");
  static const GroebnerResult r = complete(p, 6, 1);
  static const RewriteSystem rs = r.rewrite_system();
  const int arity = static_cast<int>(state.range(0));
  Element f;
  int i = 0;
  for (const Tree& t : enumerate_monomials(p.sig, arity)) {
    add_term(f, t, Rational(1 + (i % 5)));
    if (++i == 40) break;
  }
  for (auto _ : state) {
    Element nf = normal_form(rs, f);
    benchmark::DoNotOptimize(nf.terms.size());
  }
}
BENCHMARK(BM_normal_form)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_find_embeddings(benchmark::State& state) {
  const Signature sig = preset("prelie").sig;
  const Tree pattern = parse_tree(sig, "alpha(alpha(1,2),3)");
  const auto& hosts = enumerate_monomials(sig, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long total = 0;
    for (const Tree& h : hosts) total += static_cast<long>(find_embeddings(h, pattern).size());
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_find_embeddings)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
