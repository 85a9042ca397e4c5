#include <benchmark/benchmark.h>

#include "monvar/catalog.hpp"
#include "monvar/deciders.hpp"
#include "monvar/decomposition.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/harness.hpp"

namespace {

  using namespace monvar;

  void BM_Profile(benchmark::State& state) {
    Word w = delta(static_cast<size_t>(state.range(0)), 1).lhs;
    for (auto _ : state) {
      WordProfile p(w);
      benchmark::DoNotOptimize(p.stabilization_level());
    }
    state.SetLabel(std::to_string(w.size()) + " letters");
  }
  BENCHMARK(BM_Profile)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

  void BM_DecideChain(benchmark::State& state) {
    auto        chain = chain_of(3);
    WordProfile u(parse_word("xyxzxy")), v(parse_word("xyzxyx"));
    for (auto _ : state) {
      for (auto const& V : chain) {
        benchmark::DoNotOptimize(decide(V, u, v).holds);
      }
    }
  }
  BENCHMARK(BM_DecideChain);

  void BM_ExhaustiveChain(benchmark::State& state) {
    RunConfig cfg;
    cfg.kmax    = 2;
    cfg.letters = 2;
    cfg.max_len = static_cast<size_t>(state.range(0));
    cfg.workers = 1;
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_chain(cfg).overall());
    }
  }
  BENCHMARK(BM_ExhaustiveChain)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

  void BM_SatisfiesL(benchmark::State& state) {
    auto     M  = rees_quotient({l_generator()});
    Identity id = sigma2();
    for (auto _ : state) {
      benchmark::DoNotOptimize(satisfies(M, id));
    }
  }
  BENCHMARK(BM_SatisfiesL)->Unit(benchmark::kMillisecond);

  void BM_IsotermL(benchmark::State& state) {
    std::vector<Word> W = {l_generator()};
    for (auto _ : state) {
      auto r = isoterm_search(
          parse_word("xyx"),
          [&](Identity const& id) { return oracle_decide(W, id); },
          2);
      benchmark::DoNotOptimize(r.witness);
    }
  }
  BENCHMARK(BM_IsotermL)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
