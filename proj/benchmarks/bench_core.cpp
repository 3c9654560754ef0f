#include <benchmark/benchmark.h>

#include <random>

#include "pi1/action.hpp"
#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"
#include "pi1/surface.hpp"

using namespace pi1;

namespace {

Word random_word(std::mt19937_64& rng, const AlphabetRef& a, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, a->size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i)
    letters.push_back({a->symbols()[pick(rng)], static_cast<std::int8_t>(coin(rng) ? 1 : -1)});
  return Word(a, letters);
}

void BM_reduce_mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto a = Alphabet::nonorientable_base(4, 2);
  Word u = random_word(rng, a, static_cast<int>(state.range(0)));
  Word v = random_word(rng, a, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(u, v));
}
BENCHMARK(BM_reduce_mul)->Arg(16)->Arg(128)->Arg(1024);

void BM_fold_kernel(benchmark::State& state) {
  SurfaceKind kind{false, static_cast<int>(state.range(0)), 2};
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  std::vector<Word> gens;
  for (const GenSym& s : plus->symbols()) gens.push_back(plus_generator_expansion(kind, s));
  AlphabetRef base = Alphabet::for_kind(kind);
  for (auto _ : state) {
    SubgroupGraph g = SubgroupGraph::build(base, gens);
    benchmark::DoNotOptimize(g.rank());
  }
}
BENCHMARK(BM_fold_kernel)->Arg(2)->Arg(4)->Arg(6);

void BM_dehn_trivial(benchmark::State& state) {
  std::mt19937_64 rng(2);
  SurfaceKind kind{false, 4, 0};
  SurfacePresentation p = pi1_presentation(kind);
  std::vector<Word> words;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 64; ++i) {
    Word w(p.alphabet);
    for (int f = 0; f < 3; ++f)
      w = mul(w, conj(random_word(rng, p.alphabet, 8), coin(rng) ? *p.relator : inv(*p.relator)));
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_trivial(words[i % words.size()], p));
    ++i;
  }
}
BENCHMARK(BM_dehn_trivial);

void BM_apply_table(benchmark::State& state) {
  SurfaceKind kind{false, 4, 2};
  AutoTable table = action_table(Corpus::embedded(), ActionGenName{ActionKind::t_b}, Level::pi, kind);
  std::mt19937_64 rng(3);
  Word w = random_word(rng, table.alphabet, 64);
  for (auto _ : state) benchmark::DoNotOptimize(apply(table, Direction::fwd, w));
}
BENCHMARK(BM_apply_table);

}  // namespace

BENCHMARK_MAIN();
