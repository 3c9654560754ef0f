#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pi1/folding.hpp"
#include "pi1/surface.hpp"

using namespace pi1;

namespace {

AlphabetRef F2 = Alphabet::nonorientable_base(2, 0);

Word W(const char* text, const AlphabetRef& a = F2) { return parse_word(text, a); }

std::vector<Word> kernel_gens() { return {W("x1 x1"), W("x1 x2"), W("x2 x2")}; }

// Exhaustively checks the graph language against the orientation parity
// character on all reduced words up to the given length; together with
// completeness this certifies index two independently of the fold.
void check_against_parity(const SubgroupGraph& g, int max_len) {
  std::vector<Word> frontier{Word(F2)};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      CHECK(g.member(w) == (orientation_character(w) == 0));
      if (len == max_len) continue;
      for (const GenSym& s : F2->symbols()) {
        for (int sign : {1, -1}) {
          Word e = mul(w, single(F2, s, sign));
          if (e.size() == w.size() + 1) next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
}

Word random_word(std::mt19937_64& rng, const AlphabetRef& a, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, a->size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  int target = len(rng);
  for (int i = 0; i < target; ++i)
    letters.push_back({a->symbols()[pick(rng)], static_cast<std::int8_t>(coin(rng) ? 1 : -1)});
  return Word(a, letters);
}

}  // namespace

TEST_CASE("trivial subgroup") {
  SubgroupGraph g = SubgroupGraph::build(F2, {});
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.rank() == 0);
  CHECK(g.basis().empty());
  CHECK(g.member(Word(F2)));
  CHECK_FALSE(g.member(W("x1")));
}

TEST_CASE("index-two kernel graph") {
  auto gens = kernel_gens();
  SubgroupGraph g = SubgroupGraph::build(F2, gens);
  CHECK(g.vertex_count() == 2);
  CHECK(g.rank() == 3);  // Nielsen-Schreier: 2*(2-1)+1
  CHECK(g.index() == std::optional<std::size_t>{2});
  CHECK(g.member(W("x1 x2")));
  CHECK_FALSE(g.member(W("x1")));
  CHECK(g.member(W("x2 x1^-1")));  // x2^2 (x1 x2)^-1
  check_against_parity(g, 6);

  auto basis = g.basis();
  CHECK(basis.size() == 3);
  for (const Word& b : basis) CHECK(orientation_character(b) == 0);
  SubgroupGraph regen = SubgroupGraph::build(F2, basis);
  CHECK(regen.rank() == g.rank());
  CHECK(regen.index() == g.index());
}

TEST_CASE("single loop and whole group") {
  SubgroupGraph loop = SubgroupGraph::build(F2, {W("x1 x2")});
  CHECK(loop.vertex_count() == 2);
  CHECK(loop.rank() == 1);
  CHECK_FALSE(loop.index().has_value());
  CHECK(loop.member(W("x1 x2")));
  CHECK(loop.basis() == std::vector<Word>{W("x1 x2")});

  SubgroupGraph whole = SubgroupGraph::build(F2, {W("x1"), W("x2")});
  CHECK(whole.index() == std::optional<std::size_t>{1});
  CHECK(whole.rank() == 2);

  SubgroupGraph cyclic = SubgroupGraph::build(F2, {W("x1")});
  CHECK_FALSE(cyclic.index().has_value());  // x2 edges absent
}

TEST_CASE("membership closed under products of generators") {
  std::mt19937_64 rng(99);
  auto gens = kernel_gens();
  SubgroupGraph g = SubgroupGraph::build(F2, gens);
  std::uniform_int_distribution<int> count(1, 6), pick(0, 2), coin(0, 1);
  for (int t = 0; t < 2000; ++t) {
    Word w(F2);
    for (int f = 0; f < count(rng); ++f) {
      Word gword = gens[pick(rng)];
      w = mul(w, coin(rng) ? gword : inv(gword));
    }
    CHECK(g.member(w));
  }
}

TEST_CASE("fold order never changes the result") {
  std::mt19937_64 rng(1234);
  auto a = Alphabet::nonorientable_base(3, 0);
  for (int t = 0; t < 300; ++t) {
    std::vector<Word> gens;
    std::uniform_int_distribution<int> ngens(1, 5);
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_word(rng, a, 8));
    SubgroupGraph g1 = SubgroupGraph::build(a, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    SubgroupGraph g2 = SubgroupGraph::build(a, gens);
    CHECK(g1.rank() == g2.rank());
    CHECK(g1.index() == g2.index());
    CHECK(g1.vertex_count() == g2.vertex_count());
    for (int p = 0; p < 20; ++p) {
      Word probe = random_word(rng, a, 10);
      CHECK(g1.member(probe) == g2.member(probe));
    }
  }
}

TEST_CASE("permutation covers satisfy Nielsen-Schreier") {
  std::mt19937_64 rng(5150);
  auto a = Alphabet::nonorientable_base(3, 0);  // rank-3 free group
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> deg(1, 8);
    std::size_t k = deg(rng);
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t s = 0; s < a->size(); ++s) {
      std::vector<std::size_t> p(k);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    SubgroupGraph cover = SubgroupGraph::from_permutation_action(a, perms);
    auto index = cover.index();
    REQUIRE(index.has_value());  // covers are complete
    CHECK(cover.rank() == *index * (a->size() - 1) + 1);
    auto basis = cover.basis();
    CHECK(basis.size() == cover.rank());
    for (const Word& b : basis) CHECK(cover.member(b));
    SubgroupGraph regen = SubgroupGraph::build(a, basis);
    CHECK(regen.rank() == cover.rank());
    CHECK(regen.index() == cover.index());
  }
}

TEST_CASE("build rejects mixed alphabets") {
  auto other = Alphabet::orientable_base(1, 0);
  CHECK_THROWS_AS(SubgroupGraph::build(F2, {parse_word("a1", other)}), Error);
}
