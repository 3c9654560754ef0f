#include <doctest.h>

#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"

using namespace pi1;

namespace {

Word W(const char* text, const AlphabetRef& a) { return parse_word(text, a); }

}  // namespace

TEST_CASE("plus generator expansions") {
  SurfaceKind n32{false, 3, 2};
  auto base = Alphabet::for_kind(n32);
  CHECK(plus_generator_expansion(n32, sym(Family::xpair, 1, 2)) == W("x1 x2", base));
  CHECK(plus_generator_expansion(n32, sym(Family::zplus, 1)) == W("x3 y1 x3^-1", base));
  CHECK(plus_generator_expansion(n32, sym(Family::yplus, 1)) == W("y1", base));
  CHECK_THROWS_AS(plus_generator_expansion(n32, sym(Family::x, 1)), Error);
  // every expansion is two sided
  AlphabetRef plus = Alphabet::plus(3, 2);
  for (const GenSym& s : plus->symbols())
    CHECK(orientation_character(plus_generator_expansion(n32, s)) == 0);
}

TEST_CASE("pair words over the plus alphabet") {
  SurfaceKind n40{false, 4, 0};
  SymbolMap down = plus_to_base(n40);
  auto base = Alphabet::for_kind(n40);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      Word pair = plus_pair_word(n40, i, j);
      CHECK(substitute(pair, down) ==
            mul(single(base, sym(Family::x, i)), single(base, sym(Family::x, j))));
    }
  }
}

TEST_CASE("Schreier generators for the transversal {1, x_g}") {
  SurfaceKind n20{false, 2, 0};
  RSAlphabet rs = rs_generators(n20);
  CHECK(rs.alphabet->size() == 3);  // u1, v1, v2
  auto base = Alphabet::for_kind(n20);
  CHECK(substitute(single(rs.alphabet, sym(Family::u, 1)), rs.to_base) == W("x1 x2^-1", base));
  CHECK(substitute(single(rs.alphabet, sym(Family::v, 1)), rs.to_base) == W("x2 x1", base));
  CHECK(substitute(single(rs.alphabet, sym(Family::v, 2)), rs.to_base) == W("x2 x2", base));

  SurfaceKind n22{false, 2, 2};
  RSAlphabet rs22 = rs_generators(n22);
  CHECK(rs22.alphabet->size() == 5);  // adds y1, z1
  CHECK(rs22.alphabet->contains(sym(Family::yplus, 1)));
  CHECK(rs22.alphabet->contains(sym(Family::zplus, 1)));

  // index check through folding
  std::vector<Word> expansions;
  for (const GenSym& s : rs22.alphabet->symbols())
    expansions.push_back(substitute(single(rs22.alphabet, s), rs22.to_base));
  SubgroupGraph graph = SubgroupGraph::build(Alphabet::for_kind(n22), expansions);
  CHECK(graph.index() == std::optional<std::size_t>{2});
  CHECK(graph.rank() == 5);
}

TEST_CASE("rewritten relators") {
  SurfaceKind n20{false, 2, 0};
  auto [r1, r2] = rs_relators(n20);
  RSAlphabet rs = rs_generators(n20);
  CHECK(r1 == W("u1 v1 v2", rs.alphabet));
  CHECK(r2 == W("v1 u1 v2", rs.alphabet));
  auto base = Alphabet::for_kind(n20);
  CHECK(substitute(r1, rs.to_base) == W("x1 x1 x2 x2", base));
  CHECK(substitute(r2, rs.to_base) == conj(W("x2", base), W("x1 x1 x2 x2", base)));
  CHECK_THROWS_AS(rs_relators({false, 2, 1}), Error);
}

TEST_CASE("phi and psi are mutually inverse") {
  SurfaceKind n40{false, 4, 0};
  IsoPair iso = iso_pair(n40);
  AlphabetRef plus = Alphabet::plus(4, 0);
  AlphabetRef rs = Alphabet::reidemeister_schreier(4, 0);
  for (const GenSym& s : plus->symbols())
    CHECK(substitute(substitute(single(plus, s), iso.phi), iso.psi) == single(plus, s));
  for (const GenSym& s : rs->symbols())
    CHECK(substitute(substitute(single(rs, s), iso.psi), iso.phi) == single(rs, s));

  // phi carries the first plus relator to the first rewritten relator
  SurfaceKind n20{false, 2, 0};
  IsoPair iso2 = iso_pair(n20);
  PlusPresentation pp = plus_presentation(n20);
  auto [r1, r2] = rs_relators(n20);
  CHECK(substitute(pp.relators[0], iso2.phi) == r1);
  CHECK(substitute(pp.relators[1], iso2.phi) == r2);
}

TEST_CASE("verify_iso") {
  CheckReport closed = verify_iso({false, 4, 0});
  CHECK(closed.passed);
  CheckReport free_case = verify_iso({false, 2, 3});
  CHECK(free_case.passed);
  bool skipped = false;
  for (const auto& note : free_case.notes)
    if (note.find("skipped") != std::string::npos) skipped = true;
  CHECK(skipped);
}

TEST_CASE("a corrupted psi is reported with the offending generator") {
  SurfaceKind n30{false, 3, 0};
  IsoPair iso = iso_pair(n30);
  AlphabetRef plus = Alphabet::plus(3, 0);
  iso.psi.images[sym(Family::u, 1)] = single(plus, sym(Family::xpair, 1, 1));
  bool failed = false;
  AlphabetRef rs = Alphabet::reidemeister_schreier(3, 0);
  for (const GenSym& s : rs->symbols()) {
    if (!(substitute(substitute(single(rs, s), iso.psi), iso.phi) == single(rs, s))) {
      failed = true;
      CHECK(s == sym(Family::u, 1));
    }
  }
  CHECK(failed);
}
