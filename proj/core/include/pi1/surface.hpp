#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pi1/word.hpp"

namespace pi1 {

// pi_1 presentation of a surface: free for n >= 1; one relator when closed
// and the group is not free.  For closed hyperbolic kinds the symmetrized
// relator set (all rotations of R and R^-1) is precomputed for the word
// problem.
struct SurfacePresentation {
  SurfaceKind kind;
  AlphabetRef alphabet;
  std::optional<Word> relator;
  std::vector<Word> symmetrized;  // rotations of R^{+-1}; empty when free
};

// pi_1^+ carries two relators in the closed case, so it is a distinct
// flavor.  No word problem is offered beyond free reduction.
struct PlusPresentation {
  SurfaceKind kind;
  AlphabetRef alphabet;
  std::vector<Word> relators;  // empty (n >= 1) or exactly two (n = 0)
};

SurfacePresentation pi1_presentation(const SurfaceKind& kind);
PlusPresentation plus_presentation(const SurfaceKind& kind);

Word surface_relator(const SurfaceKind& kind, const AlphabetRef& alphabet);

// Canonical loops from the figures: derived boundary loops and the
// separating-loop normal positions.
struct LoopName {
  enum class Tag {
    gamma_n,     // orientable last boundary loop
    delta,       // delta_i, 1 <= i <= g-1
    epsilon,     // epsilon_k, 1 <= k <= n
    y_n,         // non-orientable last boundary loop
    z_n,         // x_g y_n x_g^-1
    xpair,       // x_i x_j
    sep_orientable,     // bounds Sigma_{h,m+1}
    sep_nonorientable,  // cases a..e of the non-orientable complement list
  };
  Tag tag;
  int i = 0;       // delta/epsilon index, xpair first index, sep h
  int j = 0;       // xpair second index, sep m
  char variant = 0;  // sep_nonorientable case 'a'..'e'

  static LoopName gamma_n() { return {Tag::gamma_n}; }
  static LoopName delta(int i) { return {Tag::delta, i}; }
  static LoopName epsilon(int k) { return {Tag::epsilon, k}; }
  static LoopName y_n() { return {Tag::y_n}; }
  static LoopName z_n() { return {Tag::z_n}; }
  static LoopName xpair(int i, int j) { return {Tag::xpair, i, j}; }
  static LoopName sep_orientable(int h, int m) { return {Tag::sep_orientable, h, m}; }
  static LoopName sep_nonorientable(char variant, int h = 0, int m = 0) {
    return {Tag::sep_nonorientable, h, m, variant};
  }
};

Word canonical_loop(const SurfaceKind& kind, const LoopName& name);

// Parity of the total x-exponent; 0 exactly on the orientation-preserving
// (two-sided) classes.  Defined on non-orientable base words.
int orientation_character(const Word& w);

bool is_trivial(const Word& w, const SurfacePresentation& p);
bool equal_in(const SurfacePresentation& p, const Word& u, const Word& v);

}  // namespace pi1
