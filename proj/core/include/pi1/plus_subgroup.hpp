#pragma once

#include <utility>

#include "pi1/report.hpp"
#include "pi1/surface.hpp"
#include "pi1/word.hpp"

namespace pi1 {

// Base-alphabet expansion of a pi_plus generator: X_ij -> x_i x_j,
// y_k -> y_k, z_k -> x_g y_k x_g^-1.
Word plus_generator_expansion(const SurfaceKind& kind, const GenSym& s);

// Expansion maps onto the base alphabet for whole words.
SymbolMap plus_to_base(const SurfaceKind& kind);
SymbolMap rs_to_base(const SurfaceKind& kind);

// x_ij written over the pi_plus alphabet, valid for any 1 <= i, j <= g:
// off-diagonal pairs resolve recursively through x_{i j} =
// x_{i j-1} x_{j-1 j-1}^-1 x_{j-1 j} and x_{j i} = x_{jj} x_{ij}^-1 x_{ii}.
Word plus_pair_word(const SurfaceKind& kind, int i, int j);

// Derived last-boundary loops over the pi_plus alphabet.
Word plus_y_n(const SurfaceKind& kind);
Word plus_z_n(const SurfaceKind& kind);

// Schreier generators of the orientation kernel for transversal {1, x_g}.
struct RSAlphabet {
  AlphabetRef alphabet;
  SymbolMap to_base;
};
RSAlphabet rs_generators(const SurfaceKind& kind);

// The two rewritten relators over the RS alphabet (closed case only).
std::pair<Word, Word> rs_relators(const SurfaceKind& kind);

// phi: plus presentation -> RS generators, psi: its inverse.
struct IsoPair {
  SymbolMap phi;
  SymbolMap psi;
};
IsoPair iso_pair(const SurfaceKind& kind);

// (a) mutual inverse on generators, (b) relator correspondence at n = 0,
// (c) expansion compatibility with the defining base words.
CheckReport verify_iso(const SurfaceKind& kind);

}  // namespace pi1
