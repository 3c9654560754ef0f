#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pi1/errors.hpp"

namespace pi1 {

// Surface descriptor: S(g,n) orientable, N(g,n) non-orientable (g >= 1).
struct SurfaceKind {
  bool orientable = true;
  int genus = 0;
  int boundary = 0;

  bool valid() const {
    return genus >= 0 && boundary >= 0 && (orientable || genus >= 1);
  }
  bool closed() const { return boundary == 0; }
  friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;
};

SurfaceKind parse_surface(std::string_view text);  // "S:g,n" / "N:g,n"
std::string to_string(const SurfaceKind& k);

// Generator symbol families.
//   alpha/beta/gamma: orientable base loops a_i, b_i, c_k
//   x/y:              non-orientable base loops x_i, y_k
//   xpair:            X_{ij} = x_i x_j (two indices)
//   yplus/zplus:      y_k, z_k = x_g y_k x_g^-1 at the pi_plus / RS levels
//   u/v:              Reidemeister-Schreier coset generators u_i = x_i x_g^-1, v_j = x_g x_j
enum class Family : std::uint8_t { alpha, beta, gamma, x, y, xpair, yplus, zplus, u, v };

struct GenSym {
  Family family = Family::x;
  std::int16_t i = 0;
  std::int16_t j = 0;  // second index, xpair only

  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

std::string to_string(const GenSym& s);

inline GenSym sym(Family f, int i, int j = 0) {
  return GenSym{f, static_cast<std::int16_t>(i), static_cast<std::int16_t>(j)};
}

enum class AlphabetKind : std::uint8_t {
  orientable_base,
  nonorientable_base,
  plus,
  reidemeister_schreier,
};

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

// Ordered generator list for one presentation level.  The order is canonical
// (family blocks, ascending indices) so exponent vectors are reproducible.
class Alphabet {
 public:
  static AlphabetRef orientable_base(int g, int n);
  static AlphabetRef nonorientable_base(int g, int n);
  static AlphabetRef plus(int g, int n);
  static AlphabetRef reidemeister_schreier(int g, int n);
  static AlphabetRef for_kind(const SurfaceKind& k);  // base alphabet of the kind

  std::span<const GenSym> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::optional<std::size_t> index_of(const GenSym& s) const;
  bool contains(const GenSym& s) const { return index_of(s).has_value(); }

  AlphabetKind alphabet_kind() const { return kind_; }
  int genus() const { return genus_; }
  int boundary() const { return boundary_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.kind_ == b.kind_ && a.symbols_ == b.symbols_;
  }

 private:
  Alphabet(AlphabetKind kind, int g, int n, std::vector<GenSym> symbols);

  AlphabetKind kind_;
  int genus_;
  int boundary_;
  std::vector<GenSym> symbols_;
};

// True when words over `a` may be combined with words over `b`.
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

}  // namespace pi1
