#include "pi1/symbols.hpp"

#include <algorithm>
#include <charconv>

namespace pi1 {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::malformed_exponent: return "MalformedExponent";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::missing_image: return "MissingImage";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::invalid_kind: return "InvalidKind";
    case Errc::invalid_loop_name: return "InvalidLoopName";
    case Errc::unsupported_level: return "UnsupportedLevel";
    case Errc::invalid_name: return "InvalidName";
    case Errc::no_relator: return "NoRelator";
    case Errc::requires_closed: return "RequiresClosed";
    case Errc::wrong_alphabet: return "WrongAlphabet";
    case Errc::invalid_symbol: return "InvalidSymbol";
    case Errc::corpus_error: return "CorpusError";
  }
  return "Error";
}

SurfaceKind parse_surface(std::string_view text) {
  SurfaceKind k;
  if (text.size() < 4 || (text[0] != 'S' && text[0] != 'N') || text[1] != ':')
    raise(Errc::invalid_kind, "surface descriptor must look like S:g,n or N:g,n, got '" +
                                  std::string(text) + "'");
  k.orientable = text[0] == 'S';
  auto body = text.substr(2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos)
    raise(Errc::invalid_kind, "missing ',' in surface descriptor '" + std::string(text) + "'");
  auto parse_int = [&](std::string_view s, int& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || p != s.data() + s.size())
      raise(Errc::invalid_kind, "bad number in surface descriptor '" + std::string(text) + "'");
  };
  parse_int(body.substr(0, comma), k.genus);
  parse_int(body.substr(comma + 1), k.boundary);
  if (!k.valid())
    raise(Errc::invalid_kind, "invalid surface " + std::string(text));
  return k;
}

std::string to_string(const SurfaceKind& k) {
  return std::string(k.orientable ? "S:" : "N:") + std::to_string(k.genus) + "," +
         std::to_string(k.boundary);
}

std::string to_string(const GenSym& s) {
  switch (s.family) {
    case Family::alpha: return "a" + std::to_string(s.i);
    case Family::beta: return "b" + std::to_string(s.i);
    case Family::gamma: return "c" + std::to_string(s.i);
    case Family::x: return "x" + std::to_string(s.i);
    case Family::y: return "y" + std::to_string(s.i);
    case Family::xpair: return "X" + std::to_string(s.i) + "_" + std::to_string(s.j);
    case Family::yplus: return "y" + std::to_string(s.i);
    case Family::zplus: return "z" + std::to_string(s.i);
    case Family::u: return "u" + std::to_string(s.i);
    case Family::v: return "v" + std::to_string(s.i);
  }
  return "?";
}

Alphabet::Alphabet(AlphabetKind kind, int g, int n, std::vector<GenSym> symbols)
    : kind_(kind), genus_(g), boundary_(n), symbols_(std::move(symbols)) {}

AlphabetRef Alphabet::orientable_base(int g, int n) {
  if (g < 0 || n < 0) raise(Errc::invalid_kind, "orientable base alphabet needs g,n >= 0");
  std::vector<GenSym> syms;
  for (int i = 1; i <= g; ++i) syms.push_back(sym(Family::alpha, i));
  for (int i = 1; i <= g; ++i) syms.push_back(sym(Family::beta, i));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::gamma, k));
  return AlphabetRef(new Alphabet(AlphabetKind::orientable_base, g, n, std::move(syms)));
}

AlphabetRef Alphabet::nonorientable_base(int g, int n) {
  if (g < 1 || n < 0) raise(Errc::invalid_kind, "non-orientable base alphabet needs g >= 1");
  std::vector<GenSym> syms;
  for (int i = 1; i <= g; ++i) syms.push_back(sym(Family::x, i));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::y, k));
  return AlphabetRef(new Alphabet(AlphabetKind::nonorientable_base, g, n, std::move(syms)));
}

AlphabetRef Alphabet::plus(int g, int n) {
  if (g < 1 || n < 0) raise(Errc::invalid_kind, "plus alphabet needs g >= 1");
  std::vector<GenSym> syms;
  for (int i = 1; i <= g - 1; ++i) syms.push_back(sym(Family::xpair, i, i + 1));
  for (int j = 1; j <= g; ++j) syms.push_back(sym(Family::xpair, j, j));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::yplus, k));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::zplus, k));
  return AlphabetRef(new Alphabet(AlphabetKind::plus, g, n, std::move(syms)));
}

AlphabetRef Alphabet::reidemeister_schreier(int g, int n) {
  if (g < 1 || n < 0) raise(Errc::invalid_kind, "RS alphabet needs g >= 1");
  std::vector<GenSym> syms;
  for (int i = 1; i <= g - 1; ++i) syms.push_back(sym(Family::u, i));
  for (int j = 1; j <= g; ++j) syms.push_back(sym(Family::v, j));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::yplus, k));
  for (int k = 1; k <= n - 1; ++k) syms.push_back(sym(Family::zplus, k));
  return AlphabetRef(new Alphabet(AlphabetKind::reidemeister_schreier, g, n, std::move(syms)));
}

AlphabetRef Alphabet::for_kind(const SurfaceKind& k) {
  if (!k.valid()) raise(Errc::invalid_kind, "invalid surface kind");
  return k.orientable ? orientable_base(k.genus, k.boundary)
                      : nonorientable_base(k.genus, k.boundary);
}

std::optional<std::size_t> Alphabet::index_of(const GenSym& s) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace pi1
