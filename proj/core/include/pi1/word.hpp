#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pi1/symbols.hpp"

namespace pi1 {

struct Letter {
  GenSym sym;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{sym, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over a fixed alphabet.  Immutable value; every
// constructor reduces eagerly, so equality of elements is equality of values.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  Word(AlphabetRef alphabet, std::span<const Letter> letters);

  const AlphabetRef& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

Word single(const AlphabetRef& a, const GenSym& s, int sign = 1);

Word mul(const Word& a, const Word& b);
Word inv(const Word& w);
Word conj(const Word& a, const Word& b);  // a b a^-1
Word comm(const Word& a, const Word& b);  // a b a^-1 b^-1
Word pow(const Word& w, int k);

// w = conjugator . core . conjugator^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Conjugacy test for cyclically reduced words.
bool is_cyclic_rotation(const Word& u, const Word& v);

std::vector<long> exponent_vector(const Word& w);

// Homomorphism given by generator images.  Unlisted symbols map to
// themselves unless the map is declared total.
struct SymbolMap {
  AlphabetRef target;
  std::map<GenSym, Word> images;
  bool total = false;
};

Word substitute(const Word& w, const SymbolMap& map);

Word parse_word(std::string_view text, const AlphabetRef& alphabet);
std::string to_string(const Word& w);

}  // namespace pi1
