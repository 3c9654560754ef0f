#include "pi1/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace pi1 {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().sym == l.sym && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void append_reduced(std::vector<Letter>& out, std::span<const Letter> tail, bool invert = false) {
  if (!invert) {
    for (const auto& l : tail) push_reduced(out, l);
  } else {
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) push_reduced(out, it->inverse());
  }
}

void require_same(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    raise(Errc::alphabet_mismatch, "words over different alphabets");
}

}  // namespace

Word::Word(AlphabetRef alphabet, std::span<const Letter> letters)
    : alphabet_(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (!alphabet_ || !alphabet_->contains(l.sym))
      raise(Errc::unknown_symbol, to_string(l.sym) + " not in alphabet");
    push_reduced(letters_, l);
  }
}

Word single(const AlphabetRef& a, const GenSym& s, int sign) {
  Letter l{s, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  return Word(a, std::span<const Letter>(&l, 1));
}

Word mul(const Word& a, const Word& b) {
  require_same(a, b);
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  append_reduced(out, b.letters());
  return Word(a.alphabet(), out);
}

Word inv(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  append_reduced(out, w.letters(), true);
  return Word(w.alphabet(), out);
}

Word conj(const Word& a, const Word& b) { return mul(mul(a, b), inv(a)); }

Word comm(const Word& a, const Word& b) { return mul(mul(a, b), mul(inv(a), inv(b))); }

Word pow(const Word& w, int k) {
  Word acc(w.alphabet());
  const Word& base = k < 0 ? inv(w) : w;
  for (int i = 0; i < std::abs(k); ++i) acc = mul(acc, base);
  return acc;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::span<const Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  std::vector<Letter> conjugator;
  while (hi - lo >= 2 && ls[lo].sym == ls[hi - 1].sym && ls[lo].sign == -ls[hi - 1].sign) {
    conjugator.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  Word core(w.alphabet(), ls.subspan(lo, hi - lo));
  Word c(w.alphabet(), conjugator);
  return {core, c};
}

bool is_cyclic_rotation(const Word& u, const Word& v) {
  require_same(u, v);
  auto cyclically_reduced = [](const Word& w) {
    auto ls = w.letters();
    return ls.size() < 2 || !(ls.front().sym == ls.back().sym && ls.front().sign == -ls.back().sign);
  };
  if (!cyclically_reduced(u) || !cyclically_reduced(v))
    raise(Errc::precondition_violated, "is_cyclic_rotation needs cyclically reduced inputs");
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  std::vector<Letter> doubled(v.letters().begin(), v.letters().end());
  doubled.insert(doubled.end(), v.letters().begin(), v.letters().end());
  for (std::size_t off = 0; off < v.size(); ++off) {
    if (std::equal(u.letters().begin(), u.letters().end(), doubled.begin() + off)) return true;
  }
  return false;
}

std::vector<long> exponent_vector(const Word& w) {
  std::vector<long> vec(w.alphabet() ? w.alphabet()->size() : 0, 0);
  for (const auto& l : w.letters()) {
    auto idx = w.alphabet()->index_of(l.sym);
    vec[*idx] += l.sign;
  }
  return vec;
}

Word substitute(const Word& w, const SymbolMap& map) {
  if (!map.target) raise(Errc::missing_image, "substitution map has no target alphabet");
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    auto it = map.images.find(l.sym);
    if (it != map.images.end()) {
      append_reduced(out, it->second.letters(), l.sign < 0);
    } else if (map.total) {
      raise(Errc::missing_image, "no image for " + to_string(l.sym) + " in total map");
    } else if (map.target->contains(l.sym)) {
      push_reduced(out, l);
    } else {
      raise(Errc::missing_image,
            to_string(l.sym) + " has no image and is absent from the target alphabet");
    }
  }
  return Word(map.target, out);
}

namespace {

// token := symbol exponent? ;  symbol := family index ('_' index)? ;
// exponent := '^' nonzero-integer.  "1" alone denotes the empty word.
struct TokenParser {
  const AlphabetRef& alphabet;

  Family family_for(char c, bool& ok) const {
    ok = true;
    switch (c) {
      case 'a': return Family::alpha;
      case 'b': return Family::beta;
      case 'c': return Family::gamma;
      case 'x': return Family::x;
      case 'u': return Family::u;
      case 'v': return Family::v;
      case 'X': return Family::xpair;
      case 'y':
        return alphabet->alphabet_kind() == AlphabetKind::nonorientable_base ? Family::y
                                                                             : Family::yplus;
      case 'z': return Family::zplus;
      default: ok = false; return Family::x;
    }
  }

  void parse_token(std::string_view tok, std::vector<Letter>& out) const {
    auto caret = tok.find('^');
    std::string_view symtext = tok.substr(0, caret == std::string_view::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string_view::npos) {
      auto etext = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(etext.data(), etext.data() + etext.size(), exp);
      if (ec != std::errc() || p != etext.data() + etext.size() || exp == 0)
        raise(Errc::malformed_exponent, "bad exponent in token '" + std::string(tok) + "'");
    }
    if (symtext.empty()) raise(Errc::unknown_symbol, "empty token");
    bool ok = false;
    Family fam = family_for(symtext[0], ok);
    if (!ok) raise(Errc::unknown_symbol, "unknown symbol '" + std::string(symtext) + "'");
    auto rest = symtext.substr(1);
    auto underscore = rest.find('_');
    auto parse_idx = [&](std::string_view s) {
      int v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        raise(Errc::unknown_symbol, "bad index in token '" + std::string(tok) + "'");
      return v;
    };
    GenSym s;
    if (underscore != std::string_view::npos) {
      if (fam != Family::xpair)
        raise(Errc::unknown_symbol, "two indices only allowed on X symbols: '" +
                                        std::string(tok) + "'");
      s = sym(fam, parse_idx(rest.substr(0, underscore)), parse_idx(rest.substr(underscore + 1)));
    } else {
      if (fam == Family::xpair)
        raise(Errc::unknown_symbol, "X symbols need two indices: '" + std::string(tok) + "'");
      s = sym(fam, parse_idx(rest));
    }
    if (!alphabet->contains(s))
      raise(Errc::index_out_of_range, to_string(s) + " not in alphabet");
    Letter l{s, static_cast<std::int8_t>(exp < 0 ? -1 : 1)};
    for (int t = 0; t < std::abs(exp); ++t) out.push_back(l);
  }
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetRef& alphabet) {
  if (!alphabet) raise(Errc::invalid_kind, "parse_word needs an alphabet");
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.size() == 1 && tokens[0] == "1") return Word(alphabet);
  if (tokens.empty()) raise(Errc::unknown_symbol, "empty word text (use \"1\" for the identity)");
  std::vector<Letter> letters;
  TokenParser parser{alphabet};
  for (auto t : tokens) parser.parse_token(t, letters);
  return Word(alphabet, letters);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int exp = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += to_string(ls[i].sym);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace pi1
