#include "pi1/corpus.hpp"

#include <cctype>
#include <charconv>

namespace pi1 {

namespace corpus_text {
extern const char* actions;
extern const char* identities;
extern const std::uint64_t pinned_checksum;
}  // namespace corpus_text

Direction parse_direction(std::string_view text) {
  if (text == "fwd") return Direction::fwd;
  if (text == "bwd") return Direction::bwd;
  raise(Errc::corpus_error, "bad direction '" + std::string(text) + "'");
}

std::string to_string(Direction d) { return d == Direction::fwd ? "fwd" : "bwd"; }

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto bar = line.find('|', start);
    if (bar == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, bar - start)));
    start = bar + 1;
  }
  return fields;
}

void parse_name(const std::string& text, ActionRecord& rec) {
  auto paren = text.find('(');
  if (paren == std::string::npos) {
    rec.name_base = text;
    return;
  }
  if (text.back() != ')') raise(Errc::corpus_error, "bad name '" + text + "'");
  rec.name_base = text.substr(0, paren);
  std::string_view args(text.data() + paren + 1, text.size() - paren - 2);
  std::size_t start = 0;
  while (start <= args.size() && !args.empty()) {
    auto comma = args.find(',', start);
    auto piece =
        trim(args.substr(start, comma == std::string_view::npos ? args.size() - start
                                                                : comma - start));
    if (piece.size() == 1 && std::isalpha(static_cast<unsigned char>(piece[0]))) {
      rec.name_params.emplace_back(piece[0]);
    } else {
      int v = 0;
      auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || p != piece.data() + piece.size())
        raise(Errc::corpus_error, "bad name parameter '" + piece + "'");
      rec.name_params.emplace_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line(text.data() + start,
                          (nl == std::string::npos ? text.size() : nl) - start);
    fn(line);
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
}

}  // namespace

Corpus Corpus::parse(std::string actions_text, std::string identities_text,
                     bool enforce_checksum) {
  Corpus c;
  c.actions_text_ = std::move(actions_text);
  c.identities_text_ = std::move(identities_text);
  c.checksum_ = fnv1a64(c.identities_text_, fnv1a64(c.actions_text_));
  if (enforce_checksum && c.checksum_ != pinned_checksum())
    raise(Errc::corpus_error, "corpus checksum mismatch");

  std::string pending_note;
  for_each_line(c.actions_text_, [&](std::string_view line) {
    std::string t = trim(line);
    if (t.empty()) return;
    if (t[0] == '#') {
      if (t.rfind("# orig:", 0) == 0) {
        if (!pending_note.empty()) pending_note += "; ";
        pending_note += trim(t.substr(7));
      }
      return;
    }
    auto fields = split_fields(t);
    if (fields.size() != 7)
      raise(Errc::corpus_error, "action record needs 7 fields: '" + t + "'");
    ActionRecord rec;
    rec.location = fields[0];
    rec.constraint = parse_constraint(fields[1]);
    rec.level = parse_level(fields[2]);
    parse_name(fields[3], rec);
    rec.note = pending_note;
    pending_note.clear();
    if (fields[6].rfind("!untranscribed", 0) == 0) {
      rec.untranscribed = true;
      rec.skip_reason = trim(fields[6].substr(14));
      c.actions_.push_back(std::move(rec));
      return;
    }
    rec.dir = parse_direction(fields[4]);
    auto gen_expr = parse_word_expr(fields[5]);
    if (gen_expr.size() != 1 || gen_expr[0].kind != Expr::Kind::token || gen_expr[0].exp != 1)
      raise(Errc::corpus_error, "generator must be a single symbol: '" + fields[5] + "'");
    rec.generator = gen_expr[0].tok;
    rec.image = parse_word_expr(fields[6]);
    c.actions_.push_back(std::move(rec));
  });

  pending_note.clear();
  for_each_line(c.identities_text_, [&](std::string_view line) {
    std::string t = trim(line);
    if (t.empty()) return;
    if (t[0] == '#') {
      if (t.rfind("# orig:", 0) == 0) {
        if (!pending_note.empty()) pending_note += "; ";
        pending_note += trim(t.substr(7));
      }
      return;
    }
    auto fields = split_fields(t);
    if (fields.size() != 5)
      raise(Errc::corpus_error, "identity record needs 5 fields: '" + t + "'");
    IdentityRecord rec;
    rec.id = fields[0];
    rec.constraint = parse_constraint(fields[1]);
    rec.level = parse_level(fields[2]);
    rec.lhs = parse_word_expr(fields[3]);
    rec.rhs = parse_word_expr(fields[4]);
    rec.note = pending_note;
    pending_note.clear();
    c.identities_.push_back(std::move(rec));
  });

  return c;
}

const Corpus& Corpus::embedded() {
  static const Corpus instance =
      parse(corpus_text::actions, corpus_text::identities, /*enforce_checksum=*/true);
  return instance;
}

std::uint64_t Corpus::pinned_checksum() { return corpus_text::pinned_checksum; }

}  // namespace pi1
