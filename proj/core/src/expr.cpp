#include "pi1/expr.hpp"

#include <cctype>
#include <charconv>
#include <functional>

#include "pi1/plus_subgroup.hpp"

namespace pi1 {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(Errc::corpus_error, what); }

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) bad("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

IdxExpr parse_idx_expr(std::string_view text) {
  if (text.empty()) bad("empty index expression");
  IdxExpr e;
  std::size_t pos = 0;
  std::size_t dstart = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  std::optional<int> lead;
  if (pos > dstart) lead = parse_int(text.substr(dstart, pos - dstart));
  if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
    e.var = text[pos];
    e.coef = lead.value_or(1);
    ++pos;
  } else if (lead) {
    e.off = *lead;
  } else {
    bad("bad index expression '" + std::string(text) + "'");
  }
  if (pos < text.size()) {
    if (text[pos] != '+' && text[pos] != '-')
      bad("bad index expression '" + std::string(text) + "'");
    int s = text[pos] == '-' ? -1 : 1;
    e.off += s * parse_int(text.substr(pos + 1));
  }
  return e;
}

int eval(const IdxExpr& e, const Binding& b) {
  int value = e.off;
  if (e.var != 0) {
    auto it = b.find(e.var);
    if (it == b.end()) bad(std::string("unbound variable '") + e.var + "'");
    value += e.coef * it->second;
  }
  return value;
}

std::string to_string(const IdxExpr& e) {
  if (e.var == 0) return std::to_string(e.off);
  std::string s;
  if (e.coef != 1) s += std::to_string(e.coef);
  s += e.var;
  if (e.off > 0) s += "+" + std::to_string(e.off);
  if (e.off < 0) s += std::to_string(e.off);
  return s;
}

Level parse_level(std::string_view text) {
  if (text == "pi") return Level::pi;
  if (text == "pi_plus") return Level::pi_plus;
  if (text == "rs") return Level::rs;
  bad("unknown level '" + std::string(text) + "'");
}

std::string to_string(Level level) {
  switch (level) {
    case Level::pi: return "pi";
    case Level::pi_plus: return "pi_plus";
    case Level::rs: return "rs";
  }
  return "?";
}

namespace {

// Symbol token: fam then digits, or fam then [expr], optionally _digits/_[expr].
SymToken parse_sym_token(std::string_view text) {
  if (text.empty()) bad("empty symbol token");
  SymToken t;
  t.fam = text[0];
  std::size_t pos = 1;
  auto parse_one = [&]() -> IdxExpr {
    if (pos < text.size() && text[pos] == '[') {
      auto close = text.find(']', pos);
      if (close == std::string_view::npos) bad("missing ']' in '" + std::string(text) + "'");
      IdxExpr e = parse_idx_expr(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      return e;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad("missing index in '" + std::string(text) + "'");
    IdxExpr e;
    e.off = parse_int(text.substr(start, pos - start));
    return e;
  };
  t.i1 = parse_one();
  if (pos < text.size() && text[pos] == '_') {
    ++pos;
    t.i2 = parse_one();
  }
  if (pos != text.size()) bad("trailing characters in token '" + std::string(text) + "'");
  return t;
}

struct Lexer {
  std::vector<std::string> items;

  explicit Lexer(std::string_view text) {
    std::string cur;
    auto flush = [&]() {
      if (!cur.empty()) {
        items.push_back(cur);
        cur.clear();
      }
    };
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '(' || c == ')' || c == ';') {
        flush();
        items.push_back(std::string(1, c));
      } else {
        cur += c;
      }
    }
    flush();
  }
};

struct ExprParser {
  const std::vector<std::string>& items;
  std::size_t pos = 0;

  bool at(const char* s) const { return pos < items.size() && items[pos] == s; }

  void expect(const char* s) {
    if (!at(s)) bad(std::string("expected '") + s + "'");
    ++pos;
  }

  std::vector<Expr> parse_list() {
    std::vector<Expr> out;
    while (pos < items.size() && !at(")") && !at(";")) out.push_back(parse_factor());
    return out;
  }

  Expr parse_factor() {
    const std::string& item = items[pos];
    Expr e;
    if (item == "inv" || item == "phi" || item == "psi") {
      e.kind = item == "inv" ? Expr::Kind::invf
                             : (item == "phi" ? Expr::Kind::phif : Expr::Kind::psif);
      ++pos;
      expect("(");
      e.body = parse_list();
      expect(")");
      return e;
    }
    if (item == "comm") {
      e.kind = Expr::Kind::commf;
      ++pos;
      expect("(");
      e.body = parse_list();
      expect(";");
      e.body2 = parse_list();
      expect(")");
      return e;
    }
    if (item.rfind("prod[", 0) == 0 || item.rfind("rprod[", 0) == 0) {
      e.kind = item[0] == 'r' ? Expr::Kind::rprodf : Expr::Kind::prodf;
      auto open = item.find('[');
      auto close = item.rfind(']');
      if (close == std::string::npos || close != item.size() - 1)
        bad("bad product header '" + item + "'");
      std::string_view header(item.data() + open + 1, close - open - 1);
      auto eq = header.find('=');
      auto dots = header.find("..");
      if (eq != 1 || dots == std::string_view::npos) bad("bad product binder '" + item + "'");
      e.var = header[0];
      e.lo = parse_idx_expr(header.substr(2, dots - 2));
      e.hi = parse_idx_expr(header.substr(dots + 2));
      ++pos;
      expect("(");
      e.body = parse_list();
      expect(")");
      return e;
    }
    if (item[0] == '@') {
      e.kind = Expr::Kind::special;
      auto bracket = item.find('[');
      e.special = item.substr(0, bracket);
      if (bracket != std::string::npos) {
        if (item.back() != ']') bad("bad special '" + item + "'");
        std::string_view argtext(item.data() + bracket + 1, item.size() - bracket - 2);
        std::size_t start = 0;
        while (start <= argtext.size()) {
          auto comma = argtext.find(',', start);
          auto piece = argtext.substr(
              start, comma == std::string_view::npos ? argtext.size() - start : comma - start);
          e.args.push_back(parse_idx_expr(piece));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      }
      ++pos;
      return e;
    }
    // plain token with optional exponent
    auto caret = item.find('^');
    e.kind = Expr::Kind::token;
    e.tok = parse_sym_token(caret == std::string::npos ? std::string_view(item)
                                                       : std::string_view(item).substr(0, caret));
    if (caret != std::string::npos) {
      e.exp = parse_int(std::string_view(item).substr(caret + 1));
      if (e.exp == 0) bad("zero exponent in '" + item + "'");
    }
    ++pos;
    return e;
  }
};

std::string sym_token_str(const SymToken& t) {
  std::string s(1, t.fam);
  auto idx = [&](const IdxExpr& e) {
    if (e.var == 0 && !t.i2) return std::to_string(e.off);
    return "[" + to_string(e) + "]";
  };
  // X tokens always bracket both indices for readability
  if (t.i2) {
    auto one = [&](const IdxExpr& e) {
      return e.var == 0 ? std::to_string(e.off) : "[" + to_string(e) + "]";
    };
    return s + one(t.i1) + "_" + one(*t.i2);
  }
  return s + idx(t.i1);
}

}  // namespace

std::vector<Expr> parse_word_expr(std::string_view text) {
  Lexer lex(text);
  ExprParser parser{lex.items};
  auto out = parser.parse_list();
  if (parser.pos != lex.items.size()) bad("trailing input in expression '" + std::string(text) + "'");
  return out;
}

std::string to_string(const std::vector<Expr>& expr) {
  std::string out;
  auto app = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (const Expr& e : expr) {
    switch (e.kind) {
      case Expr::Kind::token: {
        std::string s = sym_token_str(e.tok);
        if (e.exp != 1) s += "^" + std::to_string(e.exp);
        app(s);
        break;
      }
      case Expr::Kind::invf: app("inv( " + to_string(e.body) + " )"); break;
      case Expr::Kind::phif: app("phi( " + to_string(e.body) + " )"); break;
      case Expr::Kind::psif: app("psi( " + to_string(e.body) + " )"); break;
      case Expr::Kind::commf:
        app("comm( " + to_string(e.body) + " ; " + to_string(e.body2) + " )");
        break;
      case Expr::Kind::prodf:
      case Expr::Kind::rprodf: {
        std::string s = e.kind == Expr::Kind::prodf ? "prod[" : "rprod[";
        s += std::string(1, e.var) + "=" + to_string(e.lo) + ".." + to_string(e.hi) + "]( " +
             to_string(e.body) + " )";
        app(s);
        break;
      }
      case Expr::Kind::special: {
        std::string s = e.special;
        if (!e.args.empty()) {
          s += "[";
          for (std::size_t i = 0; i < e.args.size(); ++i)
            s += (i ? "," : "") + to_string(e.args[i]);
          s += "]";
        }
        app(s);
        break;
      }
    }
  }
  return out;
}

Constraint parse_constraint(std::string_view text) {
  Constraint c;
  std::size_t pos = 0;
  auto next_clause = [&]() -> std::optional<std::string_view> {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) return std::nullopt;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  while (auto clause = next_clause()) {
    std::string_view s = *clause;
    if (s == "S") {
      c.orientable = true;
    } else if (s == "N") {
      c.orientable = false;
    } else if (auto cmp = s.find("<="); cmp != std::string_view::npos) {
      Constraint::Clause cl{};
      cl.kind = Constraint::Clause::Kind::cmp;
      cl.lhs = parse_idx_expr(s.substr(0, cmp));
      cl.rhs = parse_idx_expr(s.substr(cmp + 2));
      cl.op = 0;
      c.clauses.push_back(cl);
    } else if (cmp = s.find(">="); cmp != std::string_view::npos) {
      Constraint::Clause cl{};
      cl.kind = Constraint::Clause::Kind::cmp;
      cl.lhs = parse_idx_expr(s.substr(0, cmp));
      cl.rhs = parse_idx_expr(s.substr(cmp + 2));
      cl.op = 1;
      c.clauses.push_back(cl);
    } else if (cmp = s.find("=="); cmp != std::string_view::npos) {
      Constraint::Clause cl{};
      cl.kind = Constraint::Clause::Kind::cmp;
      cl.lhs = parse_idx_expr(s.substr(0, cmp));
      cl.rhs = parse_idx_expr(s.substr(cmp + 2));
      cl.op = 2;
      c.clauses.push_back(cl);
    } else if (cmp = s.find('='); cmp != std::string_view::npos && cmp == 1) {
      auto dots = s.find("..");
      if (dots == std::string_view::npos) bad("bad binder '" + std::string(s) + "'");
      Constraint::Clause b{};
      b.kind = Constraint::Clause::Kind::binder;
      b.var = s[0];
      b.lo = parse_idx_expr(s.substr(2, dots - 2));
      b.hi = parse_idx_expr(s.substr(dots + 2));
      c.clauses.push_back(b);
    } else {
      bad("bad constraint clause '" + std::string(s) + "'");
    }
  }
  return c;
}

std::string to_string(const Constraint& c) {
  std::string out;
  auto app = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (c.orientable) app(*c.orientable ? "S" : "N");
  for (const auto& cl : c.clauses) {
    if (cl.kind == Constraint::Clause::Kind::cmp) {
      const char* op = cl.op == 0 ? "<=" : (cl.op == 1 ? ">=" : "==");
      app(to_string(cl.lhs) + op + to_string(cl.rhs));
    } else {
      app(std::string(1, cl.var) + "=" + to_string(cl.lo) + ".." + to_string(cl.hi));
    }
  }
  return out;
}

void Constraint::enumerate(const Binding& initial,
                           const std::function<void(const Binding&)>& fn) const {
  std::function<void(std::size_t, Binding&)> walk = [&](std::size_t idx, Binding& b) {
    if (idx == clauses.size()) {
      fn(b);
      return;
    }
    const Clause& cl = clauses[idx];
    if (cl.kind == Clause::Kind::cmp) {
      int l = eval(cl.lhs, b), r = eval(cl.rhs, b);
      bool ok = cl.op == 0 ? l <= r : (cl.op == 1 ? l >= r : l == r);
      if (ok) walk(idx + 1, b);
      return;
    }
    if (auto it = b.find(cl.var); it != b.end()) {
      // pre-bound (name parameter): only check the range
      if (it->second >= eval(cl.lo, b) && it->second <= eval(cl.hi, b)) walk(idx + 1, b);
      return;
    }
    for (int v = eval(cl.lo, b); v <= eval(cl.hi, b); ++v) {
      b[cl.var] = v;
      walk(idx + 1, b);
      b.erase(cl.var);
    }
  };
  Binding b = initial;
  walk(0, b);
}

ResolvedSym resolve(const SymToken& t, const Binding& b) {
  static const std::string fams = "abcdexyzXuv";
  if (fams.find(t.fam) == std::string::npos)
    bad(std::string("unknown symbol family '") + t.fam + "'");
  ResolvedSym r;
  r.fam = t.fam;
  r.i = eval(t.i1, b);
  if (t.i2) r.j = eval(*t.i2, b);
  if (t.fam == 'X' && !t.i2) bad("X token needs two indices");
  return r;
}

namespace {

Word base_loop_y(const SurfaceKind& kind, int i) {
  AlphabetRef base = Alphabet::for_kind(kind);
  if (i >= 1 && i <= kind.boundary - 1) return single(base, sym(Family::y, i));
  if (i == kind.boundary && i >= 1) return canonical_loop(kind, LoopName::y_n());
  raise(Errc::index_out_of_range, "y index " + std::to_string(i));
}

Word base_loop_gamma(const SurfaceKind& kind, int i) {
  AlphabetRef base = Alphabet::for_kind(kind);
  if (i >= 1 && i <= kind.boundary - 1) return single(base, sym(Family::gamma, i));
  if (i == kind.boundary && i >= 1) return canonical_loop(kind, LoopName::gamma_n());
  raise(Errc::index_out_of_range, "c index " + std::to_string(i));
}

}  // namespace

Word expand_base(const SurfaceKind& kind, const ResolvedSym& s) {
  AlphabetRef base = Alphabet::for_kind(kind);
  const int g = kind.genus, n = kind.boundary;
  auto in = [&](int v, int lo, int hi) {
    if (v < lo || v > hi)
      raise(Errc::index_out_of_range,
            std::string(1, s.fam) + std::to_string(v) + " out of range for " + to_string(kind));
    return v;
  };
  switch (s.fam) {
    case 'a': return single(base, sym(Family::alpha, in(s.i, 1, g)));
    case 'b': return single(base, sym(Family::beta, in(s.i, 1, g)));
    case 'c': return base_loop_gamma(kind, in(s.i, 1, n));
    case 'd': return canonical_loop(kind, LoopName::delta(s.i));
    case 'e': return canonical_loop(kind, LoopName::epsilon(s.i));
    case 'x': return single(base, sym(Family::x, in(s.i, 1, g)));
    case 'y': return base_loop_y(kind, in(s.i, 1, n));
    case 'z': return conj(single(base, sym(Family::x, g)), base_loop_y(kind, in(s.i, 1, n)));
    case 'X':
      return mul(single(base, sym(Family::x, in(s.i, 1, g))),
                 single(base, sym(Family::x, in(s.j, 1, g))));
    case 'u':
      return mul(single(base, sym(Family::x, in(s.i, 1, g - 1))),
                 single(base, sym(Family::x, g), -1));
    case 'v':
      return mul(single(base, sym(Family::x, g)), single(base, sym(Family::x, in(s.i, 1, g))));
  }
  raise(Errc::invalid_symbol, "unreachable");
}

Word expand_level(const SurfaceKind& kind, Level level, const ResolvedSym& s) {
  if (level == Level::pi) return expand_base(kind, s);
  const int n = kind.boundary;
  if (level == Level::pi_plus) {
    AlphabetRef plus = Alphabet::plus(kind.genus, n);
    switch (s.fam) {
      case 'X': return plus_pair_word(kind, s.i, s.j);
      case 'y':
        if (s.i >= 1 && s.i <= n - 1) return single(plus, sym(Family::yplus, s.i));
        if (s.i == n && n >= 1) return plus_y_n(kind);
        raise(Errc::index_out_of_range, "y index at pi_plus");
      case 'z':
        if (s.i >= 1 && s.i <= n - 1) return single(plus, sym(Family::zplus, s.i));
        if (s.i == n && n >= 1) return plus_z_n(kind);
        raise(Errc::index_out_of_range, "z index at pi_plus");
      default:
        raise(Errc::invalid_symbol,
              std::string("symbol family '") + s.fam + "' invalid at pi_plus level");
    }
  }
  AlphabetRef rs = Alphabet::reidemeister_schreier(kind.genus, n);
  auto in = [&](int v, int lo, int hi) {
    if (v < lo || v > hi) raise(Errc::index_out_of_range, "RS symbol index");
    return v;
  };
  switch (s.fam) {
    case 'u': return single(rs, sym(Family::u, in(s.i, 1, kind.genus - 1)));
    case 'v': return single(rs, sym(Family::v, in(s.i, 1, kind.genus)));
    case 'y': return single(rs, sym(Family::yplus, in(s.i, 1, n - 1)));
    case 'z': return single(rs, sym(Family::zplus, in(s.i, 1, n - 1)));
    default:
      raise(Errc::invalid_symbol, std::string("symbol family '") + s.fam + "' invalid at RS level");
  }
}

Word to_base(const SurfaceKind& kind, const TaggedWord& w) {
  switch (w.level) {
    case ExprLevel::base: return w.word;
    case ExprLevel::plus: return substitute(w.word, plus_to_base(kind));
    case ExprLevel::rs: return substitute(w.word, rs_to_base(kind));
  }
  raise(Errc::corpus_error, "unreachable");
}

namespace {

ExprLevel level_of(Level l) {
  switch (l) {
    case Level::pi: return ExprLevel::base;
    case Level::pi_plus: return ExprLevel::plus;
    case Level::rs: return ExprLevel::rs;
  }
  return ExprLevel::base;
}

Word relator_word_plus(const SurfaceKind& kind, int which) {
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  const int g = kind.genus;
  if (which == 1) {
    Word w(plus);
    for (int j = 1; j <= g; ++j) w = mul(w, single(plus, sym(Family::xpair, j, j)));
    return w;
  }
  Word w = single(plus, sym(Family::xpair, g, g));
  for (int j = g - 1; j >= 1; --j) {
    w = mul(mul(w, single(plus, sym(Family::xpair, j, j + 1), -1)),
            single(plus, sym(Family::xpair, j, j)));
  }
  for (int i = 1; i <= g - 1; ++i) w = mul(w, single(plus, sym(Family::xpair, i, i + 1)));
  return w;
}

Word relator_word_rs(const SurfaceKind& kind, int which) {
  AlphabetRef rs = Alphabet::reidemeister_schreier(kind.genus, kind.boundary);
  const int g = kind.genus;
  Word w(rs);
  for (int i = 1; i <= g - 1; ++i) {
    Word ui = single(rs, sym(Family::u, i)), vi = single(rs, sym(Family::v, i));
    w = which == 1 ? mul(mul(w, ui), vi) : mul(mul(w, vi), ui);
  }
  return mul(w, single(rs, sym(Family::v, g)));
}

struct Evaluator {
  const SurfaceKind& kind;
  Level level;

  TaggedWord word_of(const Word& w, ExprLevel l) const { return TaggedWord{w, l}; }

  TaggedWord combine(std::optional<TaggedWord> acc, const TaggedWord& next) const {
    if (!acc) return next;
    if (acc->level == next.level) return TaggedWord{mul(acc->word, next.word), acc->level};
    Word a = to_base(kind, *acc), b = to_base(kind, next);
    return TaggedWord{mul(a, b), ExprLevel::base};
  }

  TaggedWord eval_list(const std::vector<Expr>& list, Binding& b) const {
    std::optional<TaggedWord> acc;
    for (const Expr& e : list) acc = combine(acc, eval_one(e, b));
    if (acc) return *acc;
    // empty expression: identity at the record level
    switch (level) {
      case Level::pi: return word_of(Word(Alphabet::for_kind(kind)), ExprLevel::base);
      case Level::pi_plus:
        return word_of(Word(Alphabet::plus(kind.genus, kind.boundary)), ExprLevel::plus);
      case Level::rs:
        return word_of(Word(Alphabet::reidemeister_schreier(kind.genus, kind.boundary)),
                       ExprLevel::rs);
    }
    raise(Errc::corpus_error, "unreachable");
  }

  TaggedWord eval_one(const Expr& e, Binding& b) const {
    switch (e.kind) {
      case Expr::Kind::token: {
        ResolvedSym s = resolve(e.tok, b);
        bool base_fam = std::string("abcdex").find(s.fam) != std::string::npos;
        bool rs_fam = s.fam == 'u' || s.fam == 'v';
        if (base_fam) return word_of(pow(expand_base(kind, s), e.exp), ExprLevel::base);
        if (rs_fam)
          return word_of(pow(expand_level(kind, Level::rs, s), e.exp), ExprLevel::rs);
        // X, y, z follow the record level
        return word_of(pow(expand_level(kind, level, s), e.exp), level_of(level));
      }
      case Expr::Kind::invf: {
        TaggedWord inner = eval_list(e.body, b);
        return word_of(inv(inner.word), inner.level);
      }
      case Expr::Kind::commf: {
        TaggedWord l = eval_list(e.body, b);
        TaggedWord r = eval_list(e.body2, b);
        if (l.level != r.level) raise(Errc::corpus_error, "comm mixes levels");
        return word_of(comm(l.word, r.word), l.level);
      }
      case Expr::Kind::prodf:
      case Expr::Kind::rprodf: {
        int lo = eval(e.lo, b), hi = eval(e.hi, b);
        std::optional<TaggedWord> acc;
        if (b.count(e.var)) raise(Errc::corpus_error, "product variable shadows a binding");
        if (e.kind == Expr::Kind::prodf) {
          for (int v = lo; v <= hi; ++v) {
            b[e.var] = v;
            acc = combine(acc, eval_list(e.body, b));
          }
        } else {
          for (int v = hi; v >= lo; --v) {
            b[e.var] = v;
            acc = combine(acc, eval_list(e.body, b));
          }
        }
        b.erase(e.var);
        if (!acc) return eval_list({}, b);
        return *acc;
      }
      case Expr::Kind::phif: {
        Evaluator sub{kind, Level::pi_plus};
        TaggedWord arg = sub.eval_list(e.body, b);
        if (arg.level != ExprLevel::plus) raise(Errc::corpus_error, "phi needs a pi_plus word");
        return word_of(substitute(arg.word, iso_pair(kind).phi), ExprLevel::rs);
      }
      case Expr::Kind::psif: {
        Evaluator sub{kind, Level::rs};
        TaggedWord arg = sub.eval_list(e.body, b);
        if (arg.level != ExprLevel::rs) raise(Errc::corpus_error, "psi needs an RS word");
        return word_of(substitute(arg.word, iso_pair(kind).psi), ExprLevel::plus);
      }
      case Expr::Kind::special: {
        if (e.special == "@rsrel1") return word_of(relator_word_rs(kind, 1), ExprLevel::rs);
        if (e.special == "@rsrel2") return word_of(relator_word_rs(kind, 2), ExprLevel::rs);
        if (e.special == "@plusrel1") return word_of(relator_word_plus(kind, 1), ExprLevel::plus);
        if (e.special == "@plusrel2") return word_of(relator_word_plus(kind, 2), ExprLevel::plus);
        auto arg = [&](std::size_t idx) {
          if (idx >= e.args.size()) raise(Errc::corpus_error, "missing special argument");
          return eval(e.args[idx], b);
        };
        if (e.special == "@sepNa")
          return word_of(canonical_loop(kind, LoopName::sep_nonorientable('a')), ExprLevel::base);
        if (e.special == "@sepNb")
          return word_of(canonical_loop(kind, LoopName::sep_nonorientable('b')), ExprLevel::base);
        if (e.special == "@sepNc")
          return word_of(canonical_loop(kind, LoopName::sep_nonorientable('c')), ExprLevel::base);
        if (e.special == "@sepNd")
          return word_of(canonical_loop(kind, LoopName::sep_nonorientable('d', arg(0), arg(1))),
                         ExprLevel::base);
        if (e.special == "@sepNe")
          return word_of(canonical_loop(kind, LoopName::sep_nonorientable('e', arg(0), arg(1))),
                         ExprLevel::base);
        raise(Errc::corpus_error, "unknown special atom '" + e.special + "'");
      }
    }
    raise(Errc::corpus_error, "unreachable");
  }
};

}  // namespace

TaggedWord eval_expr(const std::vector<Expr>& expr, const SurfaceKind& kind, Level level,
                     const Binding& b) {
  Binding scratch = b;
  Evaluator ev{kind, level};
  return ev.eval_list(expr, scratch);
}

}  // namespace pi1
