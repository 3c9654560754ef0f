#include "pi1/action.hpp"

#include <charconv>

#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"

namespace pi1 {

namespace {

int param_count(ActionKind k) {
  switch (k) {
    case ActionKind::t_c0:
    case ActionKind::t_b:
    case ActionKind::y_mu_a1:
    case ActionKind::b_r0: return 0;
    case ActionKind::t_s: return 2;
    default: return 1;
  }
}

int parse_int_or(std::string_view s, Errc code) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    raise(code, "bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

ActionGenName parse_action_name(std::string_view text) {
  ActionGenName n;
  if (text == "t_c0") return {ActionKind::t_c0};
  if (text == "t_b") return {ActionKind::t_b};
  if (text == "Y_mu_a1") return {ActionKind::y_mu_a1};
  if (text == "B_r0") return {ActionKind::b_r0};
  if (text.rfind("t_c", 0) == 0) {
    int c = parse_int_or(text.substr(3), Errc::invalid_name);
    if (c < 1) raise(Errc::invalid_name, std::string(text));
    if (c % 2 == 1) return {ActionKind::t_c_odd, (c + 1) / 2};
    return {ActionKind::t_c_even, c / 2};
  }
  if (text.rfind("t_d", 0) == 0) return {ActionKind::t_d, parse_int_or(text.substr(3), Errc::invalid_name)};
  if (text.rfind("t_a", 0) == 0) return {ActionKind::t_a, parse_int_or(text.substr(3), Errc::invalid_name)};
  if (text.rfind("B_r", 0) == 0) return {ActionKind::b_r, parse_int_or(text.substr(3), Errc::invalid_name)};
  if (text.rfind("t_s", 0) == 0) {
    auto rest = text.substr(3);
    auto under = rest.find('_');
    if (under == std::string_view::npos)
      raise(Errc::invalid_name, "t_s needs two indices, e.g. t_s1_2");
    return {ActionKind::t_s, parse_int_or(rest.substr(0, under), Errc::invalid_name),
            parse_int_or(rest.substr(under + 1), Errc::invalid_name)};
  }
  raise(Errc::invalid_name, "unknown mapping class generator '" + std::string(text) + "'");
}

std::string to_string(const ActionGenName& name) {
  switch (name.kind) {
    case ActionKind::t_c0: return "t_c0";
    case ActionKind::t_c_odd: return "t_c" + std::to_string(2 * name.p1 - 1);
    case ActionKind::t_c_even: return "t_c" + std::to_string(2 * name.p1);
    case ActionKind::t_d: return "t_d" + std::to_string(name.p1);
    case ActionKind::t_a: return "t_a" + std::to_string(name.p1);
    case ActionKind::t_b: return "t_b";
    case ActionKind::y_mu_a1: return "Y_mu_a1";
    case ActionKind::b_r: return "B_r" + std::to_string(name.p1);
    case ActionKind::b_r0: return "B_r0";
    case ActionKind::t_s: return "t_s" + std::to_string(name.p1) + "_" + std::to_string(name.p2);
  }
  return "?";
}

bool name_valid(const ActionGenName& name, const SurfaceKind& kind, Level level) {
  if (!kind.valid()) return false;
  const int g = kind.genus, n = kind.boundary;
  bool orientable_name = name.kind == ActionKind::t_c0 || name.kind == ActionKind::t_c_odd ||
                         name.kind == ActionKind::t_c_even || name.kind == ActionKind::t_d;
  if (orientable_name != kind.orientable) return false;
  if (level == Level::rs) return false;
  if (level == Level::pi_plus && kind.orientable) return false;
  switch (name.kind) {
    case ActionKind::t_c0: return g >= 2;
    case ActionKind::t_c_odd: return name.p1 >= 2 && name.p1 <= g;
    case ActionKind::t_c_even: return name.p1 >= 1 && name.p1 <= g;
    case ActionKind::t_d: return g >= 1 && name.p1 >= 1 && name.p1 <= n;
    case ActionKind::t_a: return name.p1 >= 1 && name.p1 <= g - 1;
    case ActionKind::t_b: return g >= 4;
    case ActionKind::y_mu_a1: return g >= 2;
    case ActionKind::b_r: return name.p1 >= 1 && name.p1 <= n;
    case ActionKind::b_r0: return true;
    case ActionKind::t_s: return name.p1 >= 1 && name.p1 < name.p2 && name.p2 <= n;
  }
  return false;
}

std::vector<ActionGenName> action_catalogue(const SurfaceKind& kind, Level level) {
  std::vector<ActionGenName> names;
  const int g = kind.genus, n = kind.boundary;
  if (kind.orientable) {
    if (level != Level::pi) return names;
    if (g >= 2) names.push_back({ActionKind::t_c0});
    for (int i = 2; i <= g; ++i) names.push_back({ActionKind::t_c_odd, i});
    for (int i = 1; i <= g; ++i) names.push_back({ActionKind::t_c_even, i});
    if (g >= 1)
      for (int k = 1; k <= n; ++k) names.push_back({ActionKind::t_d, k});
    return names;
  }
  if (level == Level::rs) return names;
  for (int i = 1; i <= g - 1; ++i) names.push_back({ActionKind::t_a, i});
  if (g >= 4) names.push_back({ActionKind::t_b});
  if (g >= 2) names.push_back({ActionKind::y_mu_a1});
  names.push_back({ActionKind::b_r0});
  for (int k = 1; k <= n; ++k) names.push_back({ActionKind::b_r, k});
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) names.push_back({ActionKind::t_s, k, l});
  return names;
}

namespace {

ActionKind kind_of_base(const std::string& base) {
  if (base == "t_c0") return ActionKind::t_c0;
  if (base == "t_c_odd") return ActionKind::t_c_odd;
  if (base == "t_c_even") return ActionKind::t_c_even;
  if (base == "t_d") return ActionKind::t_d;
  if (base == "t_a") return ActionKind::t_a;
  if (base == "t_b") return ActionKind::t_b;
  if (base == "Y_mu_a1") return ActionKind::y_mu_a1;
  if (base == "B_r") return ActionKind::b_r;
  if (base == "B_r0") return ActionKind::b_r0;
  if (base == "t_s") return ActionKind::t_s;
  raise(Errc::corpus_error, "unknown table name '" + base + "'");
}

// Binds the record's name parameters against a concrete name.  Literal
// parameters must match; variable parameters extend the binding.
bool bind_name_params(const ActionRecord& rec, const ActionGenName& name, Binding& binding) {
  std::vector<int> values;
  if (param_count(kind_of_base(rec.name_base)) >= 1) values.push_back(name.p1);
  if (param_count(kind_of_base(rec.name_base)) >= 2) values.push_back(name.p2);
  if (rec.name_params.size() != values.size()) return false;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (std::holds_alternative<int>(rec.name_params[t])) {
      if (std::get<int>(rec.name_params[t]) != values[t]) return false;
    } else {
      binding[std::get<char>(rec.name_params[t])] = values[t];
    }
  }
  return true;
}

// True when the resolved symbol is a generator of the level alphabet (as
// opposed to a derived loop such as y_n, z_n, c_n or a non-adjacent pair).
bool is_alphabet_generator(const SurfaceKind& kind, Level level, const ResolvedSym& s) {
  const int g = kind.genus, n = kind.boundary;
  if (level == Level::pi) {
    switch (s.fam) {
      case 'a':
      case 'b': return s.i >= 1 && s.i <= g;
      case 'c':
      case 'y': return s.i >= 1 && s.i <= n - 1;
      case 'x': return s.i >= 1 && s.i <= g;
      default: return false;
    }
  }
  switch (s.fam) {
    case 'X': return (s.i == s.j || s.j == s.i + 1) && s.i >= 1 && s.j <= g;
    case 'y':
    case 'z': return s.i >= 1 && s.i <= n - 1;
    default: return false;
  }
}

GenSym concrete_sym(Level level, const ResolvedSym& s) {
  switch (s.fam) {
    case 'a': return sym(Family::alpha, s.i);
    case 'b': return sym(Family::beta, s.i);
    case 'c': return sym(Family::gamma, s.i);
    case 'x': return sym(Family::x, s.i);
    case 'y': return sym(level == Level::pi ? Family::y : Family::yplus, s.i);
    case 'z': return sym(Family::zplus, s.i);
    case 'X': return sym(Family::xpair, s.i, s.j);
    case 'u': return sym(Family::u, s.i);
    case 'v': return sym(Family::v, s.i);
  }
  raise(Errc::invalid_symbol, "unreachable");
}

}  // namespace

AutoTable action_table(const Corpus& corpus, const ActionGenName& name, Level level,
                       const SurfaceKind& kind) {
  if (!kind.valid()) raise(Errc::invalid_kind, to_string(kind));
  if (level == Level::rs || (level == Level::pi_plus && kind.orientable))
    raise(Errc::unsupported_level,
          to_string(level) + " tables are not defined for " + to_string(kind));
  if (!name_valid(name, kind, level))
    raise(Errc::invalid_name, to_string(name) + " is not catalogued for " + to_string(kind) +
                                  " at level " + to_string(level));

  AutoTable table;
  table.name = name;
  table.level = level;
  table.kind = kind;
  table.alphabet = level == Level::pi ? Alphabet::for_kind(kind)
                                      : Alphabet::plus(kind.genus, kind.boundary);
  table.forward.target = table.alphabet;
  table.backward.target = table.alphabet;

  for (const ActionRecord& rec : corpus.actions()) {
    if (rec.untranscribed || rec.level != level) continue;
    if (kind_of_base(rec.name_base) != name.kind) continue;
    if (!rec.constraint.matches_kind(kind)) continue;
    Binding initial{{'g', kind.genus}, {'n', kind.boundary}};
    if (!bind_name_params(rec, name, initial)) continue;
    rec.constraint.enumerate(initial, [&](const Binding& b) {
      ResolvedSym gen = resolve(*rec.generator, b);
      if (!is_alphabet_generator(kind, level, gen)) return;  // derived rows replay separately
      Word w = eval_expr(rec.image, kind, level, b).word;
      SymbolMap& m = rec.dir == Direction::fwd ? table.forward : table.backward;
      auto [it, inserted] = m.images.emplace(concrete_sym(level, gen), w);
      if (!inserted && !(it->second == w))
        raise(Errc::corpus_error,
              "conflicting images for " + to_string(it->first) + " in " + rec.location);
    });
  }
  return table;
}

Word apply(const AutoTable& t, Direction dir, const Word& w) {
  if (!same_alphabet(w.alphabet(), t.alphabet))
    raise(Errc::alphabet_mismatch, "word is not over the table's alphabet");
  return substitute(w, dir == Direction::fwd ? t.forward : t.backward);
}

CheckReport verify_inverse(const AutoTable& t) {
  CheckReport report;
  for (const GenSym& s : t.alphabet->symbols()) {
    Word gen = single(t.alphabet, s);
    Word fb = apply(t, Direction::fwd, apply(t, Direction::bwd, gen));
    Word bf = apply(t, Direction::bwd, apply(t, Direction::fwd, gen));
    if (!(fb == gen))
      report.fail(to_string(t.name) + ": fwd(bwd(" + to_string(s) + ")) = " + to_string(fb));
    if (!(bf == gen))
      report.fail(to_string(t.name) + ": bwd(fwd(" + to_string(s) + ")) = " + to_string(bf));
  }
  return report;
}

namespace {

long long det_bareiss(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] -
                     static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(v / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

H1Matrix induced_h1_matrix(const AutoTable& t) {
  H1Matrix m;
  const std::size_t dim = t.alphabet->size();
  m.columns.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Word image = apply(t, Direction::fwd, single(t.alphabet, t.alphabet->symbols()[j]));
    m.columns[j] = exponent_vector(image);
  }
  std::vector<std::vector<long long>> a(dim, std::vector<long long>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = m.columns[j][i];
  m.det = det_bareiss(std::move(a));
  return m;
}

CheckReport relator_conjugacy_check(const AutoTable& t, const SurfacePresentation& p) {
  if (!p.relator) raise(Errc::no_relator, "presentation has no relator");
  if (t.level != Level::pi)
    raise(Errc::unsupported_level, "relator check applies to pi-level tables");
  CheckReport report;
  const Word& r = *p.relator;
  for (Direction dir : {Direction::fwd, Direction::bwd}) {
    Word image = apply(t, dir, r);
    auto [core, conjugator] = cyclic_reduce(image);
    bool plus = is_cyclic_rotation(core, r);
    bool minus = !plus && is_cyclic_rotation(core, inv(r));
    if (!plus && !minus) {
      report.fail(to_string(t.name) + " " + to_string(dir) +
                  ": relator image core = " + to_string(core));
    } else {
      report.note(to_string(t.name) + " " + to_string(dir) + ": relator maps to " +
                  (plus ? "R" : "R^-1") + " conjugated by " + to_string(conjugator));
    }
  }
  return report;
}

CheckReport cross_consistency(const Corpus& corpus, const ActionGenName& name,
                              const SurfaceKind& kind) {
  if (kind.orientable)
    raise(Errc::invalid_kind, "cross-level consistency needs a non-orientable kind");
  if (!name_valid(name, kind, Level::pi))
    raise(Errc::invalid_name, to_string(name) + " invalid for " + to_string(kind));
  CheckReport report;
  AutoTable pi = action_table(corpus, name, Level::pi, kind);
  AutoTable plus = action_table(corpus, name, Level::pi_plus, kind);
  SymbolMap down = plus_to_base(kind);
  for (const GenSym& s : plus.alphabet->symbols()) {
    Word expansion = plus_generator_expansion(kind, s);
    for (Direction dir : {Direction::fwd, Direction::bwd}) {
      Word via_pi = apply(pi, dir, expansion);
      Word via_plus = substitute(apply(plus, dir, single(plus.alphabet, s)), down);
      if (!(via_pi == via_plus))
        report.fail(to_string(name) + " " + to_string(dir) + " at " + to_string(s) + ": " +
                    to_string(via_pi) + " vs " + to_string(via_plus));
    }
  }
  return report;
}

CheckReport closure_check(std::span<const AutoTable> tables, std::span<const Word> xprime) {
  CheckReport report;
  if (xprime.empty()) {
    report.note("empty X'");
    return report;
  }
  const AlphabetRef& alphabet = xprime.front().alphabet();
  SubgroupGraph graph = SubgroupGraph::build(alphabet, xprime);
  for (const AutoTable& t : tables) {
    if (!same_alphabet(t.alphabet, alphabet))
      raise(Errc::alphabet_mismatch, "table alphabet differs from X' alphabet");
    for (Direction dir : {Direction::fwd, Direction::bwd}) {
      for (const Word& x : xprime) {
        Word image = apply(t, dir, x);
        if (!graph.member(image))
          report.fail(to_string(t.name) + " " + to_string(dir) + "(" + to_string(x) +
                      ") leaves <X'>");
      }
    }
  }
  return report;
}

}  // namespace pi1
