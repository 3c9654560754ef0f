#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pi1/surface.hpp"
#include "pi1/word.hpp"

namespace pi1 {

// Schematic index expression c*var + off; var 0 means a constant.
struct IdxExpr {
  int coef = 0;
  char var = 0;
  int off = 0;
};

using Binding = std::map<char, int>;  // bound variables plus 'g' and 'n'

IdxExpr parse_idx_expr(std::string_view text);
int eval(const IdxExpr& e, const Binding& b);
std::string to_string(const IdxExpr& e);

// Schematic symbol: family letter with one or two bracketed index
// expressions ("x[i+1]", "X[i]_[j]"); bare digits are constants ("x4").
struct SymToken {
  char fam = 0;
  IdxExpr i1;
  std::optional<IdxExpr> i2;
};

// One factor of a schematic word expression.
struct Expr {
  enum class Kind { token, invf, commf, prodf, rprodf, phif, psif, special };
  Kind kind = Kind::token;
  SymToken tok;                 // token
  int exp = 1;                  // token exponent
  std::vector<Expr> body;       // inv/prod/phi/psi body, comm lhs
  std::vector<Expr> body2;      // comm rhs
  char var = 0;                 // prod binder variable
  IdxExpr lo, hi;               // prod binder range
  std::string special;          // "@rsrel1", "@sepN(d)[h;m]", ...
  std::vector<IdxExpr> args;    // special-atom arguments
};

std::vector<Expr> parse_word_expr(std::string_view text);
std::string to_string(const std::vector<Expr>& expr);

// Constraint clauses, evaluated left to right: kind filter, comparisons,
// and binder ranges that enumerate free variables.
struct Constraint {
  std::optional<bool> orientable;
  struct Clause {
    enum class Kind { cmp, binder } kind;
    // cmp
    IdxExpr lhs, rhs;
    int op = 0;  // 0: <=, 1: >=, 2: ==
    // binder
    char var = 0;
    IdxExpr lo, hi;
  };
  std::vector<Clause> clauses;

  bool matches_kind(const SurfaceKind& k) const {
    return !orientable || *orientable == k.orientable;
  }
  // Enumerate all bindings consistent with the clauses; the initial binding
  // may pre-bind variables (name parameters), which skips their binders.
  void enumerate(const Binding& initial,
                 const std::function<void(const Binding&)>& fn) const;
};

Constraint parse_constraint(std::string_view text);
std::string to_string(const Constraint& c);

// Evaluation of schematic expressions down to concrete words.
enum class ExprLevel { base, plus, rs };

struct TaggedWord {
  Word word;
  ExprLevel level = ExprLevel::base;
};

// Record level tag used by corpus files.
enum class Level { pi, pi_plus, rs };
Level parse_level(std::string_view text);
std::string to_string(Level level);

// Resolve a schematic symbol to a concrete one (family/indices) without
// expanding derived symbols.  fam letters: a b c d e x y z X u v.
struct ResolvedSym {
  char fam;
  int i = 0;
  int j = 0;
};
ResolvedSym resolve(const SymToken& t, const Binding& b);

// Direct base-alphabet expansion of a resolved symbol (X[a][b] -> x_a x_b,
// z -> x_g y x_g^-1, derived loops through canonical_loop).
Word expand_base(const SurfaceKind& kind, const ResolvedSym& s);

// Level-alphabet expansion: pi -> base word, pi_plus -> plus word through
// the pair recursion, rs -> RS word.
Word expand_level(const SurfaceKind& kind, Level level, const ResolvedSym& s);

// Evaluate a schematic word expression at a binding.  Factors of different
// levels are joined after base expansion.
TaggedWord eval_expr(const std::vector<Expr>& expr, const SurfaceKind& kind, Level level,
                     const Binding& b);

// Push any tagged word down to the base alphabet.
Word to_base(const SurfaceKind& kind, const TaggedWord& w);

}  // namespace pi1
