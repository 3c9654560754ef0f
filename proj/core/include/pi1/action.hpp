#pragma once

#include <span>
#include <vector>

#include "pi1/corpus.hpp"
#include "pi1/report.hpp"
#include "pi1/surface.hpp"

namespace pi1 {

// Pure mapping class group generators acting on pi_1 / pi_1^+:
//   orientable:      t_c0, t_c_odd(i) [2<=i<=g], t_c_even(i) [1<=i<=g],
//                    t_d(k) [1<=k<=n]
//   non-orientable:  t_a(i) [1<=i<=g-1], t_b [g>=4], Y_mu_a1 [g>=2],
//                    B_r(k) [1<=k<=n], B_r0, t_s(k,l) [1<=k<l<=n]
enum class ActionKind { t_c0, t_c_odd, t_c_even, t_d, t_a, t_b, y_mu_a1, b_r, b_r0, t_s };

struct ActionGenName {
  ActionKind kind = ActionKind::t_c0;
  int p1 = 0;
  int p2 = 0;

  friend bool operator==(const ActionGenName&, const ActionGenName&) = default;
};

// Text form used by the CLI: t_c0, t_c3 (= odd i=2), t_c4 (= even i=2),
// t_d2, t_a1, t_b, Y_mu_a1, B_r0, B_r2, t_s1_3.
ActionGenName parse_action_name(std::string_view text);
std::string to_string(const ActionGenName& name);

bool name_valid(const ActionGenName& name, const SurfaceKind& kind, Level level);
std::vector<ActionGenName> action_catalogue(const SurfaceKind& kind, Level level);

struct AutoTable {
  ActionGenName name;
  Level level = Level::pi;
  SurfaceKind kind;
  AlphabetRef alphabet;
  SymbolMap forward;
  SymbolMap backward;
};

AutoTable action_table(const Corpus& corpus, const ActionGenName& name, Level level,
                       const SurfaceKind& kind);

Word apply(const AutoTable& t, Direction dir, const Word& w);

// forward . backward and backward . forward fix every generator exactly.
CheckReport verify_inverse(const AutoTable& t);

struct H1Matrix {
  std::vector<std::vector<long>> columns;  // column j = exponent vector of image of generator j
  long long det = 0;
};
H1Matrix induced_h1_matrix(const AutoTable& t);

// The relator image cyclically reduces to a rotation of R or R^-1.
CheckReport relator_conjugacy_check(const AutoTable& t, const SurfacePresentation& p);

// The pi table applied to base expansions matches the expanded pi_plus table.
CheckReport cross_consistency(const Corpus& corpus, const ActionGenName& name,
                              const SurfaceKind& kind);

// Every table image of every X' element stays inside <X'>.
CheckReport closure_check(std::span<const AutoTable> tables, std::span<const Word> xprime);

}  // namespace pi1
