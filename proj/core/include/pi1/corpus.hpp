#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pi1/expr.hpp"

namespace pi1 {

enum class Direction { fwd, bwd };
Direction parse_direction(std::string_view text);
std::string to_string(Direction d);

// One transcribed action-table display line:
//   location | constraint | level | name | dir | generator | image
struct ActionRecord {
  std::string location;
  Constraint constraint;
  Level level = Level::pi;
  std::string name_base;                             // "t_a", "B_r", ...
  std::vector<std::variant<char, int>> name_params;  // variables or literals
  Direction dir = Direction::fwd;
  std::optional<SymToken> generator;
  std::vector<Expr> image;
  bool untranscribed = false;
  std::string skip_reason;
  std::string note;  // preceding "# orig:" metadata, verbatim
};

// One replayed displayed identity:  id | constraint | level | lhs | rhs
struct IdentityRecord {
  std::string id;
  Constraint constraint;
  Level level = Level::pi;
  std::vector<Expr> lhs, rhs;
  std::string note;
};

// The embedded transcription corpus.  The raw text is the canonical form:
// dumping reproduces it byte for byte and the checksum is pinned at build
// time.
class Corpus {
 public:
  static const Corpus& embedded();
  static Corpus parse(std::string actions_text, std::string identities_text,
                      bool enforce_checksum);

  static std::uint64_t pinned_checksum();
  std::uint64_t checksum() const { return checksum_; }

  const std::string& actions_text() const { return actions_text_; }
  const std::string& identities_text() const { return identities_text_; }

  std::span<const ActionRecord> actions() const { return actions_; }
  std::span<const IdentityRecord> identities() const { return identities_; }

 private:
  Corpus() = default;

  std::string actions_text_;
  std::string identities_text_;
  std::uint64_t checksum_ = 0;
  std::vector<ActionRecord> actions_;
  std::vector<IdentityRecord> identities_;
};

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace pi1
