#pragma once

#include <stdexcept>
#include <string>

namespace pi1 {

enum class Errc {
  unknown_symbol,
  malformed_exponent,
  index_out_of_range,
  alphabet_mismatch,
  missing_image,
  precondition_violated,
  invalid_kind,
  invalid_loop_name,
  unsupported_level,
  invalid_name,
  no_relator,
  requires_closed,
  wrong_alphabet,
  invalid_symbol,
  corpus_error,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pi1
