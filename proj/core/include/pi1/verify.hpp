#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pi1/action.hpp"
#include "pi1/corpus.hpp"

namespace pi1 {

enum class Suite { replay, inverses, relator, crosslevel, iso, closure, all };

Suite parse_suite(std::string_view text);
std::string to_string(Suite s);

struct RangePair {
  int lo = 0;
  int hi = 0;
};
RangePair parse_range(std::string_view text);  // "A..B"

struct RecordResult {
  std::string id;        // corpus location or check name
  std::string instance;  // surface + variable binding
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::string corpus_checksum;
  RangePair g_range, n_range;
  std::vector<RecordResult> records;

  std::size_t count(RecordResult::Status s) const;
  bool ok() const { return count(RecordResult::Status::fail) == 0; }
};

struct VerifyOptions {
  RangePair g_range{1, 6};
  RangePair n_range{0, 4};
  int jobs = 1;
};

VerificationReport run_suite(const Corpus& corpus, Suite suite, const VerifyOptions& options);

// Deterministic structured-text report; byte-identical for identical inputs.
void write_report(const VerificationReport& report, std::ostream& os);

}  // namespace pi1
