#include <doctest.h>

#include <set>

#include "pi1/corpus.hpp"
#include "pi1/verify.hpp"

using namespace pi1;

TEST_CASE("embedded corpus loads with the pinned checksum") {
  const Corpus& c = Corpus::embedded();
  CHECK(c.checksum() == Corpus::pinned_checksum());
  CHECK(c.actions().size() >= 100);
  CHECK(c.identities().size() >= 30);
  CHECK(c.actions().size() + c.identities().size() >= 100);
}

TEST_CASE("load-dump-load is the identity") {
  const Corpus& c = Corpus::embedded();
  Corpus reloaded = Corpus::parse(c.actions_text(), c.identities_text(), true);
  CHECK(reloaded.actions_text() == c.actions_text());
  CHECK(reloaded.identities_text() == c.identities_text());
  CHECK(reloaded.checksum() == c.checksum());
  CHECK(reloaded.actions().size() == c.actions().size());
  CHECK(reloaded.identities().size() == c.identities().size());
}

TEST_CASE("a mutated corpus fails the integrity check") {
  const Corpus& c = Corpus::embedded();
  std::string mutated = c.actions_text();
  auto pos = mutated.find("b[i] a[i]");
  REQUIRE(pos != std::string::npos);
  mutated.replace(pos, 9, "b[i] b[i]");
  CHECK_THROWS_AS(Corpus::parse(mutated, c.identities_text(), true), Error);
}

TEST_CASE("a mutated record produces verification failures") {
  const Corpus& c = Corpus::embedded();
  std::string mutated = c.actions_text();
  // corrupt t_c_even's forward image: b_i a_i -> b_i b_i
  auto pos = mutated.find("| b[i] | b[i] a[i]\n");
  REQUIRE(pos != std::string::npos);
  mutated.replace(pos, 19, "| b[i] | b[i] b[i]\n");
  Corpus bad = Corpus::parse(mutated, c.identities_text(), false);
  VerifyOptions options;
  options.g_range = {1, 2};
  options.n_range = {0, 1};
  VerificationReport report = run_suite(bad, Suite::inverses, options);
  CHECK_FALSE(report.ok());
  CHECK(report.count(RecordResult::Status::fail) > 0);
}

TEST_CASE("untranscribed records surface as skips with a reason") {
  VerifyOptions options;
  options.g_range = {2, 2};
  options.n_range = {0, 0};
  VerificationReport report = run_suite(Corpus::embedded(), Suite::replay, options);
  bool found = false;
  for (const auto& r : report.records) {
    if (r.status == RecordResult::Status::skip) {
      found = true;
      CHECK_FALSE(r.note.empty());
    }
  }
  CHECK(found);
}

TEST_CASE("every corpus record instantiates somewhere in the desk range") {
  VerifyOptions options;
  options.g_range = {1, 6};
  options.n_range = {0, 4};
  VerificationReport report = run_suite(Corpus::embedded(), Suite::replay, options);
  std::set<std::string> seen;
  for (const auto& r : report.records) seen.insert(r.id);
  for (const ActionRecord& rec : Corpus::embedded().actions()) {
    CAPTURE(rec.location);
    CHECK(seen.count(rec.location) == 1);
  }
  for (const IdentityRecord& rec : Corpus::embedded().identities()) {
    CAPTURE(rec.id);
    CHECK(seen.count(rec.id) == 1);
  }
}

TEST_CASE("normalized records carry their source reading") {
  bool found = false;
  for (const ActionRecord& rec : Corpus::embedded().actions()) {
    if (rec.location == "Y/x1/f") {
      found = true;
      CHECK(rec.note.find("x2^-1 x1 x2") != std::string::npos);
    }
  }
  CHECK(found);
}
