#include <doctest.h>

#include <sstream>

#include "pi1/verify.hpp"

using namespace pi1;

TEST_CASE("suite and range parsing") {
  CHECK(parse_suite("replay") == Suite::replay);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_THROWS_AS(parse_suite("nope"), Error);
  auto r = parse_range("2..6");
  CHECK(r.lo == 2);
  CHECK(r.hi == 6);
  CHECK(parse_range("3").lo == 3);
  CHECK_THROWS_AS(parse_range("5..2"), Error);
}

TEST_CASE("reports are deterministic and independent of the job count") {
  VerifyOptions one;
  one.g_range = {1, 3};
  one.n_range = {0, 2};
  one.jobs = 1;
  VerifyOptions four = one;
  four.jobs = 4;
  VerificationReport a = run_suite(Corpus::embedded(), Suite::all, one);
  VerificationReport b = run_suite(Corpus::embedded(), Suite::all, four);
  std::ostringstream sa, sb;
  write_report(a, sa);
  write_report(b, sb);
  CHECK(sa.str() == sb.str());
  CHECK(a.ok());
}

TEST_CASE("report text carries the summary and checksum") {
  VerifyOptions options;
  options.g_range = {2, 2};
  options.n_range = {1, 1};
  VerificationReport report = run_suite(Corpus::embedded(), Suite::iso, options);
  std::ostringstream ss;
  write_report(report, ss);
  auto text = ss.str();
  CHECK(text.find("suite: iso") != std::string::npos);
  CHECK(text.find("corpus-checksum: ") != std::string::npos);
  CHECK(text.find("summary: total=") != std::string::npos);
  CHECK(text.find("fail=0") != std::string::npos);
}

TEST_CASE("counts add up") {
  VerifyOptions options;
  options.g_range = {2, 3};
  options.n_range = {0, 1};
  VerificationReport report = run_suite(Corpus::embedded(), Suite::replay, options);
  CHECK(report.records.size() ==
        report.count(RecordResult::Status::pass) + report.count(RecordResult::Status::fail) +
            report.count(RecordResult::Status::skip));
  CHECK(report.ok());
}
