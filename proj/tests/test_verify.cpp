#include <doctest.h>

#include <string>

#include "sliceop/verify.hpp"

using namespace sliceop;

TEST_CASE("examples suite passes with exactly one flagged discrepancy") {
  const VerifyReport r = run_verify("examples", 42);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.flagged == 1);
  CHECK(r.summary.skipped == 0);
  CHECK(r.summary.pass >= 25);
  CHECK(r.note.empty());

  bool found = false;
  for (const VerifyCase& c : r.cases) {
    CHECK_FALSE(c.paper_anchor.empty());
    CHECK(c.name.rfind("examples/", 0) == 0);
    if (c.status == CaseStatus::flagged_discrepancy) {
      found = true;
      CHECK(c.name == "examples/vlacci-linear-outer-claim");
      CHECK(c.max_error > 1.0);  // distance to the published claim, not roundoff
    }
  }
  CHECK(found);

  for (std::size_t n = 1; n < r.cases.size(); ++n) CHECK(r.cases[n - 1].name < r.cases[n].name);
}

TEST_CASE("unknown selectors produce an empty noted report") {
  const VerifyReport r = run_verify("nonexistent", 42);
  CHECK(r.cases.empty());
  CHECK(r.summary.pass == 0);
  CHECK(r.summary.fail == 0);
  CHECK(r.note.find("nonexistent") != std::string::npos);
}

TEST_CASE("fast suites are clean") {
  for (const char* suite : {"compactness", "representation", "conjugation", "h2-slice"}) {
    const VerifyReport r = run_verify(suite, 42);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.flagged == 0);
    CHECK(r.summary.pass >= 2);
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const VerifyReport a = run_verify("representation", 7);
  const VerifyReport b = run_verify("representation", 7);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t n = 0; n < a.cases.size(); ++n) {
    CHECK(a.cases[n].name == b.cases[n].name);
    CHECK(a.cases[n].status == b.cases[n].status);
    CHECK(a.cases[n].max_error == b.cases[n].max_error);
    CHECK(a.cases[n].paper_anchor == b.cases[n].paper_anchor);
  }
}

TEST_CASE("case status names render") {
  CHECK(std::string(to_string(CaseStatus::pass)) == "pass");
  CHECK(std::string(to_string(CaseStatus::fail)) == "fail");
  CHECK(std::string(to_string(CaseStatus::flagged_discrepancy)) == "flagged_discrepancy");
  CHECK(std::string(to_string(CaseStatus::skipped)) == "skipped");
}
