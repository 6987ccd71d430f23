#include <string>

#include "doctest.h"
#include "toricgraph/errors.hpp"
#include "toricgraph/repro.hpp"

using namespace toricgraph;

TEST_CASE("scope names are validated") {
  ReproOptions opt;
  opt.scopes = {"no-such-scope"};
  CHECK_THROWS_AS(run_reproduction(opt), ValidationError);
}

TEST_CASE("fixtures file must exist and parse") {
  ReproOptions opt;
  opt.scopes = {"z"};
  opt.fixtures_path = "/nonexistent/fixtures.json";
  CHECK_THROWS_AS(run_reproduction(opt), ValidationError);
}

TEST_CASE("the regression-graph scope reproduces its claims deterministically") {
  ReproOptions opt;
  opt.scopes = {"z"};
  ReproSummary a = run_reproduction(opt);
  CHECK(a.ok());
  CHECK(a.failed == 0);
  CHECK(a.results.size() == 8);
  for (size_t i = 0; i + 1 < a.results.size(); ++i)
    CHECK(a.results[i].id < a.results[i + 1].id);

  ReproSummary b = run_reproduction(opt);
  CHECK(repro_json(a, false) == repro_json(b, false));
  CHECK(repro_text(a) == repro_text(b));
  CHECK(repro_json(a, true).find("generated_at") != std::string::npos);
}

TEST_CASE("claim status names") {
  CHECK(claim_status_name(ClaimStatus::Match) == "match");
  CHECK(claim_status_name(ClaimStatus::BoundConsistent) == "bound-consistent");
  CHECK(claim_status_name(ClaimStatus::Skipped) == "skipped");
  CHECK(claim_status_name(ClaimStatus::Fail) == "FAIL");
}
