#pragma once

#include <set>
#include <string>
#include <vector>

#include "toricgraph/invariants.hpp"

namespace toricgraph {

// One checked claim.  Exact claims either match or fail; claims about an
// invariant that is only bounded can come back bound-consistent instead.
// A resource-capped computation skips its claims; a skip is not a failure.
enum class ClaimStatus { Match, BoundConsistent, Skipped, Fail };

std::string claim_status_name(ClaimStatus s);

struct ClaimResult {
  std::string id;     // e.g. "gt.t3.reg"; results are sorted by id
  std::string scope;  // gt | k2t | c4r | glue | z | table
  ClaimStatus status = ClaimStatus::Fail;
  std::string expected;  // rendered fixture value
  std::string computed;  // rendered computed value (or bound, or "-")
  std::string source;    // fixture provenance: reference | oracle | definition
  std::string note;
};

struct ReproOptions {
  std::set<std::string> scopes;  // empty or containing "all": every scope
  int jobs = 1;                  // graphs analyzed concurrently
  std::string fixtures_path;     // empty: default_fixtures_path()
  AnalyzeOptions analyze;
};

struct ReproSummary {
  std::vector<ClaimResult> results;  // sorted by claim id
  int matched = 0;
  int bound_consistent = 0;
  int skipped = 0;
  int failed = 0;

  bool ok() const { return failed == 0; }
};

// Runs every claim in the requested scopes against the expected-value
// fixtures.  Claim evaluation is deterministic: --jobs only changes how
// many graphs are analyzed at once, never the output order.
ReproSummary run_reproduction(const ReproOptions& options = {});

const std::vector<std::string>& repro_scopes();

// Fixture location: $TORICGRAPH_DATA if set, else the source-tree data
// directory this library was configured with.
std::string default_fixtures_path();
std::string default_data_dir();

std::string repro_text(const ReproSummary& s);
std::string repro_json(const ReproSummary& s, bool with_timestamp = true);

}  // namespace toricgraph
