#pragma once

#include <string>

#include "toricgraph/invariants.hpp"

namespace toricgraph {

// Human-readable report (stable layout, suitable for diffing).
std::string report_text(const InvariantReport& r);

// JSON report; generated_at is the only run-dependent field and can be
// dropped for byte-level comparisons.
std::string report_json(const InvariantReport& r, bool with_timestamp = true);

std::string gluing_check_text(const GluingCheck& check);
std::string gluing_check_json(const GluingCheck& check, bool with_timestamp = true);

std::string bounded_invariant_str(const BoundedInvariant& b);

}  // namespace toricgraph
