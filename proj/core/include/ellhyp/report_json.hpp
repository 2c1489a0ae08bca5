#pragma once

#include <string>

#include "ellhyp/harness.hpp"

namespace ellhyp {

inline constexpr int kReportVersion = 1;

// Complex values are written as [re, im, exp2] (value = (re + i im) 2^exp2);
// bound parameters use exp2 = 0. A NaN residual is written as null.
// Output is deterministic: keys sorted, doubles printed to round-trip.
std::string to_json(const SuiteResult& result);
SuiteResult suite_from_json(const std::string& text);

std::string to_json(const IdentityReport& report);
IdentityReport report_from_json(const std::string& text);

}  // namespace ellhyp
