#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellhyp/scaled.hpp"

namespace ellverify {

// Names accepted by `ellverify eval`.
const std::vector<std::string>& eval_functions();

// Evaluates FN with --key value arguments already collected into `args`.
// Throws ellhyp::ParseError for unknown functions or missing arguments.
ellhyp::ScaledComplex evaluate(const std::string& fn, const std::map<std::string, std::string>& args);

// "mantissa x 10^exp" plus a plain decimal when it fits a double
std::string format_value(const ellhyp::ScaledComplex& v);

}  // namespace ellverify
