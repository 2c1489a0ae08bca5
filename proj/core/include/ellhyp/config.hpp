#pragma once

#include <map>
#include <string>

#include "ellhyp/harness.hpp"

namespace ellhyp {

// "re", "re+imi", "re-imi", "imi", "mod@phase" (phase in radians)
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

// key = value per line; blank lines and lines starting with '#' are skipped
std::map<std::string, std::string> parse_key_values(const std::string& text);

// Keys: select (comma separated globs), reps, seed_offset, tol_scale,
// tol.<family>, max_n, max_N, nome_lo, nome_hi, threads, timing,
// perturb_solved. Unknown keys raise ParseError.
void apply_config(SuiteConfig& cfg, const std::map<std::string, std::string>& kv);
SuiteConfig load_config_file(const std::string& path, SuiteConfig base = {});

}  // namespace ellhyp
