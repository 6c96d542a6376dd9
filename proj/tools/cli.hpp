#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "negabeta/numerics.hpp"

namespace negabeta::tools {

/// "5/2", "2.5", "golden", "gamma:3". Polynomial bases go through --poly/--interval.
BetaSpec parse_beta(const std::string& text);

/// Exit codes: 0 success, 1 error, 2 partial result (horizon too short to decide).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace negabeta::tools
