#pragma once

#include <iosfwd>
#include <string>

namespace hgsat {

/// Exit codes: 0 success, 1 verification failure or internal error,
/// 2 usage error or input that violates a hypothesis.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed 12-decimal rendering used for every real in CLI output.
std::string format_real(double x);

}  // namespace hgsat
