#pragma once

#include <iosfwd>

namespace dw {

/// Entry point of the `dw` tool. Exit codes: 0 pass, 1 computational failure
/// or disagreement, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dw
