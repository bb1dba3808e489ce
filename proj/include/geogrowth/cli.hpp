#pragma once

#include <iosfwd>

namespace geogrowth::cli {

/// Exit codes: 0 success or equal, 1 usage or input error, 2 mismatch
/// (compare, oracle), 3 oracle budget exhausted.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geogrowth::cli
