#pragma once

#include <ostream>

namespace dncrystal {

/// Exit codes: 0 success, 1 verification or integrity failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dncrystal
