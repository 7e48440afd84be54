#pragma once

#include <ostream>

namespace raf::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 timeout (bounds emitted).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace raf::cli
