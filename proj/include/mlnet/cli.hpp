#pragma once

#include <iosfwd>

namespace mlnet {

/// Batch entry point. Exit codes: 0 success, 1 module/data errors,
/// 2 usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlnet
