#pragma once

#include <ostream>

namespace tailorder::cli {

enum ExitCode : int { kSuccess = 0, kOrderFails = 1, kInputError = 2, kDimensionError = 3, kIndistinguishable = 4 };

/// Entry point of the `tailorder` executable. Output is assembled in memory
/// and written once, either to `out` or to the --out file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tailorder::cli
