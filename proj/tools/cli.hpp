#pragma once

#include <iosfwd>

#include "tourlab/error.hpp"

namespace tourlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInternal = 4;

int exit_code(Errc code) noexcept;

/// Runs one command line. Tables go to `out` (or --out), logs and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourlab::cli
