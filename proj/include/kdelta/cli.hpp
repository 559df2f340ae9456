// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_CLI_HPP
#define KDELTA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kdelta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line tool on `args` (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kdelta

#endif // KDELTA_CLI_HPP
