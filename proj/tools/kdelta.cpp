// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <iostream>
#include <string>
#include <vector>

#include "kdelta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kdelta::run_cli(args, std::cout, std::cerr);
}
