// SPDX-License-Identifier: MIT
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return axc::cli::run(argc, argv, std::cout, std::cerr); }
