// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "axc/decomp.hpp"

namespace axc::cli {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Suite {
    std::string name;
    std::function<decomp::Report()> run;
};
// Every verification suite, in report order.
const std::vector<Suite>& suites();

// Runs the named suites on at most `jobs` threads; results come back in the order requested.
std::vector<decomp::Report> run_suites(const std::vector<std::string>& names, unsigned jobs);

// A rectangular table with exact entries as strings.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
std::string render(const Table& t, const std::string& format);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace axc::cli
