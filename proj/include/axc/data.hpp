// SPDX-License-Identifier: MIT
// Access to the configuration tables compiled into the library.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "axc/exactlin.hpp"
#include "axc/permgroup.hpp"

namespace axc::data {

using nlohmann::json;

// Parsed content of data/<name>; throws std::out_of_range for unknown names.
const json& get(const std::string& name);
std::vector<std::string> names();
std::string raw(const std::string& name);

// "n-4,2^2,1" evaluated at degree n; zero parts dropped. Plain specs like "8,2^2" ignore n.
std::vector<int> partition(const std::string& spec, int n);
std::string partition_str(const std::vector<int>& parts);  // "8,2^2"
std::vector<int> conjugate(const std::vector<int>& parts);

std::vector<Rat> rats(const json& arr);

// 64-bit FNV-1a, used to pin hand-transcribed data
std::uint64_t fnv1a(const std::string& s);

}  // namespace axc::data
