// SPDX-License-Identifier: MIT
#include "axc/data.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace axc::detail {
const std::map<std::string, std::string>& embedded_files();
}

namespace axc::data {

const json& get(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, json> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const auto& files = detail::embedded_files();
    auto f = files.find(name);
    if (f == files.end()) throw std::out_of_range("no data file " + name);
    return cache.emplace(name, json::parse(f->second)).first->second;
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : detail::embedded_files()) out.push_back(k);
    return out;
}

std::string raw(const std::string& name) { return detail::embedded_files().at(name); }

std::vector<int> partition(const std::string& spec, int n) {
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int mult = 1;
        auto h = tok.find('^');
        if (h != std::string::npos) {
            mult = std::stoi(tok.substr(h + 1));
            tok = tok.substr(0, h);
        }
        int v;
        if (!tok.empty() && tok[0] == 'n') v = n - (tok.size() > 1 ? std::stoi(tok.substr(2)) : 0);
        else v = std::stoi(tok);
        if (v < 0) throw std::invalid_argument("negative part in " + spec);
        for (int i = 0; i < mult; ++i)
            if (v > 0) parts.push_back(v);
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw std::invalid_argument("not a partition: " + spec);
    return parts;
}

std::string partition_str(const std::vector<int>& parts) {
    std::string s;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += ",";
        s += std::to_string(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::vector<int> conjugate(const std::vector<int>& parts) {
    std::vector<int> c;
    if (parts.empty()) return c;
    for (int j = 0; j < parts[0]; ++j) {
        int k = 0;
        for (int p : parts) if (p > j) ++k;
        c.push_back(k);
    }
    return c;
}

std::vector<Rat> rats(const json& arr) {
    std::vector<Rat> out;
    for (const auto& x : arr) out.push_back(parse_rat(x.get<std::string>()));
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace axc::data
