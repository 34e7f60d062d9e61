// Acceptance run: one PASS/FAIL line per criterion. With an argument, runs that criterion only.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "axc/decomp.hpp"

using axc::decomp::Report;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::function<Report()>> suites;
};

const std::vector<Criterion>& criteria() {
    using namespace axc::decomp;
    static const std::vector<Criterion> all = {
        {1, "dihedral algebras satisfy the axioms", {norton_sakuma_report}},
        {2, "class sizes and valencies", {classes_report}},
        {3, "eigenmatrix rows and orthogonality", {eigenmatrix_report}},
        {4, "printed projection vectors", {projection_report}},
        {5, "radical constituents", {radical_suite}},
        {6, "unique admissible shape", {shape_report}},
        {7, "intersection Gram matrices", {intersection_report}},
        {8, "dimension totals", {dimension_suite}},
        {9, "spanning sets and relations", {dipendenti_report, udependent_suite}},
        {10, "odd axis pairings", {appendix_gram_check}},
    };
    return all;
}

bool run(const Criterion& c) {
    std::vector<std::string> failures;
    for (const auto& s : c.suites) {
        try {
            auto r = s();
            failures.insert(failures.end(), r.failures.begin(), r.failures.end());
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
    }
    std::cout << "criterion " << c.id << ": " << (failures.empty() ? "PASS" : "FAIL") << "  " << c.title << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    return failures.empty();
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool ok = true;
    for (const auto& c : criteria())
        if (!only || c.id == only) ok = run(c) && ok;
    return ok ? 0 : 1;
}
