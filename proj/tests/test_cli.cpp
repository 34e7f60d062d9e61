#include <doctest.h>

#include <sstream>

#include "commands.hpp"

using namespace axc;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "axc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"verify", "shape", "--bogus"}).code == cli::kUsage);
    CHECK(call({"verify", "nonexistent"}).code == cli::kUsage);
    CHECK(call({"tables", "fe", "--format", "xml"}).code == cli::kUsage);
    CHECK(call({"eigenmatrix", "--kind", "q", "--lambda", "12"}).code == cli::kUsage);
    CHECK(call({"report", "dimensions", "--n", "13"}).code == cli::kUsage);
}

TEST_CASE("help exits with 0") { CHECK(call({"--help"}).code == cli::kOk); }

TEST_CASE("table fe as csv") {
    auto r = call({"tables", "fe", "--format", "csv"});
    REQUIRE(r.code == cli::kOk);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "lambda,dim,1,2,3,4,5,6,7,8,9,10,11");
    int lines = 0;
    for (std::string l; std::getline(is, l);) ++lines;
    CHECK(lines == 11);
}

TEST_CASE("verify shape passes and is byte-for-byte repeatable") {
    auto a = call({"verify", "shape", "--format", "json"});
    auto b = call({"verify", "shape", "--format", "json"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == cli::kSchemaVersion);
    CHECK(j["reports"][0]["ok"] == true);
}

TEST_CASE("suite order does not depend on the number of workers") {
    auto a = call({"verify", "shape", "gamma", "classes", "--jobs", "1", "--format", "csv"});
    auto b = call({"verify", "shape", "gamma", "classes", "--jobs", "3", "--format", "csv"});
    CHECK(a.out == b.out);
    CHECK(a.code == cli::kOk);
}

TEST_CASE("failing suite exits with 1") {
    // the printed intersection data contain a known misprint
    CHECK(call({"verify", "intersections", "--format", "csv"}).code == cli::kFailed);
}

TEST_CASE("report dimensions") {
    auto r = call({"report", "dimensions", "--n", "12", "--format", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("V,3960,3960") != std::string::npos);
    CHECK(r.out.find("total,3498,3498") != std::string::npos);
}

TEST_CASE("classify-pair") {
    auto r = call({"classify-pair", "--kind", "st", "--format", "csv", "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", "(7,9,12)(8,11,10)"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find(",3,1/4") != std::string::npos);
}

TEST_CASE("eigenmatrix and project") {
    auto e = call({"eigenmatrix", "--kind", "s", "--lambda", "8,4", "--format", "csv"});
    CHECK(e.code == cli::kOk);
    CHECK(e.out.find("dim,275") != std::string::npos);
    auto p = call({"project", "--kind", "s", "--lambda", "8,4", "--format", "csv"});
    CHECK(p.code == cli::kOk);
    CHECK(p.out.find("9,1/504") != std::string::npos);
}
