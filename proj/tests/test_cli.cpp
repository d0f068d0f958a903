#include "fusionring/cli.hpp"
#include "fusionring/serialize.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace fusionring;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "fusionring");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weights") {
    const auto r = run({"weights", "A1~1", "-k", "1"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("sigma").at(0).at("phases") == Json::parse(R"(["1/6"])"));
    CHECK(j.at("sigma").at(1).at("phases") == Json::parse(R"(["1/3"])"));
    CHECK(run({"weights", "A1~1", "-k", "1", "--format", "csv"}).code == cli::kOk);
}

TEST_CASE("fuse emits the table and verification block") {
    const auto r = run({"fuse", "A1~1", "-k", "1", "--exhaustive"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("entries").size() == 4);
    CHECK(j.at("verification").at("kac_walton").at("agree") == true);
    CHECK(j.at("verification").at("kac_walton").at("mode") == "exhaustive");
    CHECK(j.at("verification").at("orthonormality_ok") == true);

    const auto z = Json::parse(run({"fuse", "C2~1", "-k", "0"}).out);
    CHECK(z.at("weights").size() == 1);
    CHECK(z.at("entries") == Json::parse("[[0,0,0,1]]"));
}

TEST_CASE("twisted and untwisted tables print identical entries") {
    const auto a = Json::parse(run({"fuse", "A4~2", "-k", "3"}).out);
    const auto c = Json::parse(run({"fuse", "C2~1", "-k", "1"}).out);
    CHECK(a.at("entries") == c.at("entries"));
    CHECK(a.at("weights") == c.at("weights"));
}

TEST_CASE("negative twisted coefficients are warned about") {
    const auto r = run({"fuse", "A5~2", "-k", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("verlinde") {
    auto j = Json::parse(run({"verlinde", "A1~1", "-k", "1", "--genus", "2"}).out);
    CHECK(j.at("value_integer") == 4);
    CHECK(j.at("integral") == true);
    j = Json::parse(run({"verlinde", "A2~1", "-k", "2", "--genus", "0", "--weights", "1,0;0,1"}).out);
    CHECK(j.at("value_integer") == 1);
    CHECK(run({"verlinde", "A1~1", "-k", "1", "--genus", "-1"}).code == cli::kInvalidInput);
}

TEST_CASE("smatrix, check, decompose") {
    const auto s = run({"smatrix", "E6~2", "-k", "1"});
    CHECK(s.code == cli::kOk);
    CHECK(Json::parse(s.out).at("unitarity_residual").get<double>() < 1e-8);

    const auto c = run({"check", "C2~1", "-k", "1"});
    CHECK(c.code == cli::kOk);
    CHECK(Json::parse(c.out).at("passed") == true);

    const auto d = Json::parse(run({"decompose", "C2~1", "-k", "1", "--weights", "1,0;1,0"}).out);
    CHECK(d.at("classical").size() == 3);
    CHECK(d.at("fusion") == Json::parse("[[[0,0],1],[[0,1],1]]"));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kInvalidInput);
    CHECK(run({"weights", "B2~1", "-k", "1"}).code == cli::kInvalidInput);
    CHECK(run({"weights", "A1~1", "-k", "-3"}).code == cli::kInvalidInput);
    CHECK(run({"weights", "A1~1", "-k", "1", "--format", "xml"}).code == cli::kInvalidInput);
    CHECK(run({"decompose", "A1~1", "-k", "1", "--weights", "2;0"}).code == cli::kInvalidInput);
    CHECK(run({"smatrix", "G2~1", "-k", "1", "--weyl-cap", "4"}).code == cli::kCapExceeded);
    CHECK(run({"fuse", "A1~1", "-k", "1", "--tol-int", "0"}).code == cli::kIntegrality);
    CHECK(run({"--help"}).code == cli::kOk);
}
