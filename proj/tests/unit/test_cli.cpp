#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oriftl/cli.hpp"
#include "oriftl/llt.hpp"
#include "support.hpp"

using namespace oriftl;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(ORIFTL_CONFIG_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("decomp block") {
    const auto r = run({"decomp", "--config", config("ex65"), "--n", "16", "--block-of", "(16,alpha1)"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# CONJECTURAL\n", 0) == 0);
    CHECK(r.out.find("(0,theta)\tv^4\tv^3") != std::string::npos);
    CHECK(r.err.empty());

    const auto j = run({"--format", "json", "decomp", "--config", config("ex65"), "--n", "16", "--block-of",
                        "(16,alpha1)"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("conjectural") == true);
    const auto N = GradedMatrix::from_json(doc.at("N"));
    CHECK(N.size() == 8);
    CHECK(N.conjectural);
    CHECK(N.entry(parse_shape("(0,theta)"), parse_shape("(16,alpha1)")) == LaurentPoly::monomial(4));
}

TEST_CASE("tableaux listing") {
    const auto r = run({"tableaux", "--n", "2", "--shape", "(0,theta)"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) rows += line.rfind("(0,theta):", 0) == 0;
    CHECK(rows == 4);
    const auto j = run({"--format", "json", "tableaux", "--n", "2", "--shape", "(0,theta)"});
    CHECK(nlohmann::json::parse(j.out).at("count") == 4);
}

TEST_CASE("calibrated check") {
    const auto r = run({"calibrated-check", "--config", config("generic"), "--n", "3", "--seed", "42", "--tol", "1e-8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const auto j = run({"--format", "json", "calibrated-check", "--config", config("generic"), "--n", "2", "--seed",
                        "1", "--blob"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).at("pass") == true);
    // an impossible tolerance is a check failure, not a usage error
    const auto f = run({"calibrated-check", "--config", config("generic"), "--n", "3", "--seed", "42", "--tol", "1e-300"});
    CHECK(f.code == 1);
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args = {"--format", "json", "calibrated-check", "--config", config("generic"),
                                           "--n", "3", "--seed", "7"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> d = {"delta", "--config", config("e7"), "--n", "9", "--jobs", "3"};
    CHECK(run(d).out == run({"delta", "--config", config("e7"), "--n", "9", "--jobs", "1"}).out);
}

TEST_CASE("other subcommands") {
    CHECK(run({"validate", "--config", config("ex65")}).out == "valid\n");
    CHECK(run({"shapes", "--n", "2"}).out == "shape\tcount\n(2,alpha1)\t1\n(2,alpha2)\t1\n(2,alpha2_inv)\t1\n(0,theta)\t4\n");
    CHECK(run({"blocks", "--config", config("generic"), "--n", "3"}).code == 0);
    CHECK(run({"ladders", "--config", config("e7"), "--n", "5"}).code == 0);
    CHECK(run({"bounds", "--config", config("e7"), "--n", "5"}).code == 0);

    const auto w = run({"word", "--config", config("fig14b"), "--tableau",
                        "(3,alpha1):[-18,-13,-12,-11,-10,1,2,3,4,5,6,7,8,9,14,15,16,17,19]"});
    CHECK(w.code == 0);
    CHECK(w.out.find("word\ts9 s8 s10 s17 s16 s13 s0 s1 s2 s3 s4 s5 s0 s1 s2 s3 s0 s1\nlength\t18\ncoxeter_length\t18\n") == 0);

    const auto d = run({"degree", "--config", config("fig14"), "--tableau", "(3,alpha1):[-9,1,2,3,4,5,6,7,8]"});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("degree_tiles\t1\ndegree_klr\t1\n", 0) == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({"delta", "--n", "3"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"tableaux", "--n", "2", "--shape", "(3,alpha1)"}).code == 2);
    CHECK(run({"--format", "xml", "shapes", "--n", "2"}).code == 2);
    CHECK(run({"delta", "--config", "/nonexistent.json", "--n", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto path = std::filesystem::temp_directory_path() / "oriftl_bad_config.json";
    {
        std::ofstream f(path);
        f << R"({"e": 5, "points": {"alpha1": {"integral": 0}}, "inversions": {}})";
    }
    const auto r = run({"validate", "--config", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("config error") != std::string::npos);
    {
        std::ofstream f(path);
        f << R"({"e": 5, "points": {"alpha1": {"integral": 0}, "alpha2": {"orbit": "B", "offset": 0},
                 "theta": {"orbit": "C", "offset": 0}}, "inversions": {"B": {"paired": "Bs"}, "C": {"paired": "Cs"}}})";
    }
    const auto v = run({"validate", "--config", path.string()});
    CHECK(v.code == 1);
    CHECK(v.out.find("alpha1 equals 1") != std::string::npos);
    std::filesystem::remove(path);
}
