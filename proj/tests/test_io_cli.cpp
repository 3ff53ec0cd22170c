#include "cli.hpp"

#include <biderlab/io.hpp>
#include <biderlab/presets.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace biderlab;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = BIDERLAB_DATA_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* file) { return data_dir + "/" + file; }

std::string expect_parse_error(const Json& j) {
    try {
        parse_algebra(j);
    } catch (const Error& e) {
        return e.what();
    }
    ADD_FAILURE() << "no error";
    return {};
}

fs::path temp_file(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("biderlab_test_" + name);
    std::ofstream(p) << text;
    return p;
}

bool consistent_exit(const CliRun& r) {
    const Json j = r.json();
    bool all = true;
    for (const auto& v : j["verdicts"]) all = all && v["status"] != "fail";
    return (r.code == 0) == all;
}

} // namespace

TEST(AlgebraJson, RoundTrip) {
    for (const char* p : {"t2", "t3", "m2", "block:2,1", "one_dim"}) {
        const Algebra A = preset_algebra(p);
        const Json j = algebra_to_json(A);
        const Algebra B = parse_algebra(Json::parse(j.dump()));
        EXPECT_EQ(algebra_to_json(B), j) << p;
        EXPECT_EQ(B.dim(), A.dim());
    }
}

TEST(AlgebraJson, DataFilesMatchPresets) {
    const std::vector<std::pair<const char*, const char*>> files{{"t2.json", "t2"}, {"t3.json", "t3"}, {"t4.json", "t4"},
                                                                 {"m2.json", "m2"}, {"m3.json", "m3"}, {"one_dim.json", "one_dim"},
                                                                 {"block21.json", "block:2,1"}};
    for (const auto& [file, preset] : files)
        EXPECT_EQ(algebra_to_json(load_algebra(data(file))), algebra_to_json(preset_algebra(preset))) << file;
}

TEST(AlgebraJson, Errors) {
    Json j = algebra_to_json(upper_triangular(2));
    Json bad = j;
    bad["table"][0][0] = Json::array({"1", "0"});
    EXPECT_NE(expect_parse_error(bad).find("table[0][0]: expected 3 entries"), std::string::npos);

    bad = j;
    bad["unity"] = Json::array({"1", "0", "0"});
    EXPECT_NE(expect_parse_error(bad).find("unity law fails"), std::string::npos);
    EXPECT_THROW(parse_algebra(bad), InvalidAlgebra);

    bad = j;
    bad["unity"][0] = "1/0";
    EXPECT_THROW(parse_algebra(bad), ParseError);
    bad["unity"][0] = "0.5";
    EXPECT_THROW(parse_algebra(bad), ParseError);

    bad = j;
    bad.erase("table");
    EXPECT_NE(expect_parse_error(bad).find("table"), std::string::npos);
    EXPECT_THROW(parse_json_text("{", "x.json"), ParseError);
    EXPECT_THROW(read_file("/nonexistent/biderlab.json"), ParseError);
}

TEST(AlgebraJson, IntegersAccepted) {
    Json j = algebra_to_json(upper_triangular(2));
    j["unity"] = Json::array({1, 0, 1});
    EXPECT_EQ(parse_algebra(j).unity(), upper_triangular(2).unity());
}

TEST(RationalJson, Serialization) {
    EXPECT_EQ(to_json(Vector{Rational(-3, 2), Rational(4, 2)}), Json::array({"-3/2", "2"}));
}

TEST(PolynomialJson, RoundTripAndErrors) {
    const Json j = Json::parse(R"({"n": 3, "terms": [{"perm": [1, 2, 3], "coeff": "1"}, {"perm": [3, 2, 1], "coeff": 1}]})");
    const auto f = parse_polynomial(j);
    EXPECT_EQ(f.terms(), build_named_poly("jordan_triple").terms());
    EXPECT_EQ(parse_polynomial(polynomial_to_json(f)).terms(), f.terms());
    EXPECT_THROW(parse_polynomial(Json::parse(R"({"n": 2, "terms": [{"perm": [1, 3], "coeff": "1"}]})")), ParseError);
    EXPECT_THROW(parse_polynomial(Json::parse(R"({"n": 2, "terms": [{"perm": [1, 1], "coeff": "1"}]})")), ParseError);
    EXPECT_THROW(parse_polynomial(Json::parse(R"({"n": 2, "terms": [{"perm": [1, 2]}]})")), ParseError);
}

TEST(MapJson, RoundTrip) {
    const Algebra M2 = matrix_algebra(2);
    const BilinearMap c = commutator_map(M2);
    EXPECT_EQ(parse_map(map_to_json(c), 4, 4), c);
    EXPECT_THROW(parse_map(Json::parse(R"({"values": []})"), 4, 4), ParseError);
}

TEST(Coordinates, Parse) {
    EXPECT_EQ(parse_coordinates("1,0,-1/2", 3), (Vector{1, 0, Rational(-1, 2)}));
    EXPECT_THROW(parse_coordinates("1,0", 3), ParseError);
}

TEST(Cli, HelpAndUsage) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"check", data("t2.json")}).code, 2);  // --idempotent missing
    EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"preset", "q7"}).code, 2);
    const CliRun wrong = run({"check", data("t2.json"), "--idempotent", "1,0"});
    EXPECT_EQ(wrong.code, 2);
    EXPECT_FALSE(wrong.err.empty());
    EXPECT_EQ(run({"check", data("t2.json"), "--idempotent", "1,1,1"}).code, 2);  // not an idempotent of interest
}

TEST(Cli, Validate) {
    const CliRun ok = run({"validate", data("m2.json")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.json()["summary"]["status"], "pass");

    Json bad = algebra_to_json(upper_triangular(2));
    bad["unity"] = Json::array({"1", "0", "0"});
    const CliRun r = run({"validate", temp_file("bad_unity.json", bad.dump()).string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("unity law fails"), std::string::npos);
}

TEST(Cli, CheckTriangular) {
    const CliRun r = run({"check", data("t2.json"), "--idempotent", "1,0,0", "--hypotheses", "star,triangular"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(consistent_exit(r));
}

TEST(Cli, SpacesReport) {
    const CliRun r = run({"spaces", "--algebra", data("t2.json"), "--kind", "jordan-bider"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    ASSERT_GE(keys.size(), 4u);
    EXPECT_EQ(keys[0], "tool");
    EXPECT_EQ(keys[1], "version");
    EXPECT_EQ(keys[2], "command");
    EXPECT_EQ(keys[keys.size() - 2], "verdicts");
    EXPECT_EQ(keys.back(), "summary");
    EXPECT_EQ(j["inputs"]["algebra"]["sha256"].get<std::string>().size(), 64u);
    EXPECT_TRUE(consistent_exit(r));
    EXPECT_FALSE(j.contains("timings"));
}

TEST(Cli, PresetAlgebraArgument) {
    const CliRun a = run({"spaces", "preset:t2", "--kind", "bider"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.json()["summary"]["status"], "pass");
    const CliRun p = run({"preset", "t2"});
    EXPECT_EQ(Json::parse(p.out), algebra_to_json(upper_triangular(2)));
}

TEST(Cli, ByteIdenticalReruns) {
    const std::vector<std::string> args{"verify", data("m2.json"), "--idempotent", "1,0,0,0", "--suite", "all", "--samples", "20", "--seed", "7"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
}

TEST(Cli, VerifySurfacesMatrixResidual) {
    const CliRun r = run({"verify", data("m2.json"), "--idempotent", "1,0,0,0", "--suite", "all", "--samples", "20"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(consistent_exit(r));
    const Json j = r.json();
    bool residual_failed = false;
    for (const auto& v : j["verdicts"])
        if (v["name"].get<std::string>().find("residual_zero") != std::string::npos && v["status"] == "fail") residual_failed = true;
    EXPECT_TRUE(residual_failed);
}

TEST(Cli, VerifyTriangularPasses) {
    const CliRun r = run({"verify", data("t3.json"), "--idempotent", "1,0,0,1,0,0", "--samples", "20"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(consistent_exit(r));
}

TEST(Cli, DecomposeEmitsMaps) {
    const CliRun r = run({"decompose", data("t2.json"), "--idempotent", "1,0,0", "--emit-maps", "--mode", "adjusted"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(r.out.find("\"maps\"") != std::string::npos);
    EXPECT_EQ(run({"decompose", data("t2.json"), "--idempotent", "1,0,0", "--mode", "other"}).code, 2);
}

TEST(Cli, OutFileAndTimings) {
    const fs::path p = fs::temp_directory_path() / "biderlab_test_out.json";
    const CliRun r = run({"--out", p.string(), "--timings", "spaces", data("t2.json"), "--kind", "bider"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("pass: ", 0), 0u);
    const Json j = Json::parse(read_file(p.string()));
    EXPECT_TRUE(j.contains("timings"));
}
