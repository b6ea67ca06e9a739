#include "bidisk/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bidisk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bidisk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("bidisk_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST_CASE("verify exits 0 on a clean sweep") {
    const auto r = run({"verify", "--theorem", "t2", "--samples", "100", "--seed", "42"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["summary"][0]["theorem"] == "t2");
    CHECK(j["summary"][0]["samples"] == 2000);
}

TEST_CASE("verify output is reproducible") {
    const auto a = run({"--threads", "1", "verify", "--theorem", "harm", "main", "--samples", "10", "--seed", "5", "--format", "csv"});
    const auto b = run({"--threads", "2", "verify", "--theorem", "harm", "main", "--samples", "10", "--seed", "5", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("theorem,z_re,z_im,lhs,rhs,margin,holds\n", 0) == 0);
}

TEST_CASE("landau prints the root") {
    auto r = run({"landau", "--variant", "t2", "--m", "1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["r0"].get<double>() > 0.1);
    CHECK(j["r0"].get<double>() < 0.15);
    CHECK(std::abs(j["residual"].get<double>()) < 1e-12);
    CHECK(j["R0_lower"].get<double>() > 0.0);

    r = run({"landau", "--variant", "ibdp", "--m1", "1", "--m2", "1", "--m3", "1"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["residual"].get<double>()) < 1e-12);

    CHECK(run({"landau", "--variant", "t2", "--m", "0.5"}).code == 2);
    CHECK(run({"landau", "--variant", "nope"}).code == 2);
}

TEST_CASE("sharpness prints 4/pi") {
    const auto r = run({"sharpness"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.2732395") != std::string::npos);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
}

TEST_CASE("solve writes the grid") {
    const auto path = temp_file("identity.json", R"({"f":{"type":"fourier","coeffs":{"1":[1.0,0.0]}},
        "h":{"type":"fourier","coeffs":{"1":[-1.0,0.0]}},"g":{"type":"constant","value":[0,0]},
        "quad":{"n_theta":512,"n_radial":64,"per_arc":true}})");
    const auto r = run({"solve", "--problem", path, "--rings", "3", "--spokes", "4", "--derivatives"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "z_re,z_im,phi_re,phi_im,dz_re,dz_im,dzbar_re,dzbar_im");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        REQUIRE(v.size() == 8);
        CHECK(std::abs(v[2] - v[0]) < 1e-8);
        CHECK(std::abs(v[3] - v[1]) < 1e-8);
        CHECK(std::abs(v[4] - 1.0) < 1e-7);
    }
    CHECK(rows == 13);

    const auto rect = run({"solve", "--problem", path, "--grid", "rect", "--nx", "5", "--n-theta", "256"});
    CHECK(rect.code == 0);

    const auto out = (std::filesystem::temp_directory_path() / "bidisk_cli_out.csv").string();
    CHECK(run({"--output", out, "solve", "--problem", path, "--rings", "2", "--spokes", "2"}).code == 0);
    std::ifstream f(out);
    std::getline(f, line);
    CHECK(line == "z_re,z_im,phi_re,phi_im");
}

TEST_CASE("kernel tables") {
    for (const char* k : {"P", "H0", "K2", "F0", "G", "I2", "J"}) {
        const auto r = run({"kernel-table", "--kernel", k, "--rings", "2", "--spokes", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.size() > 20);
    }
    const auto j = run({"kernel-table", "--kernel", "J", "--rings", "1", "--spokes", "1", "--max-radius", "0.5"});
    CHECK(j.out.find("3.9269908169872") != std::string::npos);
}

TEST_CASE("bad configuration exits 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--theorem", "bogus"}).code == 2);
    CHECK(run({"verify", "--n-theta", "4"}).code == 2);
    CHECK(run({"sharpness", "--n-radial", "1"}).code == 2);
    CHECK(run({"solve", "--problem", "/nonexistent/problem.json"}).code == 2);
    CHECK(run({"kernel-table", "--kernel", "Q"}).code == 2);
    const auto bad = temp_file("bad.json", R"({"f":{"type":"fourier","coeffs":{"x":[1,0]}},"h":{"type":"fourier","coeffs":{}}})");
    CHECK(run({"solve", "--problem", bad}).code == 2);
    const auto missing = temp_file("missing.json", R"({"f":{"type":"two_arc","upper":[1,0],"lower":[-1,0]}})");
    const auto r = run({"solve", "--problem", missing});
    CHECK(r.code == 2);
    CHECK(r.err.find("'h'") != std::string::npos);
    CHECK(run({"--output", "/nonexistent/dir/out.csv", "sharpness"}).code == 2);
}
