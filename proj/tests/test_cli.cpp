// End-to-end checks of the installed binary: exit codes, flag overrides,
// and the counterexample fixtures driven through files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "specrange/io.hpp"

#ifndef SPECRANGE_CLI_PATH
#error "SPECRANGE_CLI_PATH must be defined by the build"
#endif

using namespace specrange;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("specrange_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string command = std::string(SPECRANGE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kBipartiteEdges = "n 4\n0 1 1\n2 3 1\n";
// the displayed eigenbasis, s = 1/sqrt(2)
const char* kBipartiteBasis =
    "0.7071067811865476,0,0.7071067811865476,0\n"
    "0.7071067811865476,0,-0.7071067811865476,0\n"
    "0,0.7071067811865476,0,0.7071067811865476\n"
    "0,0.7071067811865476,0,-0.7071067811865476\n";

const char* kK4Edges = "n 4\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n";
const char* kK4Basis =
    "0.5,0.5,0.7071067811865476,0\n"
    "0.5,0.5,-0.7071067811865476,0\n"
    "0.5,-0.5,0,0.7071067811865476\n"
    "0.5,-0.5,0,-0.7071067811865476\n";

}  // namespace

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run("graph --graph sensor:20,0.4,3 --out " + dir.file("ok")) == 0);
    CHECK(run("range --graph sensor:20,0.4,3 --pair bogus-kind --out " + dir.file("v")) == 1);
    CHECK(run("range --graph " + dir.file("missing.txt") + " --out " + dir.file("io")) == 2);
    CHECK(run("eigvec --graph sensor:20,0.4,3 -k 999 --out " + dir.file("k")) == 1);
    // a graph whose 1 - lambda/2 vector has negative transform coefficients:
    // the spectral-domain pair loses positive semidefiniteness there
    write_text_file(dir.file("neg9.txt"),
                    "n 9\n0 2 1\n0 4 1\n1 3 1\n2 3 1\n2 6 1\n2 7 1\n4 5 1\n5 8 1\n6 7 1\n"
                    "6 8 1\n7 8 1\n");
    CHECK(run("range --graph " + dir.file("neg9.txt") + " --pair laplace-laplace --out " +
              dir.file("n")) == 3);
}

TEST_CASE("bipartite counterexample through the CLI with a pinned basis") {
    TempDir dir;
    write_text_file(dir.file("bip.txt"), kBipartiteEdges);
    write_text_file(dir.file("basis.csv"), kBipartiteBasis);
    write_text_file(dir.file("f.csv"), "1\n0\n1\n0\n");
    write_text_file(dir.file("g.csv"), "1\n0\n1\n0\n");

    const int code = run("range --graph " + dir.file("bip.txt") + " --basis " +
                         dir.file("basis.csv") + " --pair custom:f=" + dir.file("f.csv") +
                         ",ghat=" + dir.file("g.csv") + " --angles uniform:16 --out " +
                         dir.file("out"));
    REQUIRE(code == 0);

    const nlohmann::json j = nlohmann::json::parse(read_text_file(dir.file("out") + "/range.json"));
    // outer polygon is the unit square, so its shoelace area is 1
    double twice_area = 0.0;
    const auto& outer = j["outer"];
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const auto& a = outer[i];
        const auto& b = outer[(i + 1) % outer.size()];
        twice_area += a[0].get<double>() * b[1].get<double>() -
                      b[0].get<double>() * a[1].get<double>();
    }
    CHECK(std::abs(std::abs(twice_area) / 2.0 - 1.0) <= 1e-6);
    for (const auto& corner : {"fg", "fg*", "f*g", "f*g*"}) {
        CHECK(j["sigma1_corners"][corner].is_null());  // vacuous everywhere
    }
}

TEST_CASE("K4 counterexample through cmd_verify with a pinned basis") {
    TempDir dir;
    write_text_file(dir.file("k4.txt"), kK4Edges);
    write_text_file(dir.file("basis.csv"), kK4Basis);
    write_text_file(dir.file("f.csv"), "1\n1\n0\n0\n");
    write_text_file(dir.file("g.csv"), "0\n0\n1\n0\n");

    const int code = run("verify --graph " + dir.file("k4.txt") + " --basis " +
                         dir.file("basis.csv") + " --pair custom:f=" + dir.file("f.csv") +
                         ",ghat=" + dir.file("g.csv") + " --out " + dir.file("out"));
    REQUIRE(code == 0);

    const nlohmann::json report =
        nlohmann::json::parse(read_text_file(dir.file("out") + "/verify.json"));
    CHECK(report["pass"] == true);
    bool saw_attainment = false;
    for (const auto& check : report["checks"]) {
        if (check["name"] == "corner_11_attained") {
            saw_attainment = true;
            CHECK(check["pass"] == true);
        }
    }
    CHECK(saw_attainment);
}

TEST_CASE("a wrong pinned basis is rejected") {
    TempDir dir;
    write_text_file(dir.file("path.txt"), "n 4\n0 1 1\n1 2 1\n2 3 1\n");
    write_text_file(dir.file("basis.csv"), kBipartiteBasis);  // does not diagonalize a path
    write_text_file(dir.file("f.csv"), "1\n0\n1\n0\n");
    write_text_file(dir.file("g.csv"), "1\n0\n1\n0\n");
    const int code = run("range --graph " + dir.file("path.txt") + " --basis " +
                         dir.file("basis.csv") + " --pair custom:f=" + dir.file("f.csv") +
                         ",ghat=" + dir.file("g.csv") + " --out " + dir.file("out"));
    CHECK(code == 1);
}

TEST_CASE("config file with flag overrides") {
    TempDir dir;
    write_text_file(dir.file("run.cfg"),
                    "[graph]\nsource = sensor:30,0.4,5\n\n[pair]\nkind = distance-projection\n"
                    "N = 8\n\n[angles]\nschedule = uniform:12\n\n[run]\nout = " +
                        dir.file("cfg_out") + "\nformats = json\n");
    CHECK(run("range --config " + dir.file("run.cfg")) == 0);
    CHECK(fs::exists(dir.file("cfg_out") + "/range.json"));
    CHECK_FALSE(fs::exists(dir.file("cfg_out") + "/range.svg"));  // formats honored

    // --out overrides the config file value
    CHECK(run("range --config " + dir.file("run.cfg") + " --out " + dir.file("flag_out") +
              " --format svg") == 0);
    CHECK(fs::exists(dir.file("flag_out") + "/range.svg"));
    CHECK_FALSE(fs::exists(dir.file("flag_out") + "/range.json"));
}

TEST_CASE("laplace-laplace dual pair runs end to end on K4") {
    TempDir dir;
    write_text_file(dir.file("k4.txt"), kK4Edges);
    const int code = run("range --graph " + dir.file("k4.txt") +
                         " --pair laplace-laplace --angles uniform:24 --out " + dir.file("out"));
    REQUIRE(code == 0);
    const nlohmann::json j = nlohmann::json::parse(read_text_file(dir.file("out") + "/range.json"));
    CHECK(j["area_gap"].get<double>() >= 0.0);
}

TEST_CASE("spectrum command smoke test") {
    TempDir dir;
    const int code = run("spectrum --graph sensor:12,0.9,3 --pair distance-projection:N=3 --out " +
                         dir.file("out"));
    CHECK(code == 0);
    CHECK(fs::exists(dir.file("out") + "/spectrum.csv"));
    CHECK(fs::exists(dir.file("out") + "/spectrum.svg"));
}
