#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hgmd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = fs::temp_directory_path() / ("hgmd_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("construct is byte-stable") {
    const auto r = run({"construct", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 3\n3 1 2\n. . .\n");
    CHECK(run({"construct", "--n", "3"}).out == r.out);
    CHECK(run({"construct", "--n", "3", "--format", "triples"}).out.starts_with("# graph 3 3 3 3\n"));

    const auto path = (fs::temp_directory_path() / "hgmd_cli_out.pls").string();
    CHECK(run({"construct", "--n", "9", "--out", path}).code == 0);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == run({"construct", "--n", "9"}).out);
    CHECK(run({"construct", "--n", "2"}).code == 2);
}

TEST_CASE("verify exit codes") {
    const auto big = temp_file("big.pls", run({"fixtures", "--name", "hg_5_7_11"}).out);
    auto r = run({"verify", "--graph", "5x7x11", "--in", big});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "RESOLVING");
    CHECK(run({"verify", "--graph", "5x7x11", "--in", big, "--method", "distance"}).code == 0);

    const auto partial = temp_file("partial.txt", "# graph 3 3 3 3\n1 1 1\n1 2 2\n");
    r = run({"verify", "--graph", "3x3x3", "--in", partial});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["witness"].size() == 2);
    CHECK(run({"verify", "--graph", "3x3x3;K=1,2", "--in", partial, "--method", "distance", "--format", "triples"})
              .code == 2);  // header K disagrees

    const auto bad = temp_file("bad.pls", "1 2 3\n3 1 4\n. . .\n");
    r = run({"verify", "--graph", "3x3x3", "--in", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2, column 5") != std::string::npos);
    CHECK(run({"verify", "--graph", "3x3x3", "--in", "/nonexistent/file"}).code == 2);
    CHECK(run({"verify", "--graph", "3x3x3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("dimension") {
    auto r = run({"dimension", "--graph", "3x3x3", "--exhaustive"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["dimension"] == 6);
    CHECK(doc["verdict"] == "DIMENSION");
    CHECK(run({"dimension", "--graph", "3x3x3", "--exhaustive"}).out == r.out);

    CHECK(run({"dimension", "--graph", "4x4x4", "--exhaustive", "--budget", "10"}).code == 3);
    CHECK(nlohmann::json::parse(run({"dimension", "--graph", "9x9x9"}).out)["dimension"] == 17);
    CHECK(run({"dimension", "--graph", "3x4x5"}).code == 2);

    ::setenv(hgmd::cli::kBudgetEnv, "10", 1);
    CHECK(run({"dimension", "--graph", "4x4x4", "--exhaustive"}).code == 3);
    CHECK(run({"dimension", "--graph", "4x4x4", "--exhaustive", "--budget", "1000000000"}).code == 0);
    ::setenv(hgmd::cli::kBudgetEnv, "ten", 1);
    CHECK(run({"dimension", "--graph", "4x4x4", "--exhaustive"}).code == 2);
    ::unsetenv(hgmd::cli::kBudgetEnv);
}

TEST_CASE("scan") {
    const auto six = temp_file("six.pls", run({"construct", "--n", "6"}).out);
    auto r = run({"scan", "--graph", "6x6x6", "--in", six});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["class"] == "OTHER");
    CHECK(doc["prediction"].is_null());
    CHECK(doc["report"]["applicable"] == false);

    const auto seven = temp_file("seven.pls", run({"construct", "--n", "7"}).out);
    doc = nlohmann::json::parse(run({"scan", "--graph", "7x7x7", "--in", seven}).out);
    CHECK(doc["class"] == "TRIPLE_LOOPED");
    CHECK(doc["loop_vertex"] == nlohmann::json::parse("[7,7,7]"));
    CHECK(doc["report"]["configurations"].empty());
    CHECK(doc["prediction"]["verdict"] == "RESOLVING");
}

TEST_CASE("fixtures and enumerate") {
    CHECK(run({"fixtures", "--name", "n6"}).out.starts_with(". 1 . . . .\n1 2 . . . .\n"));
    CHECK(run({"fixtures", "--name", "n7"}).code == 2);
    const auto a = run({"enumerate", "--n", "4", "--count", "20", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"enumerate", "--n", "4", "--count", "20", "--seed", "5"}).out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 20);
    CHECK(run({"enumerate", "--n", "4", "--count", "20", "--seed", "6"}).out != a.out);
}
