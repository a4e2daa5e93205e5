#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kCli = LAURENT_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "laurent-cli-test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

// Runs the CLI with artifacts redirected to dir; returns the exit code.
int run(const std::string& args, const fs::path& dir, const fs::path& stdout_file = {}) {
    std::string cmd = "LAURENT_OUT_DIR='" + dir.string() + "' '" + kCli + "' " + args;
    cmd += stdout_file.empty() ? " > /dev/null 2> /dev/null"
                               : " > '" + stdout_file.string() + "' 2> /dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("verify-cylinder-iso exit codes") {
    TempDir tmp;
    CHECK(run("verify-cylinder-iso --family fermat --p 2 --q 5 --l 1 --lp 3 --points 10",
              tmp.path) == 0);
    CHECK(run("verify-cylinder-iso --family danielewski --n 1 --m 5 --l 1 --lp 2 --points 10",
              tmp.path) == 0);
    // gcd(1, 10) != gcd(2, 10): no construction applies
    CHECK(run("verify-cylinder-iso --family fermat --p 2 --q 5 --l 1 --lp 2 --points 10",
              tmp.path) == 2);
    // missing required option is a CLI parse error, not a math verdict
    CHECK(run("verify-cylinder-iso --family fermat --l 1", tmp.path) != 0);
}

TEST_CASE("certify-noniso exit codes") {
    TempDir tmp;
    CHECK(run("certify-noniso --family fermat --p 2 --q 5 --l 3", tmp.path) == 0);
    CHECK(run("certify-noniso --family fermat --p 2 --q 5 --l 9", tmp.path) == 2);
    CHECK(run("certify-noniso --family danielewski --n 1 --m 5 --l 1 --lp 2", tmp.path) == 0);
    CHECK(run("certify-noniso --family danielewski --n 1 --m 5 --l 1 --lp 4", tmp.path) == 1);
}

TEST_CASE("fibers exit codes and JSON shape") {
    TempDir tmp;
    auto out = tmp.path / "fibers.json";
    CHECK(run("--json fibers --p 2 --q 3 --l 1 --map x^2t", tmp.path, out) == 0);
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    CHECK(j.at("multiset") == std::vector<long long>{2, 3});
    CHECK(j.at("spec") == "x^2t");

    CHECK(run("fibers --p 2 --q 3 --l 5 --map x^2t", tmp.path) == 2);
    CHECK(run("fibers --p 2 --q 3 --l 3 --map yt", tmp.path) == 0);
}

TEST_CASE("scan emits the counterexample pairs as JSON") {
    TempDir tmp;
    auto out = tmp.path / "scan.json";
    CHECK(run("--json scan --family danielewski --n 1 --m 5 --max 4 --points 5", tmp.path,
              out) == 0);
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    CHECK(j.at("rows").size() == 6);
    auto ces = j.at("counterexamples");
    REQUIRE(ces.size() == 4);
    CHECK(ces[0] == nlohmann::json::array({1, 2}));
    for (const auto& row : j.at("rows")) {
        CHECK((row.at("cylinder") == "verified" || row.at("cylinder") == "unsupported"));
        if (row.at("counterexample").get<bool>()) {
            CHECK(row.at("cylinder") == "verified");
            CHECK(row.at("certificate") == "certified-noniso");
        }
    }
}

TEST_CASE("find-square-pair finds the worked solution") {
    TempDir tmp;
    auto out = tmp.path / "pairs.json";
    CHECK(run("--json find-square-pair --m 5 --bound 20", tmp.path, out) == 0);
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    bool found = false;
    for (const auto& p : j.at("pairs"))
        found |= (p.at("a") == 2 && p.at("b") == 13 && p.at("nontrivial").get<bool>());
    CHECK(found);
}

TEST_CASE("--out writes the requested file") {
    TempDir tmp;
    auto target = tmp.path / "recipe.json";
    CHECK(run("verify-cylinder-iso --family fermat --p 2 --q 5 --l 1 --lp 3 --points 10 "
              "--out '" + target.string() + "'",
              tmp.path) == 0);
    REQUIRE(fs::exists(target));
    std::ifstream in(target);
    auto j = nlohmann::json::parse(in);
    CHECK(j.at("kind") == "cylinder");
    CHECK(j.at("report").at("verdict") == "verified");
}

TEST_CASE("default artifact path is content-addressed") {
    TempDir tmp;
    CHECK(run("certify-noniso --family fermat --p 2 --q 5 --l 3", tmp.path) == 0);
    bool saw = false;
    for (const auto& e : fs::directory_iterator(tmp.path)) {
        auto name = e.path().filename().string();
        if (name.rfind("noniso-", 0) == 0 && name.size() == 7 + 16 + 5) saw = true;
    }
    CHECK(saw);
}
