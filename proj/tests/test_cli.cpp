// End-to-end tests of the command-line surface: output formats, exit codes,
// cache behavior, and report determinism.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + LRING_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("lring_cli_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("gen prints canonical text") {
    CHECK(run_cli("gen q 3").out == "+1*s1^3 -3*s1*s2 +3*s3\n");
    CHECK(run_cli("gen pnm 1 2").out == "+1*s2\n");
    CHECK(run_cli("gen p 2").out == "+1*s1^2*t2 +1*s2*t1^2 -2*s2*t2\n");
    CHECK(run_cli("gen q 3").exit_code == 0);
}

TEST_CASE("gen json output carries the cache header") {
    auto res = run_cli("gen pnm 2 2 --output json");
    REQUIRE(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("kind") == "pnm");
    CHECK(doc.at("format_version") == 1);
    CHECK(doc.at("params").at("n") == 2);
    CHECK(doc.at("params").at("m") == 2);
    CHECK(doc.at("terms").is_array());
}

TEST_CASE("cap breaches exit 2, force overrides") {
    CHECK(run_cli("gen pnm 3 3").exit_code == 2);
    CHECK(run_cli("gen p 5").exit_code == 2);
    auto forced = run_cli("gen p 2 --product-cap 1 --force");
    CHECK(forced.exit_code == 0);
    CHECK(forced.out == "+1*s1^2*t2 +1*s2*t1^2 -2*s2*t2\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("gen pnm 2").exit_code == 2);       // missing m
    CHECK(run_cli("gen w 1").exit_code == 2);         // unknown kind
    CHECK(run_cli("frobnicate").exit_code == 2);      // unknown subcommand
    CHECK(run_cli("check nope").exit_code == 2);      // unknown suite
    CHECK(run_cli("check lambda --ring what-ring").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("check universal: pass, json shape, determinism") {
    auto res = run_cli("check universal --output json");
    REQUIRE(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("failed") == 0);
    CHECK(doc.at("suite") == "universal");
    CHECK(doc.at("caps").at("newton") == 8);
    CHECK(doc.at("checks").size() >= 10);
    for (const auto& c : doc.at("checks")) CHECK(c.at("status") == "pass");

    // byte-identical reruns
    auto res2 = run_cli("check universal --output json");
    CHECK(res.out == res2.out);
}

TEST_CASE("check module on one instance includes the theorem line") {
    auto res = run_cli("check module --ring binomial-int --module adams");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("PASS theorem-1.2 [ring=binomial-int,module=adams]") != std::string::npos);
    CHECK(res.out.find("PASS semilinearity") != std::string::npos);
    CHECK(res.out.find("PASS composition-sign") != std::string::npos);
    CHECK(res.out.find("PASS sign-identity") != std::string::npos);
}

TEST_CASE("reduced caps are visible in the report") {
    auto res = run_cli("check universal --composition-cap 4 --output json");
    REQUIRE(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("caps").at("composition") == 4);
    bool found = false;
    for (const auto& c : doc.at("checks"))
        if (c.at("check") == "coefficient-sum-pnm") {
            CHECK(c.at("params") == "nm<=4");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("cache workflow: write, list, reuse, corrupt, clear") {
    auto dir = fresh_dir("cache");
    const std::string flag = "--cache-dir '" + dir.string() + "' ";

    auto g1 = run_cli("gen q 3 " + flag);
    REQUIRE(g1.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "q" / "3.json"));

    auto listed = run_cli("cache list " + flag);
    CHECK(listed.out == "q/3\n");
    CHECK(listed.exit_code == 0);

    // warm read gives the same output
    CHECK(run_cli("gen q 3 " + flag).out == g1.out);

    // corrupt entry is refused, exit 1
    {
        std::ofstream f(dir / "q" / "3.json");
        f << "{ garbage";
    }
    CHECK(run_cli("gen q 3 " + flag).exit_code == 1);

    auto cleared = run_cli("cache clear " + flag);
    CHECK(cleared.out == "removed 1 entries\n");
    CHECK(run_cli("cache list " + flag).out.empty());

    // cache subcommand without a directory is a usage error
    CHECK(run_cli("cache list").exit_code == 2);
}

TEST_CASE("cache dir from the environment") {
    auto dir = fresh_dir("env");
    auto res = run_cli("gen pnm 2 2", "LRING_CACHE_DIR='" + dir.string() + "' ");
    REQUIRE(res.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "pnm" / "2-2.json"));
}

TEST_CASE("warm cache does not change check results") {
    auto dir = fresh_dir("warm");
    const std::string flag = "--cache-dir '" + dir.string() + "' --output json";
    auto cold = run_cli("check universal " + flag);
    REQUIRE(cold.exit_code == 0);
    auto warm = run_cli("check universal " + flag);
    CHECK(cold.out == warm.out);
    // and matches the cache-less run
    auto plain = run_cli("check universal --output json");
    CHECK(plain.out == cold.out);
}
