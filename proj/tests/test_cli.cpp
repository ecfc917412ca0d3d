#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FLAT2G_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("moduli subcommand") {
    auto r = run("moduli --group Z2 --cocycle trivial --genus 1 -N 2");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["cs_dimension"] == 4);
    CHECK(j["flat_2bundle_classes"] == 8);
    CHECK(j["orbits"].size() == 4);

    auto s3 = run("moduli --group S3 --cocycle trivial --genus 1");
    CHECK(json::parse(s3.out)["orbits"].size() == 8);

    auto tw = run("moduli --group Z2 --cocycle cyclic:2:1 --genus 1 -N 2");
    CHECK(json::parse(tw.out)["cs_dimension"] == 4);
}

TEST_CASE("exit codes") {
    CHECK(run("moduli --group NOPE").exit_code == 1);
    CHECK(run("moduli --group S4 --genus 3 --budget 100").exit_code == 2);
    CHECK(run("verify --suite elliptic --group Z2 --cocycle cyclic:2:1").exit_code == 0);

    // a non-closed cocycle file fails the cocycle suite with a counterexample
    {
        std::ofstream f("/tmp/flat2g_bad_cocycle.txt");
        f << "1,1,0,1/2\n";
    }
    auto r = run("verify --suite cocycle --group Z2 --cocycle file:/tmp/flat2g_bad_cocycle.txt");
    CHECK(r.exit_code == 3);
    auto j = json::parse(r.out);
    CHECK_FALSE(j[0]["pass"].get<bool>());
    CHECK(j[0]["counterexample"].get<std::string>().find("closedness") != std::string::npos);
}

TEST_CASE("cech subcommand") {
    auto a = run("cech classify --nerve sphere-tetra --group Z1 -N 3");
    CHECK(a.exit_code == 0);
    CHECK(json::parse(a.out)["classes"] == 3);

    auto b = run("cech classify --nerve circle3 --group S3 -N 1");
    CHECK(json::parse(b.out)["classes"] == 3);

    auto c = run("cech classify --nerve torus7 --group Z2 -N 2 --cocycle trivial");
    CHECK(json::parse(c.out)["classes"] == 8);

    // validate + holonomy on a data file
    {
        std::ofstream f("/tmp/flat2g_circle_data.json");
        f << R"({"rho":{"0,1":"0","1,2":"0","2,0":"1"},"gamma":{}})";
    }
    auto v = run("cech validate --nerve circle3 --group Z2 -N 2 --data /tmp/flat2g_circle_data.json");
    CHECK(v.exit_code == 0);
    CHECK(json::parse(v.out)["result"]["valid"] == true);
    auto h = run(
        "cech holonomy --nerve circle3 --group Z2 -N 2 --data /tmp/flat2g_circle_data.json "
        "--loop 0,1,2,0");
    CHECK(json::parse(h.out)["holonomy"] == "1");
}

TEST_CASE("determinism: identical config and seed give identical bytes") {
    auto a = run("moduli --group D4 --cocycle trivial --genus 1 --seed 5 --workers 1");
    auto b = run("moduli --group D4 --cocycle trivial --genus 1 --seed 5 --workers 4");
    CHECK(a.out == b.out);
    auto c = run("verify --suite surface --group Z4 --cocycle cyclic:4:1 --seed 9");
    auto d = run("verify --suite surface --group Z4 --cocycle cyclic:4:1 --seed 9");
    CHECK(c.out == d.out);
}

TEST_CASE("moduli JSON round-trips through its schema") {
    auto r = run("moduli --group S3 --cocycle trivial --genus 1 --format json");
    auto j = json::parse(r.out);
    for (const char* key :
         {"group", "cocycle", "genus", "orbits", "cs_dimension", "flat_2bundle_classes"})
        CHECK(j.contains(key));
    for (const auto& o : j["orbits"])
        for (const char* key :
             {"representative", "orbit_size", "aut_order", "character", "contributes_section"})
            CHECK(o.contains(key));
    // re-serialization is stable
    CHECK(json::parse(j.dump()) == j);
}
