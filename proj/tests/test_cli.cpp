#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kCubic = std::string(DATA_DIR) + "/cubic_mu_half.json";
const std::string kProduct = std::string(DATA_DIR) + "/product_7_10.json";

using Json = nlohmann::json;

} // namespace

TEST_CASE("pack: cubic ledger balances at epsilon 0") {
    auto r = run("pack " + kCubic + " --weights 1/3,1/6 --epsilon 0");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["residual"] == "0");
    CHECK(j["manifold_volume"] == "3/8");
    CHECK(j["piece_volumes"][0] == "1/3");
    CHECK(j["piece_volumes"][1] == "1/24");
    CHECK(j["gamma"]["gamma"][0] == "5/6");
    CHECK(j["gamma"]["gamma"][1] == "-1/3");
}

TEST_CASE("pack: shrinkage leaves the documented residual") {
    auto r = run("pack " + kCubic + " --weights 1/3,1/6 --epsilon 1/7");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["residual"] == "1/28");
}

TEST_CASE("pack: weights violating the cohomology identity exit 1") {
    auto r = run("pack " + kCubic + " --weights 1/2,1/6 --epsilon 0");
    CHECK(r.exit_code == 1);
}

TEST_CASE("pack: malformed weights exit 2") {
    auto r = run("pack " + kCubic + " --weights banana,1/6");
    CHECK(r.exit_code == 2);
    auto s = run("pack /nonexistent.json --weights 1,1");
    CHECK(s.exit_code == 2);
}

TEST_CASE("decompose: product manifold round trip") {
    auto r = run("decompose " + kProduct + " --q 10");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["barycentric"]["grid_denominator"] == 10);
    // omega = (1, 7/10) lies on the grid
    CHECK(j["barycentric"]["weights"][0] == "1");
    CHECK(j["polarization"]["weights"].size() ==
          j["polarization"]["classes"].size());
}

TEST_CASE("flow: reference point") {
    auto r = run("flow --a 1/3 --gamma 1/2 --A 3 --delta 1/10 "
                 "--point 1/2,0,1/2,0 --t 0");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["image"][0].get<double>() == doctest::Approx(0.375));
    CHECK(j["image"][2].get<double>() == doctest::Approx(1.0 / 6.0));
    CHECK(j["basin"]["analytic"] == j["basin"]["dynamic"]);
}

TEST_CASE("flow: point outside the chart exits 1") {
    auto r = run("flow --a 1 --gamma 0 --A 1 --point 0,0,2,0");
    CHECK(r.exit_code == 1);  // domain invariant, not a parse problem
}

TEST_CASE("toric: cubic mode prints the exact report") {
    auto r = run("toric --mode cubic --mu 1/2");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["total_volume"] == "1/2");
    CHECK(j["identity_holds"] == true);
    CHECK(j["blowup_polytope"]["area"] == "3/8");

    auto bad = run("toric --mode cubic --mu 2/3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("bubble: the polarized cubic admits no surviving splitting") {
    auto r = run("bubble --target 3,2 --max-parts 3 --filters");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 5);
    for (const auto& d : j["decompositions"])
        CHECK(d["global_verdict"] != "SURVIVES");
}

TEST_CASE("verify: invariant suite passes on a quick run") {
    auto r = run("verify --samples 200");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("byte-identical reruns") {
    const std::string cmds[] = {
        "pack " + kCubic + " --weights 1/3,1/6 --epsilon 1/100",
        "decompose " + kProduct + " --q 7",
        "toric --mode product --mu 7/10",
        "bubble --target 3,2 --max-parts 4 --filters",
        "verify --samples 100",
    };
    for (const auto& c : cmds) {
        auto first = run(c);
        auto second = run(c);
        REQUIRE(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("missing subcommand exits 2") {
    auto r = run("");
    CHECK(r.exit_code == 2);
}
