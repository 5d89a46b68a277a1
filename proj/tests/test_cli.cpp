#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "gf2g/cli.hpp"
#include "gf2g/series.hpp"

using namespace gf2g;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return (fs::path(GF2G_FIXTURE_DIR) / name).string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("membership") {
    auto r = run({"member", fx("ex21.g2"), "--word", "abbcc"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(run({"member", fx("ex21.g2"), "--word", "abc"}).out == "0\n");
    CHECK(run({"member", fx("anbn.g2"), "--word", "-"}).out == "1\n");
    CHECK(run({"member", fx("ex21.g2"), "--word", "abd"}).code == 1);
}

TEST_CASE("solve with oracle comparison") {
    const auto r = run({"solve", fx("anbn.g2"), "--letters", "ab", "--box", "12,12", "--compare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle: match") != std::string::npos);
}

TEST_CASE("irreducible") {
    auto r = run({"irreducible", "1+abc", "--max-deg", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("irreducible", 0) == 0);
    r = run({"irreducible", "1+a+b+ab", "--max-deg", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.find("(1 + a)") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"validate", fx("illformed.g2")}).code == 2);
    CHECK(run({"validate", fx("ex22.g2")}).code == 0);
    CHECK(run({"validate", fx("no_such_file.g2")}).code == 1);
    CHECK(run({"enum", fx("ex22.g2"), "--n", "-3"}).code == 1);
    CHECK(run({"recurrence", "--family", "power-diagonal", "--box", "64", "--d-max", "4", "--deg-max", "8",
               "--window", "16:64"})
              .code == 2);
    CHECK(run({"recurrence", "--family", "anbn"}).code == 0);
    CHECK(run({"ambiguity-report", "--n", "6"}).code == 0);
    CHECK(run({"quotient", fx("eps.g2"), "--poly", "1+ab", "--verify"}).code == 0);
    CHECK(run({"series", fx("anbn_ba.g2"), "--letters", "ab"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumeration output") {
    const auto r = run({"enum", fx("ex22.g2"), "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "a\naa\naaaa\naaaaaaaa\n");
}

TEST_CASE("series text and json agree") {
    const auto text = run({"series", fx("anbn.g2"), "--letters", "ab", "--box", "3,3"});
    CHECK(text.out == "1 + a b + a^2 b^2 + a^3 b^3 (box: a≤3, b≤3)\n");
    const auto j = run({"--json", "series", fx("anbn.g2"), "--letters", "ab", "--box", "3,3"});
    const auto f = series_from_json(j.out);
    CHECK(format_series(f) + "\n" == text.out);
    CHECK(run({"series", fx("anbn.g2"), "--letters", "ab", "--box", "3,3", "--enumerate"}).out == text.out);
}

TEST_CASE("deterministic output") {
    const std::vector<std::vector<std::string>> calls = {
        {"solve", fx("ex21.g2"), "--letters", "abc", "--box", "4"},
        {"--json", "intersect", fx("anbn.g2"), "--dfa", "chain:ab"},
        {"blocks", "--random", "5", "--summands", "3", "--bound", "6"},
        {"--json", "fixtures"},
    };
    for (const auto& c : calls) {
        const auto x = run(c), y = run(c);
        CHECK(x.out == y.out);
        CHECK(x.code == y.code);
    }
}

TEST_CASE("fixture suite passes") {
    const auto r = run({"--json", "fixtures"});
    CHECK(r.code == 0);
    const auto arr = nlohmann::json::parse(r.out);
    CHECK(arr.size() == 10);
    for (const auto& item : arr) {
        CHECK(item.contains("name"));
        CHECK(item["status"] == "pass");
    }
}

TEST_CASE("missing fixture is reported") {
    const auto dir = fs::temp_directory_path() / "gf2g_fixture_copy";
    fs::remove_all(dir);
    fs::copy(GF2G_FIXTURE_DIR, dir);
    fs::remove(dir / "ex22.g2");
    const auto r = run({"fixtures", "--dir", dir.string()});
    CHECK(r.code == 2);
    CHECK(r.out.find("MISSING powers_of_two") != std::string::npos);
    CHECK(r.out.find("PASS xor_equalities") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("blocks from a file") {
    const auto r = run({"--json", "blocks", fx("blocks.json")});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["consistent"] == true);
}

TEST_CASE("system dump is valid json") {
    const auto r = run({"solve", fx("anbn.g2"), "--letters", "ab", "--box", "4", "--dump-system"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["unknowns"].size() >= 1);
}

}
