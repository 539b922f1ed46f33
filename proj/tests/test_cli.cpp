#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include "wkkit/cli.hpp"
#include "wkkit/text_format.hpp"

#include <filesystem>
#include <sstream>

using namespace wkkit;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fix(const char* name) { return fx::fixture_path(name).string(); }

} // namespace

TEST_CASE("run") {
    auto r = cli({"run", fix("example1.rwk"), "--word", "aabb"});
    CHECK(r.code == 0);
    CHECK(r.out == "accept\n");
    r = cli({"run", fix("example1.rwk"), "--word", "a a b"});
    CHECK(r.code == 1);
    CHECK(r.out == "reject\n");
    r = cli({"run", fix("example1.rwk"), "--word", "-"});
    CHECK(r.code == 1);
    CHECK(cli({"run", fix("sigma.wk"), "--word", "-"}).code == 0);
    CHECK(cli({"run", fix("example1.pda"), "--word", "a b"}).out == "accept\n");
    CHECK(cli({"run", fix("ab_star.dfa"), "--word", "abab"}).code == 0);
    CHECK(cli({"run", fix("anbncn.csg"), "--word", "aabbcc"}).code == 0);
}

TEST_CASE("resource bounds and errors exit with 2") {
    auto r = cli({"--cs-budget", "1", "run", fix("anbncn.csg"), "--word", "aabbcc"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    r = cli({"run", fix("nope.rwk"), "--word", "a"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    CHECK(cli({"run", fix("example1.rwk"), "--word", "z"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"convert", fix("example1.rwk"), "--to", "nfa"}).code == 2);
}

TEST_CASE("classify") {
    const auto r = cli({"classify", fix("example1.rwk")});
    CHECK(r.code == 0);
    CHECK(r.out == "stateless: false\n"
                   "all-final: false\n"
                   "simple: false\n"
                   "1-limited: false\n"
                   "deterministic: true\n"
                   "strongly-deterministic: false\n");
}

TEST_CASE("enum and equiv") {
    auto r = cli({"enum", fix("example1.rwk"), "--max-len", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "a b\na a b b\na a a b b b\n");
    r = cli({"equiv", fix("example1.rwk"), fix("example1.pda"), "--max-len", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "equal (checked 8191 words)\n");
    r = cli({"equiv", fix("example1.rwk"), fix("ab_star.dfa"), "--max-len", "6"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("counterexample -", 0) == 0);
    r = cli({"--cs-budget", "1", "equiv", fix("anbncn.csg"), fix("anbncn.csg"), "--max-len", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("inconclusive", 0) == 0);
    CHECK(cli({"--jobs", "3", "enum", fix("example2.rwk"), "--max-len", "6"}).out == "a b c\na a b b c c\n");
}

TEST_CASE("check-weak-det") {
    const auto r = cli({"check-weak-det", fix("example1.rwk"), "--max-len", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "weakly-deterministic\n");
}

TEST_CASE("convert output parses back and keeps the language") {
    const auto dir = std::filesystem::temp_directory_path() / "wkkit_cli_test";
    std::filesystem::create_directories(dir);
    for (const std::string target : {"1lim", "dwk", "pda"}) {
        CAPTURE(target);
        const auto r = cli({"convert", fix("example1.rwk"), "--to", target});
        REQUIRE(r.code == 0);
        const auto doc = parse_document(r.out);
        const auto path = (dir / (target + ".txt")).string();
        REQUIRE(cli({"convert", fix("example1.rwk"), "--to", target, "-o", path}).code == 0);
        CHECK(render(load_document(path)) == render(doc));
        const auto eq = cli({"equiv", fix("example1.rwk"), path, "--max-len", "8"});
        CHECK(eq.out == "equal (checked 511 words)\n");
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("convert --to restricted lifts plain machines") {
    for (const char* name : {"sigma.wk", "ab_star.dfa"}) {
        CAPTURE(std::string(name));
        const auto r = cli({"convert", fix(name), "--to", "restricted"});
        REQUIRE(r.code == 0);
        CHECK(parse_document(r.out).kind == DocumentKind::RestrictedWk);
        const auto path = (std::filesystem::temp_directory_path() / "wkkit_lifted.rwk").string();
        REQUIRE(cli({"convert", fix(name), "--to", "restricted", "-o", path}).code == 0);
        CHECK(cli({"equiv", fix(name), path, "--max-len", "8"}).code == 0);
        std::filesystem::remove(path);
    }
    CHECK(cli({"convert", fix("example1.rwk"), "--to", "restricted"}).code == 2);
}
