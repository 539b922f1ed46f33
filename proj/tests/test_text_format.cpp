#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "wkkit/text_format.hpp"

#include <filesystem>
#include <functional>

using namespace wkkit;

namespace {

const RestrictedWKAutomaton& restricted(const SourceDocument& d) {
    REQUIRE(d.kind == DocumentKind::RestrictedWk);
    return std::get<RestrictedWKAutomaton>(d.machine);
}

void expect_parse_error(std::string_view text, std::size_t line,
                        const std::function<void(const ParseError&)>& also = [](const ParseError&) {}) {
    try {
        parse_document(text);
        FAIL("no ParseError for:\n" << text);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        also(e);
    }
}

} // namespace

TEST_CASE("fixture files match the in-code machines") {
    const auto d1 = load_document(fx::fixture_path("example1.rwk"));
    const auto& e1 = restricted(d1);
    CHECK(e1.core() == fx::example1().core());
    CHECK(e1.core().states().size() == 2);
    CHECK(e1.core().transitions().size() == 3);
    CHECK(e1.restriction().kind() == RestrictionLanguage::Kind::UnaryRegular);

    const auto d2 = load_document(fx::fixture_path("example2.rwk"));
    const auto& e2 = restricted(d2);
    CHECK(e2.core() == fx::example2().core());
    CHECK(e2.restriction().kind() == RestrictionLanguage::Kind::ContextFree);
    for (const auto& u : ref::words_up_to(fx::abc(), 6))
        CHECK(restricted_accepts(e2, u) == restricted_accepts(fx::example2(), u));
}

TEST_CASE("header errors") {
    expect_parse_error("", 1, [](const ParseError& e) {
        CHECK(e.column() == 1);
        CHECK(e.message() == "missing kind header");
    });
    expect_parse_error("# only a comment\n\n", 1);
    CHECK_THROWS_AS(parse_document("kind: turing\n"), UnknownKind);
}

TEST_CASE("undeclared states are reported at their line") {
    const std::string text = "kind: wk\n"
                             "alphabet: a b\n"
                             "rho: a:a b:b\n"
                             "states: q0 qf\n"
                             "start: q0\n"
                             "final: qf\n"
                             "trans: q0 a / a -> qz\n";
    CHECK_THROWS_AS(parse_document(text), UndeclaredSymbol);
    expect_parse_error(text, 7, [](const ParseError& e) {
        CHECK(std::string(e.what()).rfind("7:", 0) == 0);
        CHECK(e.message().find("qz") != std::string::npos);
    });
}

TEST_CASE("malformed lines") {
    // Missing arrow.
    expect_parse_error("kind: dfa\nalphabet: a\nstates: p\nstart: p\nstep: p a p\n", 5);
    // Unknown key for the kind.
    expect_parse_error("kind: finite\nalphabet: a\nrule: S -> a\n", 3);
    // Indented text outside a restriction block.
    expect_parse_error("kind: finite\nalphabet: a\n  word: a\n", 3);
    // Reserved tokens are not names.
    expect_parse_error("kind: dfa\nalphabet: a -\nstates: p\nstart: p\n", 2);
    // Restriction file of the wrong class.
    const std::string text = "kind: restricted-wk\nalphabet: a\nrho: a:a\nstates: q\nstart: q\nfinal: q\n"
                             "restriction: regular short.fin\n";
    CHECK_THROWS_AS(parse_document(text, fx::fixture_path("")), ParseError);
}

TEST_CASE("comments only start at a token boundary") {
    const std::string text = "kind: wk   # trailing comment\n"
                             "alphabet: a\n"
                             "rho: a:a\n"
                             "states: q q#1\n"
                             "start: q\n"
                             "final: q#1\n"
                             "trans: q a / - -> q#1 # moves up\n";
    const auto d = parse_document(text);
    const auto& m = std::get<WKAutomaton>(d.machine);
    CHECK(m.states() == std::vector<StateId>{"q", "q#1"});
    CHECK(wk_accepts(m, parse_word("a")) == false);
    CHECK(m.transitions().at(0).to == "q#1");
}

TEST_CASE("restrictions can live in another file") {
    const auto d = load_document(fx::fixture_path("example1_ref.rwk"));
    const auto& m = restricted(d);
    CHECK(m.restriction().kind() == RestrictionLanguage::Kind::Finite);
    CHECK(restricted_accepts(m, parse_word("a b")));
    CHECK_FALSE(restricted_accepts(m, parse_word("a a b b")));
    // Rendering inlines the referenced language.
    const std::string text = render(d);
    CHECK(text.find("restriction: finite inline") != std::string::npos);
    CHECK(render(parse_document(text)) == text);
}

TEST_CASE("round trip over every fixture file") {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fx::fixture_path(""))) {
        CAPTURE(entry.path().string());
        const auto d = load_document(entry.path());
        const std::string once = render(d);
        const auto again = parse_document(once);
        CHECK(again.kind == d.kind);
        CHECK(render(again) == once);
        CHECK(kind_of(again.machine) == d.kind);
        ++seen;
    }
    CHECK(seen >= 8);
}

TEST_CASE("round trip of generated machines") {
    for (const auto& m : fx::random_dwks(15, 31)) {
        const auto back = std::get<WKAutomaton>(parse_document(render(Machine{m})).machine);
        CHECK(back == m);
    }
    for (const auto& p : fx::random_pdas(15, 8)) {
        const auto back = std::get<Pda>(parse_document(render(Machine{p})).machine);
        CHECK(back == p);
    }
    for (const auto& g : fx::cfg_fixtures())
        CHECK(std::get<Cfg>(parse_document(render(Machine{g})).machine) == g);
    const auto csg = fx::csg_a2n_bn();
    CHECK(std::get<Csg>(parse_document(render(Machine{csg})).machine) == csg);
    const auto pda = to_pda(to_one_limited(fx::example1()).machine).machine;
    CHECK(std::get<Pda>(parse_document(render(Machine{pda})).machine) == pda);
}
