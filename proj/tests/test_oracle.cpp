#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "wkkit/oracle.hpp"

using namespace wkkit;

namespace {

Word w(const char* s) { return parse_word(s); }

std::vector<Word> words(std::initializer_list<const char*> xs) {
    std::vector<Word> out;
    for (const char* x : xs)
        out.push_back(w(x));
    return out;
}

} // namespace

TEST_CASE("word indexing") {
    const Alphabet v = fx::ab();
    CHECK(count_words(v, 0) == 1);
    CHECK(count_words(v, 12) == 8191);
    CHECK(count_words(fx::abc(), 2) == 13);
    CHECK(word_at(v, 3, 0) == w("a a a"));
    CHECK(word_at(v, 3, 6) == w("b b a"));
    CHECK(word_at(v, 0, 0).empty());
    const auto all = ref::words_of_length(fx::abc(), 3);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(word_at(fx::abc(), 3, i) == all[i]);
}

TEST_CASE("enumeration of the examples") {
    CHECK(enumerate_accepted(make_acceptor(fx::example1()), 8).words ==
          words({"a b", "a a b b", "a a a b b b", "a a a a b b b b"}));
    CHECK(enumerate_accepted(make_acceptor(fx::example2()), 9).words ==
          words({"a b c", "a a b b c c", "a a a b b b c c c"}));
    const auto empty = make_predicate(fx::ab(), [](const Word&) { return false; });
    CHECK(enumerate_accepted(empty, 5).words.empty());
}

TEST_CASE("enumeration order follows the declared alphabet") {
    const auto all = make_predicate(Alphabet({"b", "a"}), [](const Word& x) { return x.size() == 2; });
    CHECK(enumerate_accepted(all, 2).words == words({"b b", "b a", "a b", "a a"}));
}

TEST_CASE("parallel enumeration matches the sequential result") {
    const auto a = make_acceptor(fx::example2());
    const auto one = enumerate_accepted(a, 9);
    const auto four = enumerate_accepted(a, 9, OracleOptions{4});
    CHECK(one.words == four.words);
    const auto pal = make_predicate(fx::ab(), ref::is_palindrome);
    CHECK(enumerate_accepted(pal, 10, OracleOptions{3}).words == enumerate_accepted(pal, 10).words);
}

TEST_CASE("bounded equivalence") {
    const auto e1 = make_acceptor(fx::example1());
    const auto r = bounded_equiv(e1, e1, 10);
    REQUIRE(is_equal(r));
    CHECK(std::get<Equal>(r).words_checked == count_words(fx::ab(), 10));

    const auto a_then_b = make_predicate(fx::ab(), [](const Word& x) {
        const std::string s = ref::flat(x);
        const auto k = s.find_first_not_of('a');
        return !s.empty() && s[0] == 'a' && (k == std::string::npos || s.find('a', k) == std::string::npos);
    });
    const auto c = bounded_equiv(e1, a_then_b, 4);
    REQUIRE(std::holds_alternative<Counterexample>(c));
    const auto& ce = std::get<Counterexample>(c);
    CHECK(ce.word == w("a"));
    CHECK(ce.left == Verdict::Reject);
    CHECK(ce.right == Verdict::Accept);
    CHECK(describe(c).rfind("counterexample a", 0) == 0);

    CHECK_THROWS_AS(bounded_equiv(e1, make_acceptor(fx::example2()), 3), std::invalid_argument);
    // Same set, different order is fine.
    CHECK(is_equal(bounded_equiv(make_predicate(Alphabet({"b", "a"}), ref::is_anbn), make_predicate(fx::ab(), ref::is_anbn), 6)));
}

TEST_CASE("resource bounds surface as inconclusive") {
    Acceptor flaky{AcceptorKind::Predicate, fx::ab(), [](const Word& x) {
                       return x == parse_word("b a") ? Verdict::ResourceBound : Verdict::Reject;
                   }};
    const auto r = bounded_equiv(flaky, make_predicate(fx::ab(), [](const Word&) { return false; }), 4);
    REQUIRE(std::holds_alternative<Inconclusive>(r));
    CHECK(std::get<Inconclusive>(r).word == w("b a"));
    CHECK(describe(r).rfind("inconclusive b a", 0) == 0);
    const auto e = enumerate_accepted(flaky, 4);
    CHECK(e.inconclusive_at == w("b a"));

    // A tiny CSG budget makes the restricted acceptor inconclusive, not negative.
    const auto l = std::make_shared<const RestrictionLanguage>(RestrictionLanguage::context_sensitive(fx::csg_anbncn()));
    const auto m = stateless_identity(l, fx::abc()).machine;
    CHECK(make_acceptor(m, MembershipOptions{1}).accepts(w("a a b b c c")) == Verdict::ResourceBound);
    CHECK(make_acceptor(m).accepts(w("a a b b c c")) == Verdict::Accept);
}

TEST_CASE("finiteness_check") {
    const auto core = fx::example1().core();
    auto with = [&](std::vector<Word> ws) {
        return RestrictedWKAutomaton(
            core, std::make_shared<const RestrictionLanguage>(RestrictionLanguage::finite({Alphabet({"a"}), std::move(ws)})));
    };
    const auto r = finiteness_check(with({w("a a"), w("a a a")}));
    CHECK(r.candidate_lengths == std::set<std::size_t>{2, 3});
    CHECK(r.accepted == words({"a b"}));
    CHECK(r.max_accepted_length == 2);

    const auto none = finiteness_check(with({}));
    CHECK(none.accepted.empty());
    CHECK(none.max_accepted_length == 0);

    const auto lambda = finiteness_check(with({Word{}}));
    CHECK(lambda.accepted.empty());

    CHECK_THROWS_AS(finiteness_check(fx::example1()), UnsupportedRestrictionClass);
}

TEST_CASE("property: finiteness_check returns the complete language") {
    std::size_t total = 0;
    for (const auto& [name, m] : fx::finite_fixtures()) {
        CAPTURE(name);
        const auto r = finiteness_check(m);
        std::size_t longest = 0;
        for (const auto& v : m.restriction().finite_words()->words)
            longest = std::max(longest, v.size());
        std::vector<Word> brute;
        for (const auto& u : ref::words_up_to(m.core().alphabet(), longest + 3))
            if (ref::restricted_search_accepts(
                    m.core(), [&](const Word& v) { return m.restriction().contains(v); }, u))
                brute.push_back(u);
        CHECK(r.accepted == brute);
        for (const auto& u : r.accepted)
            CHECK(r.candidate_lengths.count(u.size()));
        total += r.accepted.size();
    }
    CHECK(total >= 3);
}

TEST_CASE("small DFA search") {
    const auto ab_star = make_acceptor(fx::dfa_ab_star());
    // (ab)* needs three states once the sink is counted.
    CHECK_FALSE(find_consistent_dfa(ab_star, 10, 2).has_value());
    const auto d = find_consistent_dfa(ab_star, 10, 3);
    REQUIRE(d.has_value());
    CHECK(is_equal(bounded_equiv(make_acceptor(*d), ab_star, 10)));

    const auto a_star_b = find_consistent_dfa(make_acceptor(fx::dfa_a_star_b()), 10, 4);
    REQUIRE(a_star_b.has_value());
    CHECK(a_star_b->states().size() == 3);

    const auto e1 = make_acceptor(fx::example1());
    CHECK_FALSE(find_consistent_dfa(e1, 12, 6).has_value());
    // On short words a^n b^n still looks regular.
    const auto shallow = find_consistent_dfa(e1, 4, 6);
    REQUIRE(shallow.has_value());
    CHECK(is_equal(bounded_equiv(make_acceptor(*shallow), e1, 4)));
}

TEST_CASE("Example 2 matches a^n b^n c^n to length 12") {
    const auto r = bounded_equiv(make_acceptor(fx::example2()), make_predicate(fx::abc(), ref::is_anbncn), 12);
    INFO(describe(r));
    CHECK(is_equal(r));
}
