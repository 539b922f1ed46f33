#include "fixtures.hpp"

#ifndef WKKIT_FIXTURES_DIR
#define WKKIT_FIXTURES_DIR "fixtures"
#endif

namespace fx {

std::filesystem::path fixture_path(const std::string& name) { return std::filesystem::path(WKKIT_FIXTURES_DIR) / name; }

Alphabet ab() { return Alphabet({"a", "b"}); }
Alphabet abc() { return Alphabet({"a", "b", "c"}); }

RestrictedWKAutomaton example1() {
    WKAutomaton core(ab(), ComplementarityRelation({{"a", "a"}, {"b", "a"}}), {"q0", "qf"}, "q0", {"qf"},
                     {{"q0", {"a"}, {}, "q0"}, {"q0", {"b"}, {"a", "a"}, "qf"}, {"qf", {"b"}, {"a", "a"}, "qf"}});
    return RestrictedWKAutomaton(std::move(core),
                                 std::make_shared<const RestrictionLanguage>(RestrictionLanguage::unary_regular(dfa_a_plus())));
}

RestrictedWKAutomaton example2() {
    WKAutomaton core(abc(), ComplementarityRelation({{"a", "a"}, {"b", "a"}, {"c", "b"}}), {"q0", "q1", "qf"}, "q0",
                     {"qf"},
                     {{"q0", {"a"}, {"a", "a"}, "q0"},
                      {"q0", {"b"}, {"b"}, "q1"},
                      {"q1", {"b"}, {"b"}, "q1"},
                      {"q1", {"c"}, {}, "qf"},
                      {"qf", {"c"}, {}, "qf"}});
    Cfg l(Alphabet({"S"}), ab(), "S", {{"S", {"a", "a", "S", "b"}}, {"S", {"a", "a", "b"}}});
    return RestrictedWKAutomaton(std::move(core),
                                 std::make_shared<const RestrictionLanguage>(RestrictionLanguage::context_free(l)));
}

Dfa dfa_ab_star() {
    return Dfa(ab(), {"p0", "p1"}, "p0", {"p0"}, {{"p0", "a", "p1"}, {"p1", "b", "p0"}});
}

Dfa dfa_a_star_b() {
    return Dfa(ab(), {"p0", "p1"}, "p0", {"p1"}, {{"p0", "a", "p0"}, {"p0", "b", "p1"}});
}

Dfa dfa_sigma_star() { return Dfa::universal(ab()); }
Dfa dfa_empty() { return Dfa::empty_language(ab()); }

Dfa dfa_a_plus() {
    return Dfa(Alphabet({"a"}), {"s0", "s1"}, "s0", {"s1"}, {{"s0", "a", "s1"}, {"s1", "a", "s1"}});
}

Cfg cfg_anbn() { return Cfg(Alphabet({"S"}), ab(), "S", {{"S", {"a", "S", "b"}}, {"S", {"a", "b"}}}); }

Cfg cfg_palindromes() {
    return Cfg(Alphabet({"S"}), ab(), "S",
               {{"S", {"a", "S", "a"}}, {"S", {"b", "S", "b"}}, {"S", {"a"}}, {"S", {"b"}}, {"S", {}}});
}

Cfg cfg_dyck() { return Cfg(Alphabet({"S"}), ab(), "S", {{"S", {"a", "S", "b", "S"}}, {"S", {}}}); }

Cfg cfg_equal_count() {
    return Cfg(Alphabet({"S"}), ab(), "S", {{"S", {"a", "S", "b", "S"}}, {"S", {"b", "S", "a", "S"}}, {"S", {}}});
}

// E -> E + T | T ; T -> x | ( E ), with unit rules and left recursion.
Cfg cfg_expressions() {
    return Cfg(Alphabet({"E", "T"}), Alphabet({"x", "+", "(", ")"}), "E",
               {{"E", {"E", "+", "T"}}, {"E", {"T"}}, {"T", {"x"}}, {"T", {"(", "E", ")"}}});
}

std::vector<Cfg> cfg_fixtures() {
    return {cfg_anbn(), cfg_palindromes(), cfg_dyck(), cfg_equal_count(), cfg_expressions()};
}

Csg csg_anbncn() {
    return Csg(Alphabet({"S", "B"}), abc(), "S",
               {{{"S"}, {"a", "b", "c"}},
                {{"S"}, {"a", "S", "B", "c"}},
                {{"c", "B"}, {"B", "c"}},
                {{"b", "B"}, {"b", "b"}}});
}

Csg csg_a2n_bn() {
    return Csg(Alphabet({"S", "B"}), ab(), "S",
               {{{"S"}, {"a", "a", "b"}}, {{"S"}, {"a", "a", "S", "B"}}, {{"b", "B"}, {"b", "b"}}});
}

namespace {

std::shared_ptr<const RestrictionLanguage> finite(const Alphabet& v, std::vector<Word> words) {
    return std::make_shared<const RestrictionLanguage>(RestrictionLanguage::finite({v, std::move(words)}));
}

} // namespace

std::vector<NamedFinite> finite_fixtures() {
    const WKAutomaton e1 = example1().core();
    const WKAutomaton copy(ab(), ComplementarityRelation::identity(ab()), {"q0"}, "q0", {"q0"},
                           {{"q0", {"a"}, {"a"}, "q0"}, {"q0", {"b"}, {"b"}, "q0"}});
    const WKAutomaton swap(ab(), ComplementarityRelation({{"a", "b"}, {"b", "a"}, {"a", "a"}}), {"q0", "q1"}, "q0",
                           {"q1"}, {{"q0", {"a", "b"}, {"b"}, "q0"}, {"q0", {"b"}, {"a", "a"}, "q1"}});
    std::vector<NamedFinite> out;
    out.push_back({"anbn core, L={aa,aaa}", RestrictedWKAutomaton(e1, finite(Alphabet({"a"}), {{"a", "a"}, {"a", "a", "a"}}))});
    out.push_back({"anbn core, L=empty", RestrictedWKAutomaton(e1, finite(Alphabet({"a"}), {}))});
    out.push_back({"anbn core, L={lambda}", RestrictedWKAutomaton(e1, finite(Alphabet({"a"}), {Word{}}))});
    out.push_back({"copy, L={ab,ba,abba}",
                   RestrictedWKAutomaton(copy, finite(ab(), {{"a", "b"}, {"b", "a"}, {"a", "b", "b", "a"}}))});
    out.push_back({"multi-valued rho, L={baa,abaa,bbaa}",
                   RestrictedWKAutomaton(swap, finite(ab(), {{"b", "a", "a"}, {"a", "b", "a", "a"}, {"b", "b", "a", "a"}}))});
    return out;
}

namespace {

std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word random_word(std::mt19937& rng, const Alphabet& v, std::size_t max_len) {
    Word w(pick(rng, 0, max_len));
    for (auto& x : w)
        x = v.symbols()[pick(rng, 0, v.size() - 1)];
    return w;
}

std::vector<ComplementarityRelation::Pair> random_rho(std::mt19937& rng) {
    static const std::vector<std::vector<ComplementarityRelation::Pair>> options{
        {{"a", "a"}, {"b", "b"}},
        {{"a", "a"}, {"b", "a"}},
        {{"a", "b"}, {"b", "a"}},
        {{"a", "a"}, {"a", "b"}, {"b", "b"}},
        {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}},
    };
    return options[pick(rng, 0, options.size() - 1)];
}

} // namespace

WKAutomaton random_dwk(std::mt19937& rng, std::size_t max_states, std::size_t max_rules) {
    const Alphabet v = ab();
    const std::size_t n = pick(rng, 1, max_states);
    std::vector<StateId> states;
    for (std::size_t i = 0; i < n; ++i)
        states.push_back("q" + std::to_string(i));
    std::vector<StateId> finals;
    for (const auto& q : states)
        if (pick(rng, 0, 1))
            finals.push_back(q);
    const auto rho = random_rho(rng);

    std::vector<Transition> rules;
    const std::size_t target = pick(rng, 1, max_rules);
    for (std::size_t attempt = 0; attempt < 60 && rules.size() < target; ++attempt) {
        Transition t{states[pick(rng, 0, n - 1)], random_word(rng, v, 2), random_word(rng, v, 2),
                     states[pick(rng, 0, n - 1)]};
        // λ/λ rules stay rare; they block every other rule at their state.
        if (t.upper.empty() && t.lower.empty() && pick(rng, 0, 3) != 0)
            continue;
        if (std::find(rules.begin(), rules.end(), t) != rules.end())
            continue;
        rules.push_back(t);
        if (!WKAutomaton(v, ComplementarityRelation(rho), states, states[0], finals, rules).deterministic())
            rules.pop_back();
    }
    return WKAutomaton(v, ComplementarityRelation(rho), states, states[0], finals, rules);
}

std::vector<WKAutomaton> random_dwks(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<WKAutomaton> out;
    while (out.size() < count)
        out.push_back(random_dwk(rng));
    return out;
}

Dfa random_dfa(std::mt19937& rng, const Alphabet& v, std::size_t max_states) {
    const std::size_t n = pick(rng, 1, max_states);
    std::vector<StateId> states;
    for (std::size_t i = 0; i < n; ++i)
        states.push_back("p" + std::to_string(i));
    std::vector<StateId> finals;
    for (const auto& p : states)
        if (pick(rng, 0, 2) != 0)
            finals.push_back(p);
    std::vector<DfaStep> steps;
    for (const auto& p : states)
        for (const auto& x : v.symbols())
            if (pick(rng, 0, 5) != 0)
                steps.push_back({p, x, states[pick(rng, 0, n - 1)]});
    return Dfa(v, states, states[0], finals, steps);
}

std::vector<RestrictedWKAutomaton> regular_fixtures(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<RestrictedWKAutomaton> out;
    out.push_back(RestrictedWKAutomaton(
        example1().core(), std::make_shared<const RestrictionLanguage>(RestrictionLanguage::regular(dfa_a_plus()))));
    out.push_back(RestrictedWKAutomaton(
        example1().core(), std::make_shared<const RestrictionLanguage>(RestrictionLanguage::regular(dfa_sigma_star()))));
    while (out.size() < count) {
        WKAutomaton core = random_dwk(rng);
        out.push_back(RestrictedWKAutomaton(
            std::move(core), std::make_shared<const RestrictionLanguage>(RestrictionLanguage::regular(random_dfa(rng, ab())))));
    }
    return out;
}

Pda random_pda(std::mt19937& rng) {
    const Alphabet input = ab();
    const Alphabet stack({"A", "B", "$"});
    const std::size_t n = pick(rng, 1, 3);
    std::vector<StateId> states;
    for (std::size_t i = 0; i < n; ++i)
        states.push_back("r" + std::to_string(i));
    std::vector<PdaRule> rules;
    const std::size_t count = pick(rng, 2, 8);
    for (std::size_t i = 0; i < count; ++i) {
        PdaRule r;
        r.from = states[pick(rng, 0, n - 1)];
        r.to = states[pick(rng, 0, n - 1)];
        r.top = stack.symbols()[pick(rng, 0, 2)];
        if (pick(rng, 0, 2) != 0) {
            r.input = input.symbols()[pick(rng, 0, 1)];
            // Reading rules may pop, replace the top, or push one symbol.
            const std::size_t len = pick(rng, 0, 2);
            if (len >= 1)
                r.push.push_back(len == 2 ? r.top : stack.symbols()[pick(rng, 0, 2)]);
            if (len == 2)
                r.push.push_back(stack.symbols()[pick(rng, 0, 1)]);
        }
        if (std::find(rules.begin(), rules.end(), r) == rules.end())
            rules.push_back(r);
    }
    return Pda(input, stack, states, states[0], "$", rules);
}

std::vector<Pda> random_pdas(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Pda> out;
    while (out.size() < count)
        out.push_back(random_pda(rng));
    return out;
}

} // namespace fx
