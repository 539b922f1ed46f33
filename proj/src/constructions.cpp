#include "wkkit/constructions.hpp"

#include "wkkit/naming.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wkkit {

namespace {

template <class M>
ConstructionReport report_for(std::size_t input_states, const M& out) {
    ConstructionReport r;
    r.input_states = input_states;
    r.output_states = out.states().size();
    if constexpr (std::is_same_v<M, Pda>)
        r.output_transitions = out.rules().size();
    else
        r.output_transitions = out.transitions().size();
    return r;
}

void require_deterministic(const WKAutomaton& m, const char* what) {
    if (!m.deterministic())
        throw NonDeterministicMachine(std::string(what) + " requires a deterministic machine");
}

// λ/λ contraction result: rules without λ/λ, and the adjusted final set.
struct Contracted {
    std::vector<Transition> rules;
    std::vector<StateId> finals;
    std::vector<std::string> notes;
};

Contracted contract_lambda_rules(const WKAutomaton& m) {
    auto lambda_target = [&](const StateId& q) -> const StateId* {
        for (std::size_t i : m.outgoing(q)) {
            const auto& t = m.transitions()[i];
            if (t.upper.empty() && t.lower.empty())
                return &t.to;
        }
        return nullptr;
    };

    Contracted c;
    for (const auto& q : m.states()) {
        bool final = m.is_final(q);
        if (!lambda_target(q)) {
            for (std::size_t i : m.outgoing(q))
                c.rules.push_back(m.transitions()[i]);
            if (final)
                c.finals.push_back(q);
            continue;
        }
        // Deterministic: a state with a λ/λ rule has no other rule.
        std::set<StateId> chain{q};
        StateId cur = q;
        bool cycle = false;
        while (const StateId* next = lambda_target(cur)) {
            cur = *next;
            final = final || m.is_final(cur);
            if (!chain.insert(cur).second) {
                cycle = true;
                break;
            }
        }
        if (cycle) {
            c.notes.push_back("state " + q + " enters a λ/λ cycle; its rules are dropped");
        } else {
            for (std::size_t i : m.outgoing(cur)) {
                Transition t = m.transitions()[i];
                t.from = q;
                c.rules.push_back(std::move(t));
            }
            c.notes.push_back("contracted λ/λ chain " + q + " => " + cur);
        }
        if (final)
            c.finals.push_back(q);
    }
    return c;
}

class OneLimitedBuilder {
public:
    OneLimitedBuilder(std::set<std::string> taken) : taken_(std::move(taken)) {}

    void expand_state(const StateId& q, const std::vector<const Transition*>& rules) {
        std::vector<Item> items;
        for (const auto* t : rules)
            items.push_back({t, 0, 0});
        if (!items.empty())
            expand(q, q, items);
    }

    std::vector<Transition> rules;
    std::vector<StateId> fresh_states;

private:
    struct Item {
        const Transition* rule;
        std::size_t upper_read;
        std::size_t lower_read;

        bool upper_left() const { return upper_read < rule->upper.size(); }
        bool lower_left() const { return lower_read < rule->lower.size(); }
    };

    void expand(const StateId& origin, const StateId& node, std::vector<Item>& items) {
        bool read_upper = true;
        for (const auto& it : items)
            read_upper = read_upper && it.upper_left();
        if (!read_upper)
            for (const auto& it : items)
                if (!it.lower_left())
                    throw NonDeterministicMachine("rules from " + origin + " are prefix comparable");

        std::vector<std::pair<Symbol, std::vector<Item>>> groups;
        for (auto it : items) {
            const Symbol& x = read_upper ? it.rule->upper[it.upper_read] : it.rule->lower[it.lower_read];
            (read_upper ? it.upper_read : it.lower_read) += 1;
            auto g = std::find_if(groups.begin(), groups.end(), [&](const auto& p) { return p.first == x; });
            if (g == groups.end())
                groups.push_back({x, {it}});
            else
                g->second.push_back(it);
        }
        for (auto& [x, group] : groups) {
            Word up = read_upper ? Word{x} : Word{};
            Word low = read_upper ? Word{} : Word{x};
            const Item& first = group.front();
            if (!first.upper_left() && !first.lower_left()) {
                if (group.size() != 1)
                    throw NonDeterministicMachine("rules from " + origin + " are prefix comparable");
                rules.push_back({node, up, low, first.rule->to});
                continue;
            }
            StateId chain = naming::fresh_chain_name(origin, taken_);
            fresh_states.push_back(chain);
            rules.push_back({node, up, low, chain});
            expand(origin, chain, group);
        }
    }

    std::set<std::string> taken_;
};

} // namespace

Constructed<RestrictedWKAutomaton> lift_to_restricted(const WKAutomaton& m) {
    require_deterministic(m, "lift_to_restricted");
    auto l = std::make_shared<const RestrictionLanguage>(RestrictionLanguage::regular(Dfa::universal(m.alphabet())));
    RestrictedWKAutomaton out(m, std::move(l));
    auto report = report_for(m.states().size(), out.core());
    report.notes.push_back("restriction is V* over " + std::to_string(m.alphabet().size()) + " symbols");
    return {std::move(out), std::move(report)};
}

Constructed<WKAutomaton> to_one_limited(const WKAutomaton& m) {
    require_deterministic(m, "to_one_limited");
    if (classify(m).one_limited)
        return {m, report_for(m.states().size(), m)};
    Contracted c = contract_lambda_rules(m);

    std::set<std::string> taken(m.states().begin(), m.states().end());
    OneLimitedBuilder builder(taken);
    for (const auto& q : m.states()) {
        std::vector<const Transition*> from_q;
        for (const auto& t : c.rules)
            if (t.from == q)
                from_q.push_back(&t);
        builder.expand_state(q, from_q);
    }

    std::vector<StateId> states = m.states();
    states.insert(states.end(), builder.fresh_states.begin(), builder.fresh_states.end());
    WKAutomaton out(m.alphabet(), m.rho(), std::move(states), m.start(), c.finals, builder.rules);
    if (!out.deterministic())
        throw std::logic_error("1-limited construction produced a nondeterministic machine");

    auto report = report_for(m.states().size(), out);
    report.notes = std::move(c.notes);
    if (!builder.fresh_states.empty())
        report.notes.push_back("added " + std::to_string(builder.fresh_states.size()) + " chain states");
    return {std::move(out), std::move(report)};
}

Constructed<RestrictedWKAutomaton> to_one_limited(const RestrictedWKAutomaton& m) {
    auto core = to_one_limited(m.core());
    return {RestrictedWKAutomaton(std::move(core.machine), m.restriction_ptr()), std::move(core.report)};
}

Constructed<WKAutomaton> product_with_dfa(const RestrictedWKAutomaton& m) {
    if (!classify(m.core()).one_limited)
        throw NotOneLimited("product_with_dfa needs a 1-limited machine; apply to_one_limited first");
    const Dfa* dfa = m.restriction().dfa();
    if (dfa == nullptr)
        throw UnsupportedRestrictionClass("product_with_dfa needs a regular restriction, got " +
                                          std::string(to_string(m.restriction().kind())));
    const auto& core = m.core();
    ConstructionReport report;

    std::vector<StateId> states;
    std::vector<StateId> finals;
    for (const auto& q : core.states())
        for (const auto& p : dfa->states()) {
            states.push_back(naming::pair_name(q, p));
            if (core.is_final(q) && dfa->is_final(p))
                finals.push_back(states.back());
        }

    std::vector<Transition> rules;
    for (const auto& t : core.transitions()) {
        if (!t.upper.empty()) {
            for (const auto& p : dfa->states())
                rules.push_back({naming::pair_name(t.from, p), t.upper, {}, naming::pair_name(t.to, p)});
            continue;
        }
        const Symbol& x = t.lower.front();
        if (!dfa->alphabet().contains(x)) {
            report.notes.push_back("dropped " + format_transition(t) + ": '" + x +
                                   "' is outside the restriction alphabet");
            continue;
        }
        for (const auto& p : dfa->states())
            rules.push_back({naming::pair_name(t.from, p), {}, t.lower,
                             naming::pair_name(t.to, *dfa->step(p, x))});
    }

    WKAutomaton out(core.alphabet(), core.rho(), std::move(states), naming::pair_name(core.start(), dfa->start()),
                    std::move(finals), std::move(rules));
    auto r = report_for(core.states().size(), out);
    r.notes = std::move(report.notes);
    if (!out.deterministic())
        r.notes.push_back("product is not deterministic");
    return {std::move(out), std::move(r)};
}

Constructed<RestrictedWKAutomaton> lift_dfa(const Dfa& dfa, const Symbol& pad) {
    Alphabet v = dfa.alphabet();
    v.add(pad);
    std::vector<ComplementarityRelation::Pair> pairs;
    for (const auto& x : v)
        pairs.emplace_back(x, pad);

    std::vector<Transition> rules;
    for (const auto& s : dfa.steps())
        rules.push_back({s.from, {s.symbol}, {pad}, s.to});

    WKAutomaton core(v, ComplementarityRelation(std::move(pairs)), dfa.states(), dfa.start(), dfa.finals(),
                     std::move(rules));
    const StateId p = "p";
    Dfa pad_star(Alphabet{pad}, {p}, p, {p}, {{p, pad, p}});
    auto l = std::make_shared<const RestrictionLanguage>(RestrictionLanguage::unary_regular(std::move(pad_star)));
    RestrictedWKAutomaton out(std::move(core), std::move(l));
    auto report = report_for(dfa.states().size(), out.core());
    if (dfa.alphabet().contains(pad))
        report.notes.push_back("pad symbol '" + pad + "' is also an input symbol");
    return {std::move(out), std::move(report)};
}

Constructed<RestrictedWKAutomaton> stateless_identity(std::shared_ptr<const RestrictionLanguage> l,
                                                      const Alphabet& alphabet) {
    const StateId q0 = "q0";
    std::vector<Transition> rules;
    for (const auto& x : alphabet)
        rules.push_back({q0, {x}, {x}, q0});
    WKAutomaton core(alphabet, ComplementarityRelation::identity(alphabet), {q0}, q0, {q0}, std::move(rules));
    RestrictedWKAutomaton out(std::move(core), std::move(l));
    return {out, report_for(1, out.core())};
}

Constructed<Pda> to_pda(const RestrictedWKAutomaton& m) {
    if (!classify(m.core()).one_limited)
        throw NotOneLimited("to_pda needs a 1-limited machine; apply to_one_limited first");
    if (m.restriction().kind() != RestrictionLanguage::Kind::UnaryRegular)
        throw UnsupportedRestrictionClass("to_pda needs a unary regular restriction, got " +
                                          std::string(to_string(m.restriction().kind())));
    const Dfa& dfa = *m.restriction().dfa();
    const Symbol& unary = dfa.alphabet().symbols().front();
    const auto& core = m.core();
    const Symbol a = "a", b = "b", bottom = "$";
    ConstructionReport report;

    std::vector<StateId> states;
    for (const auto& q : core.states())
        for (const auto& p : dfa.states())
            states.push_back(naming::pair_name(q, p));

    std::vector<PdaRule> rules;
    for (const auto& t : core.transitions()) {
        if (!t.upper.empty()) {
            const Symbol& x = t.upper.front();
            if (!core.rho().contains(x, unary)) {
                report.notes.push_back("dropped " + format_transition(t) + ": '" + x +
                                       "' has no complement '" + unary + "'");
                continue;
            }
            for (const auto& p : dfa.states()) {
                const auto from = naming::pair_name(t.from, p);
                const auto to = naming::pair_name(t.to, p);
                rules.push_back({from, x, a, to, {a, a}});
                rules.push_back({from, x, bottom, to, {bottom, a}});
                rules.push_back({from, x, b, to, {}});
            }
            continue;
        }
        const Symbol& x = t.lower.front();
        if (x != unary) {
            report.notes.push_back("dropped " + format_transition(t) + ": lower strand is restricted to '" +
                                   unary + "'");
            continue;
        }
        for (const auto& p : dfa.states()) {
            const auto from = naming::pair_name(t.from, p);
            const auto to = naming::pair_name(t.to, *dfa.step(p, unary));
            rules.push_back({from, std::nullopt, a, to, {}});
            rules.push_back({from, std::nullopt, bottom, to, {bottom, b}});
            rules.push_back({from, std::nullopt, b, to, {b, b}});
        }
    }
    for (const auto& q : core.finals())
        for (const auto& p : dfa.finals()) {
            const auto s = naming::pair_name(q, p);
            rules.push_back({s, std::nullopt, bottom, s, {}});
        }

    Pda out(core.alphabet(), Alphabet{a, b, bottom}, std::move(states), naming::pair_name(core.start(), dfa.start()),
            bottom, std::move(rules), HeadDistanceTag{a, b});
    auto r = report_for(core.states().size(), out);
    r.notes = std::move(report.notes);
    return {std::move(out), std::move(r)};
}

} // namespace wkkit
