#pragma once

// Machine-to-machine transformations. Each one preserves the accepted
// language; the oracle module checks that at bounded length.

#include "wkkit/pda.hpp"
#include "wkkit/restriction.hpp"

#include <string>
#include <vector>

namespace wkkit {

struct ConstructionReport {
    std::size_t input_states = 0;
    std::size_t output_states = 0;
    std::size_t output_transitions = 0;
    std::vector<std::string> notes;
};

template <class Machine>
struct Constructed {
    Machine machine;
    ConstructionReport report;
};

/// Pairs a deterministic machine with L = V* (one accepting state looping on
/// every symbol). Throws NonDeterministicMachine.
Constructed<RestrictedWKAutomaton> lift_to_restricted(const WKAutomaton& m);

/// 1-limited equivalent of a deterministic machine.
///
/// λ/λ rules are contracted first: a state whose single rule is λ/λ takes
/// over the rules at the end of its λ/λ chain and becomes final if any state
/// on the chain is. Longer rules are then split through fresh chain states
/// "q#k"; rules leaving one state share chain states along common reads, and
/// each chain reads upper symbols before lower ones unless a sibling rule has
/// already exhausted its upper word. Throws NonDeterministicMachine.
Constructed<WKAutomaton> to_one_limited(const WKAutomaton& m);

/// Same as above; the result shares the restriction object of @p m.
Constructed<RestrictedWKAutomaton> to_one_limited(const RestrictedWKAutomaton& m);

/// Plain machine over Q × Q' simulating a 1-limited restricted machine and
/// the DFA of its regular restriction: upper reads keep the DFA coordinate,
/// lower reads advance it. Lower reads of symbols outside the DFA alphabet
/// are dropped and noted. Throws NotOneLimited or UnsupportedRestrictionClass.
Constructed<WKAutomaton> product_with_dfa(const RestrictedWKAutomaton& m);

/// Restricted machine with L = pad* accepting L(dfa): ρ(x) = pad for every
/// symbol and each step δ'(p, x) = q becomes p (x / pad) → q.
Constructed<RestrictedWKAutomaton> lift_dfa(const Dfa& dfa, const Symbol& pad);

/// One state q0 (start and final), identity ρ on @p alphabet and rules
/// q0 (x / x) → q0; accepts exactly L ∩ alphabet*.
Constructed<RestrictedWKAutomaton> stateless_identity(std::shared_ptr<const RestrictionLanguage> l,
                                                      const Alphabet& alphabet);

/// Empty-stack PDA over Q × Q' for a 1-limited machine with a unary regular
/// restriction over symbol u. Stack alphabet {a, b, $}: a-runs count how far
/// the upper head leads, b-runs how far the lower head leads. Upper reads of
/// symbols without u as complement and lower reads of symbols other than u
/// can never apply and are dropped with a note. Throws NotOneLimited or
/// UnsupportedRestrictionClass.
Constructed<Pda> to_pda(const RestrictedWKAutomaton& m);

} // namespace wkkit
