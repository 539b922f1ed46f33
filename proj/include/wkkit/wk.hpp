#pragma once

// Watson-Crick automata: two independent heads over a double strand whose
// positions are linked by a complementarity relation, driven by one state.

#include "wkkit/base.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wkkit {

/// The relation ρ ⊆ V × V. Complements of each upper symbol are kept sorted,
/// which fixes the order in which complement strings are enumerated.
class ComplementarityRelation {
public:
    using Pair = std::pair<Symbol, Symbol>;

    ComplementarityRelation() = default;
    explicit ComplementarityRelation(std::vector<Pair> pairs);

    static ComplementarityRelation identity(const Alphabet& v);

    bool contains(const Symbol& upper, const Symbol& lower) const;
    /// Sorted lower complements of @p upper; empty if it has none.
    const std::vector<Symbol>& complements_of(const Symbol& upper) const;
    /// Pairs in declaration order, duplicates removed.
    const std::vector<Pair>& pairs() const { return pairs_; }

    /// Every symbol of @p v has exactly one complement.
    bool is_total_function_on(const Alphabet& v) const;
    /// Total function on @p v and no two symbols share a complement.
    bool is_injective_function_on(const Alphabet& v) const;

    bool operator==(const ComplementarityRelation& other) const { return pairs_ == other.pairs_; }

private:
    std::vector<Pair> pairs_;
    std::map<Symbol, std::vector<Symbol>> by_upper_;
};

/// A rule q (upper / lower) → to. Either word may be empty.
struct Transition {
    StateId from;
    Word upper;
    Word lower;
    StateId to;

    auto operator<=>(const Transition&) const = default;
};

std::string format_transition(const Transition& t);

/// A pair [upper/lower] of equal length, pointwise related by ρ.
class DoubleStrand {
public:
    /// Throws InvalidStrand if the lengths differ or some position is not in ρ.
    DoubleStrand(const ComplementarityRelation& rho, Word upper, Word lower);

    static bool admissible(const ComplementarityRelation& rho, const Word& upper, const Word& lower);

    const Word& upper() const { return upper_; }
    const Word& lower() const { return lower_; }
    std::size_t size() const { return upper_.size(); }

private:
    Word upper_;
    Word lower_;
};

/// Lazily yields every w2 with [upper/w2] admissible under ρ, in
/// lexicographic order of the (sorted) lower complements, leftmost position
/// most significant. Single consumer.
class ComplementStream {
public:
    ComplementStream(const ComplementarityRelation& rho, Word upper);

    std::optional<Word> next();

private:
    std::vector<const std::vector<Symbol>*> choices_;
    std::vector<std::size_t> digits_;
    bool exhausted_ = false;
};

struct WKConfiguration {
    StateId state;
    std::size_t upper_pos = 0;
    std::size_t lower_pos = 0;

    auto operator<=>(const WKConfiguration&) const = default;
};

/// M = (V, ρ, Q, q0, F, δ). Immutable once constructed; the constructor
/// validates well-formedness and throws InvalidMachine otherwise.
/// Nondeterministic machines are representable (weak determinism checks
/// need them); the run engine refuses them.
class WKAutomaton {
public:
    WKAutomaton(Alphabet alphabet, ComplementarityRelation rho, std::vector<StateId> states,
                StateId start, std::vector<StateId> finals, std::vector<Transition> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    const ComplementarityRelation& rho() const { return rho_; }
    const std::vector<StateId>& states() const { return states_; }
    const StateId& start() const { return start_; }
    const std::vector<StateId>& finals() const { return finals_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    bool has_state(const StateId& q) const { return state_set_.count(q) != 0; }
    bool is_final(const StateId& q) const { return final_set_.count(q) != 0; }
    /// Indices into transitions() of the rules leaving @p q.
    const std::vector<std::size_t>& outgoing(const StateId& q) const;

    /// Static determinism, computed once at construction.
    bool deterministic() const { return deterministic_; }

    bool operator==(const WKAutomaton& other) const;

private:
    Alphabet alphabet_;
    ComplementarityRelation rho_;
    std::vector<StateId> states_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<Transition> transitions_;

    std::set<StateId> state_set_;
    std::set<StateId> final_set_;
    std::unordered_map<StateId, std::vector<std::size_t>> outgoing_;
    bool deterministic_ = false;
};

struct Classification {
    bool stateless = false;
    bool all_final = false;
    bool simple = false;
    bool one_limited = false;
    bool deterministic = false;
    bool strongly_deterministic = false;

    bool operator==(const Classification&) const = default;
};

/// No two distinct rules from one state are prefix comparable on both strands.
bool is_deterministic(const WKAutomaton& m);

Classification classify(const WKAutomaton& m);

/// Rules whose upper and lower words are prefixes of the unread suffixes.
std::vector<Transition> applicable_transitions(const WKAutomaton& m, const DoubleStrand& strand,
                                               const WKConfiguration& cfg);

struct RunResult {
    bool accepted = false;
    /// Configuration where the run ended (acceptance point, halt or stall).
    WKConfiguration last;
    /// Rule applications performed.
    std::size_t steps = 0;
    /// The run revisited a configuration through λ/λ rules.
    bool stalled = false;
};

/// Deterministic run from (q0, 0, 0). Accepts as soon as the run visits a
/// final state with both heads at the end of their strands.
/// Throws NonDeterministicMachine or InvalidStrand when preconditions fail.
RunResult execute(const WKAutomaton& m, const DoubleStrand& strand);

inline bool run_on_strands(const WKAutomaton& m, const DoubleStrand& strand) {
    return execute(m, strand).accepted;
}

/// Unrestricted language membership: some complement w2 of @p upper makes
/// run_on_strands accept.
bool wk_accepts(const WKAutomaton& m, const Word& upper);

/// Explores every run (all branches) on every admissible strand with
/// |upper| ≤ @p max_len and reports whether each reachable configuration has
/// at most one applicable rule. A bounded semi-decision.
bool check_weak_determinism_bounded(const WKAutomaton& m, std::size_t max_len);

} // namespace wkkit
