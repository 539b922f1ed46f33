#pragma once

#include "wkkit/base.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace wkkit {

struct DfaStep {
    StateId from;
    Symbol symbol;
    StateId to;

    bool operator==(const DfaStep&) const = default;
};

/// Complete deterministic finite automaton (Q', V', q0', F', δ').
///
/// Partial inputs are completed on construction: missing steps are routed to
/// a fresh rejecting sink state, which is then part of states(). Two steps
/// with the same source and symbol but different targets are rejected.
class Dfa {
public:
    Dfa(Alphabet alphabet, std::vector<StateId> states, StateId start, std::vector<StateId> finals,
        std::vector<DfaStep> steps);

    /// Single state accepting V*.
    static Dfa universal(const Alphabet& alphabet, const StateId& state = "all");
    /// Single rejecting state.
    static Dfa empty_language(const Alphabet& alphabet, const StateId& state = "none");

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<StateId>& states() const { return states_; }
    const StateId& start() const { return states_[start_]; }
    std::vector<StateId> finals() const;
    /// Every step of the completed table, in state-then-alphabet order.
    std::vector<DfaStep> steps() const;
    /// Name of the sink added during completion, if one was needed.
    const std::optional<StateId>& added_sink() const { return added_sink_; }

    bool is_final(const StateId& q) const;
    /// δ'(q, x); nullopt when x is outside the alphabet or q is unknown.
    std::optional<StateId> step(const StateId& q, const Symbol& x) const;
    /// Symbols outside the alphabet make the word rejected.
    bool accepts(const Word& w) const;

    bool operator==(const Dfa& other) const;

private:
    Alphabet alphabet_;
    std::vector<StateId> states_;
    std::size_t start_ = 0;
    std::vector<bool> final_;
    std::vector<std::size_t> table_; // [state * |V'| + symbol]
    std::unordered_map<StateId, std::size_t> state_index_;
    std::unordered_map<Symbol, std::size_t> symbol_index_;
    std::optional<StateId> added_sink_;
};

} // namespace wkkit
