#pragma once

// Pushdown automata accepting by empty stack, with a bounded breadth-first
// execution engine.

#include "wkkit/base.hpp"

#include <optional>
#include <set>
#include <vector>

namespace wkkit {

/// (from, input-or-λ, top) → (to, push). The push string replaces the top;
/// its last symbol becomes the new top, and an empty push pops.
struct PdaRule {
    StateId from;
    std::optional<Symbol> input;
    Symbol top;
    StateId to;
    Word push;

    auto operator<=>(const PdaRule&) const = default;
};

std::string format_pda_rule(const PdaRule& r);

/// Marks a PDA whose stack encodes the distance between two heads: the
/// initial symbol alone means the heads are level, a run of @p upper_lead
/// symbols counts how far the input-reading head is ahead, a run of
/// @p lower_lead symbols how far the other head is ahead. The constructor
/// checks that every rule has one of the six shapes that keep this encoding.
struct HeadDistanceTag {
    Symbol upper_lead;
    Symbol lower_lead;

    bool operator==(const HeadDistanceTag&) const = default;
};

class Pda {
public:
    Pda(Alphabet input, Alphabet stack, std::vector<StateId> states, StateId start,
        Symbol initial_stack, std::vector<PdaRule> rules,
        std::optional<HeadDistanceTag> head_distance = std::nullopt);

    const Alphabet& input_alphabet() const { return input_; }
    const Alphabet& stack_alphabet() const { return stack_; }
    const std::vector<StateId>& states() const { return states_; }
    const StateId& start() const { return start_; }
    const Symbol& initial_stack() const { return initial_; }
    const std::vector<PdaRule>& rules() const { return rules_; }
    const std::optional<HeadDistanceTag>& head_distance() const { return head_distance_; }

    bool operator==(const Pda&) const = default;

private:
    Alphabet input_;
    Alphabet stack_;
    std::vector<StateId> states_;
    StateId start_;
    Symbol initial_;
    std::vector<PdaRule> rules_;
    std::optional<HeadDistanceTag> head_distance_;
};

struct PdaLimits {
    std::size_t max_stack = 0;
    std::size_t max_steps = 0;
};

/// max_stack = |w| + 2, max_steps = 10 · (|w| + 2) · |states|.
PdaLimits default_pda_limits(const Pda& p, const Word& w);

struct PdaSearchStats {
    std::size_t expansions = 0;
    std::size_t max_stack_seen = 0;
};

/// Breadth-first search over configurations (state, position, stack) from
/// (start, 0, [initial]). Accepts when some reachable configuration has read
/// all of @p w and has an empty stack. Successors above max_stack and
/// searches beyond max_steps expansions yield ResourceBound unless an
/// accepting configuration was found.
///
/// On head-distance machines, configurations whose lower-lead run is longer
/// than the unread input are dropped (those symbols can only be removed by
/// reading input), and stack height above |w| + 2 is reported as a
/// std::logic_error.
Verdict pda_accepts(const Pda& p, const Word& w, const PdaLimits& limits,
                    PdaSearchStats* stats = nullptr);

inline Verdict pda_accepts(const Pda& p, const Word& w) {
    return pda_accepts(p, w, default_pda_limits(p, w));
}

} // namespace wkkit
