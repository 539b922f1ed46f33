#include "wkkit/dfa.hpp"

#include "wkkit/naming.hpp"

#include <limits>
#include <set>

namespace wkkit {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
}

Dfa::Dfa(Alphabet alphabet, std::vector<StateId> states, StateId start, std::vector<StateId> finals,
         std::vector<DfaStep> steps)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (!state_index_.emplace(states_[i], i).second)
            throw InvalidMachine("duplicate DFA state '" + states_[i] + "'");
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        symbol_index_.emplace(alphabet_.symbols()[i], i);

    auto index_of = [this](const StateId& q) {
        auto it = state_index_.find(q);
        if (it == state_index_.end())
            throw InvalidMachine("DFA state '" + q + "' is not declared");
        return it->second;
    };
    start_ = index_of(start);
    final_.assign(states_.size(), false);
    for (const auto& f : finals)
        final_[index_of(f)] = true;

    const std::size_t k = alphabet_.size();
    table_.assign(states_.size() * k, kUnset);
    for (const auto& s : steps) {
        auto sym = symbol_index_.find(s.symbol);
        if (sym == symbol_index_.end())
            throw InvalidMachine("DFA step on '" + s.symbol + "' outside the alphabet");
        auto& cell = table_[index_of(s.from) * k + sym->second];
        const auto target = index_of(s.to);
        if (cell != kUnset && cell != target)
            throw InvalidMachine("DFA has two steps from '" + s.from + "' on '" + s.symbol + "'");
        cell = target;
    }

    bool partial = false;
    for (auto c : table_)
        partial = partial || c == kUnset;
    if (partial) {
        std::set<std::string> taken(states_.begin(), states_.end());
        const std::size_t sink = states_.size();
        added_sink_ = naming::fresh_name("sink", taken);
        states_.push_back(*added_sink_);
        state_index_.emplace(*added_sink_, sink);
        final_.push_back(false);
        table_.resize(states_.size() * k, kUnset);
        for (auto& c : table_)
            if (c == kUnset)
                c = sink;
    }
}

Dfa Dfa::universal(const Alphabet& alphabet, const StateId& state) {
    std::vector<DfaStep> steps;
    for (const auto& x : alphabet)
        steps.push_back({state, x, state});
    return Dfa(alphabet, {state}, state, {state}, std::move(steps));
}

Dfa Dfa::empty_language(const Alphabet& alphabet, const StateId& state) {
    std::vector<DfaStep> steps;
    for (const auto& x : alphabet)
        steps.push_back({state, x, state});
    return Dfa(alphabet, {state}, state, {}, std::move(steps));
}

std::vector<StateId> Dfa::finals() const {
    std::vector<StateId> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (final_[i])
            out.push_back(states_[i]);
    return out;
}

std::vector<DfaStep> Dfa::steps() const {
    std::vector<DfaStep> out;
    const std::size_t k = alphabet_.size();
    for (std::size_t q = 0; q < states_.size(); ++q)
        for (std::size_t x = 0; x < k; ++x)
            out.push_back({states_[q], alphabet_.symbols()[x], states_[table_[q * k + x]]});
    return out;
}

bool Dfa::is_final(const StateId& q) const {
    auto it = state_index_.find(q);
    return it != state_index_.end() && final_[it->second];
}

std::optional<StateId> Dfa::step(const StateId& q, const Symbol& x) const {
    auto qi = state_index_.find(q);
    auto xi = symbol_index_.find(x);
    if (qi == state_index_.end() || xi == symbol_index_.end())
        return std::nullopt;
    return states_[table_[qi->second * alphabet_.size() + xi->second]];
}

bool Dfa::accepts(const Word& w) const {
    std::size_t q = start_;
    for (const auto& x : w) {
        auto xi = symbol_index_.find(x);
        if (xi == symbol_index_.end())
            return false;
        q = table_[q * alphabet_.size() + xi->second];
    }
    return final_[q];
}

bool Dfa::operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && states_ == other.states_ && start_ == other.start_ &&
           final_ == other.final_ && table_ == other.table_;
}

} // namespace wkkit
