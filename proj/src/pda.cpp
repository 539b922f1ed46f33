#include "wkkit/pda.hpp"

#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace wkkit {

std::string format_pda_rule(const PdaRule& r) {
    return r.from + " " + (r.input ? *r.input : "-") + " " + r.top + " -> " + r.to + " " +
           format_word(r.push);
}

namespace {

bool keeps_head_distance(const PdaRule& r, const Symbol& initial, const HeadDistanceTag& tag) {
    const auto& up = tag.upper_lead;
    const auto& low = tag.lower_lead;
    if (r.input) {
        return (r.top == up && r.push == Word{up, up}) || (r.top == initial && r.push == Word{initial, up}) ||
               (r.top == low && r.push.empty());
    }
    return (r.top == up && r.push.empty()) || (r.top == initial && r.push == Word{initial, low}) ||
           (r.top == low && r.push == Word{low, low}) || (r.top == initial && r.push.empty());
}

} // namespace

Pda::Pda(Alphabet input, Alphabet stack, std::vector<StateId> states, StateId start,
         Symbol initial_stack, std::vector<PdaRule> rules, std::optional<HeadDistanceTag> head_distance)
    : input_(std::move(input)), stack_(std::move(stack)), states_(std::move(states)),
      start_(std::move(start)), initial_(std::move(initial_stack)), rules_(std::move(rules)),
      head_distance_(std::move(head_distance)) {
    std::set<StateId> declared;
    for (const auto& q : states_)
        if (!declared.insert(q).second)
            throw InvalidMachine("duplicate PDA state '" + q + "'");
    if (!declared.count(start_))
        throw InvalidMachine("PDA start state '" + start_ + "' is not declared");
    if (!stack_.contains(initial_))
        throw InvalidMachine("initial stack symbol '" + initial_ + "' is not a stack symbol");
    for (const auto& r : rules_) {
        if (!declared.count(r.from) || !declared.count(r.to))
            throw InvalidMachine("PDA rule " + format_pda_rule(r) + " uses an undeclared state");
        if (r.input && !input_.contains(*r.input))
            throw InvalidMachine("PDA rule " + format_pda_rule(r) + " reads an undeclared input symbol");
        if (!stack_.contains(r.top) || !stack_.contains_all(r.push))
            throw InvalidMachine("PDA rule " + format_pda_rule(r) + " uses an undeclared stack symbol");
    }
    if (head_distance_) {
        if (!stack_.contains(head_distance_->upper_lead) || !stack_.contains(head_distance_->lower_lead))
            throw InvalidMachine("head-distance symbols must be stack symbols");
        for (const auto& r : rules_)
            if (!keeps_head_distance(r, initial_, *head_distance_))
                throw InvalidMachine("PDA rule " + format_pda_rule(r) +
                                     " does not preserve the head-distance stack encoding");
    }
}

PdaLimits default_pda_limits(const Pda& p, const Word& w) {
    const std::size_t h = w.size() + 2;
    return {h, 10 * h * std::max<std::size_t>(1, p.states().size())};
}

Verdict pda_accepts(const Pda& p, const Word& w, const PdaLimits& limits, PdaSearchStats* stats) {
    PdaSearchStats local;
    auto& st = stats ? *stats : local;
    st = {};

    std::unordered_map<StateId, char32_t> state_code;
    for (const auto& q : p.states())
        state_code.emplace(q, static_cast<char32_t>(state_code.size()));
    std::unordered_map<Symbol, char32_t> stack_code;
    for (const auto& s : p.stack_alphabet())
        stack_code.emplace(s, static_cast<char32_t>(stack_code.size()));

    struct Move {
        std::optional<Symbol> input;
        char32_t to;
        std::u32string push;
    };
    std::map<std::pair<char32_t, char32_t>, std::vector<Move>> moves;
    for (const auto& r : p.rules()) {
        std::u32string push;
        for (const auto& s : r.push)
            push.push_back(stack_code.at(s));
        moves[{state_code.at(r.from), stack_code.at(r.top)}].push_back({r.input, state_code.at(r.to), push});
    }

    const std::size_t n = w.size();
    const bool tagged = p.head_distance().has_value();
    const char32_t lower_lead = tagged ? stack_code.at(p.head_distance()->lower_lead) : 0;

    // Configuration key: [state, position, stack bottom..top].
    std::u32string init{state_code.at(p.start()), 0, stack_code.at(p.initial_stack())};
    std::unordered_set<std::u32string> seen{init};
    std::deque<std::u32string> frontier{init};
    bool truncated = false;

    while (!frontier.empty()) {
        std::u32string cfg = std::move(frontier.front());
        frontier.pop_front();
        const std::size_t pos = cfg[1];
        const std::size_t height = cfg.size() - 2;
        if (pos == n && height == 0)
            return Verdict::Accept;
        if (height == 0)
            continue;
        if (++st.expansions > limits.max_steps) {
            truncated = true;
            break;
        }
        auto it = moves.find({cfg[0], cfg.back()});
        if (it == moves.end())
            continue;
        for (const auto& m : it->second) {
            std::size_t next_pos = pos;
            if (m.input) {
                if (pos >= n || w[pos] != *m.input)
                    continue;
                ++next_pos;
            }
            std::u32string next = cfg;
            next[0] = m.to;
            next[1] = static_cast<char32_t>(next_pos);
            next.pop_back();
            next += m.push;
            const std::size_t next_height = next.size() - 2;
            if (tagged) {
                if (next_height > n + 2)
                    throw std::logic_error("head-distance PDA stack exceeded |w| + 2");
                if (next_height > 0 && next.back() == lower_lead && next_height - 1 > n - next_pos)
                    continue;
            }
            if (next_height > limits.max_stack) {
                truncated = true;
                continue;
            }
            st.max_stack_seen = std::max(st.max_stack_seen, next_height);
            if (seen.insert(next).second)
                frontier.push_back(std::move(next));
        }
    }
    return truncated ? Verdict::ResourceBound : Verdict::Reject;
}

} // namespace wkkit
