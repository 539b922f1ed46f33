#include "wkkit/wk.hpp"

#include <algorithm>
#include <deque>

namespace wkkit {

// ---------------------------------------------------------------------------
// ComplementarityRelation

ComplementarityRelation::ComplementarityRelation(std::vector<Pair> pairs) {
    std::set<Pair> seen;
    for (auto& p : pairs) {
        if (!seen.insert(p).second)
            continue;
        by_upper_[p.first].push_back(p.second);
        pairs_.push_back(std::move(p));
    }
    for (auto& [_, lows] : by_upper_)
        std::sort(lows.begin(), lows.end());
}

ComplementarityRelation ComplementarityRelation::identity(const Alphabet& v) {
    std::vector<Pair> pairs;
    for (const auto& s : v)
        pairs.emplace_back(s, s);
    return ComplementarityRelation(std::move(pairs));
}

bool ComplementarityRelation::contains(const Symbol& upper, const Symbol& lower) const {
    const auto& lows = complements_of(upper);
    return std::binary_search(lows.begin(), lows.end(), lower);
}

const std::vector<Symbol>& ComplementarityRelation::complements_of(const Symbol& upper) const {
    static const std::vector<Symbol> none;
    auto it = by_upper_.find(upper);
    return it == by_upper_.end() ? none : it->second;
}

bool ComplementarityRelation::is_total_function_on(const Alphabet& v) const {
    return std::all_of(v.begin(), v.end(),
                       [this](const Symbol& s) { return complements_of(s).size() == 1; });
}

bool ComplementarityRelation::is_injective_function_on(const Alphabet& v) const {
    if (!is_total_function_on(v))
        return false;
    std::set<Symbol> images;
    for (const auto& s : v)
        if (!images.insert(complements_of(s).front()).second)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Strands

std::string format_transition(const Transition& t) {
    return t.from + " (" + format_word(t.upper) + " / " + format_word(t.lower) + ") -> " + t.to;
}

bool DoubleStrand::admissible(const ComplementarityRelation& rho, const Word& upper,
                              const Word& lower) {
    if (upper.size() != lower.size())
        return false;
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (!rho.contains(upper[i], lower[i]))
            return false;
    return true;
}

DoubleStrand::DoubleStrand(const ComplementarityRelation& rho, Word upper, Word lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.size() != lower_.size())
        throw InvalidStrand("strand lengths differ: " + std::to_string(upper_.size()) + " vs " +
                            std::to_string(lower_.size()));
    for (std::size_t i = 0; i < upper_.size(); ++i)
        if (!rho.contains(upper_[i], lower_[i]))
            throw InvalidStrand("position " + std::to_string(i) + ": (" + upper_[i] + ", " +
                                lower_[i] + ") is not in the complementarity relation");
}

ComplementStream::ComplementStream(const ComplementarityRelation& rho, Word upper) {
    for (const auto& s : upper) {
        const auto& lows = rho.complements_of(s);
        if (lows.empty())
            exhausted_ = true;
        choices_.push_back(&lows);
    }
    digits_.assign(choices_.size(), 0);
}

std::optional<Word> ComplementStream::next() {
    if (exhausted_)
        return std::nullopt;
    Word out;
    out.reserve(choices_.size());
    for (std::size_t i = 0; i < choices_.size(); ++i)
        out.push_back((*choices_[i])[digits_[i]]);
    // Advance the odometer, rightmost digit fastest.
    std::size_t i = choices_.size();
    while (i > 0) {
        --i;
        if (++digits_[i] < choices_[i]->size())
            return out;
        digits_[i] = 0;
    }
    exhausted_ = true;
    return out;
}

// ---------------------------------------------------------------------------
// WKAutomaton

namespace {

bool rules_conflict(const Transition& a, const Transition& b) {
    return prefix_comparable(a.upper, b.upper) && prefix_comparable(a.lower, b.lower);
}

} // namespace

WKAutomaton::WKAutomaton(Alphabet alphabet, ComplementarityRelation rho,
                         std::vector<StateId> states, StateId start, std::vector<StateId> finals,
                         std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), rho_(std::move(rho)), states_(std::move(states)),
      start_(std::move(start)), finals_(std::move(finals)), transitions_(std::move(transitions)) {
    for (const auto& q : states_)
        if (!state_set_.insert(q).second)
            throw InvalidMachine("duplicate state '" + q + "'");
    if (!has_state(start_))
        throw InvalidMachine("start state '" + start_ + "' is not declared");
    for (const auto& f : finals_) {
        if (!has_state(f))
            throw InvalidMachine("final state '" + f + "' is not declared");
        final_set_.insert(f);
    }
    for (const auto& [up, low] : rho_.pairs())
        if (!alphabet_.contains(up) || !alphabet_.contains(low))
            throw InvalidMachine("complementarity pair (" + up + ", " + low +
                                 ") uses a symbol outside the alphabet");
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        const auto& t = transitions_[i];
        if (!has_state(t.from) || !has_state(t.to))
            throw InvalidMachine("transition " + format_transition(t) + " uses an undeclared state");
        if (!alphabet_.contains_all(t.upper) || !alphabet_.contains_all(t.lower))
            throw InvalidMachine("transition " + format_transition(t) +
                                 " uses a symbol outside the alphabet");
        outgoing_[t.from].push_back(i);
    }

    deterministic_ = true;
    for (const auto& [_, idx] : outgoing_) {
        for (std::size_t i = 0; i < idx.size() && deterministic_; ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (rules_conflict(transitions_[idx[i]], transitions_[idx[j]])) {
                    deterministic_ = false;
                    break;
                }
    }
}

const std::vector<std::size_t>& WKAutomaton::outgoing(const StateId& q) const {
    static const std::vector<std::size_t> none;
    auto it = outgoing_.find(q);
    return it == outgoing_.end() ? none : it->second;
}

bool WKAutomaton::operator==(const WKAutomaton& other) const {
    return alphabet_ == other.alphabet_ && rho_ == other.rho_ && states_ == other.states_ &&
           start_ == other.start_ && finals_ == other.finals_ &&
           transitions_ == other.transitions_;
}

bool is_deterministic(const WKAutomaton& m) {
    return m.deterministic();
}

Classification classify(const WKAutomaton& m) {
    Classification c;
    c.stateless = m.states().size() == 1 && m.is_final(m.start());
    c.all_final = std::all_of(m.states().begin(), m.states().end(),
                              [&](const StateId& q) { return m.is_final(q); });
    c.simple = std::all_of(m.transitions().begin(), m.transitions().end(),
                           [](const Transition& t) { return t.upper.empty() || t.lower.empty(); });
    c.one_limited = std::all_of(m.transitions().begin(), m.transitions().end(),
                                [](const Transition& t) { return t.upper.size() + t.lower.size() == 1; });
    c.deterministic = m.deterministic();
    c.strongly_deterministic = c.deterministic && m.rho().is_injective_function_on(m.alphabet());
    return c;
}

namespace {

bool matches_at(const Word& rule_word, const Word& strand, std::size_t pos) {
    if (pos + rule_word.size() > strand.size())
        return false;
    return std::equal(rule_word.begin(), rule_word.end(), strand.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool applicable(const Transition& t, const DoubleStrand& strand, const WKConfiguration& cfg) {
    return matches_at(t.upper, strand.upper(), cfg.upper_pos) &&
           matches_at(t.lower, strand.lower(), cfg.lower_pos);
}

} // namespace

std::vector<Transition> applicable_transitions(const WKAutomaton& m, const DoubleStrand& strand,
                                               const WKConfiguration& cfg) {
    std::vector<Transition> out;
    for (std::size_t i : m.outgoing(cfg.state)) {
        const auto& t = m.transitions()[i];
        if (applicable(t, strand, cfg))
            out.push_back(t);
    }
    return out;
}

RunResult execute(const WKAutomaton& m, const DoubleStrand& strand) {
    if (!m.deterministic())
        throw NonDeterministicMachine("run requires a deterministic machine");
    if (!DoubleStrand::admissible(m.rho(), strand.upper(), strand.lower()))
        throw InvalidStrand("strand is not admissible under the machine's complementarity relation");

    const std::size_t n = strand.size();
    RunResult r;
    r.last = WKConfiguration{m.start(), 0, 0};
    // States visited since the heads last moved; only λ/λ rules can revisit.
    std::set<StateId> since_progress{m.start()};
    for (;;) {
        auto& cfg = r.last;
        if (cfg.upper_pos == n && cfg.lower_pos == n && m.is_final(cfg.state)) {
            r.accepted = true;
            return r;
        }
        const Transition* next = nullptr;
        for (std::size_t i : m.outgoing(cfg.state)) {
            const auto& t = m.transitions()[i];
            if (applicable(t, strand, cfg)) {
                next = &t;
                break;
            }
        }
        if (next == nullptr)
            return r;
        ++r.steps;
        cfg.state = next->to;
        cfg.upper_pos += next->upper.size();
        cfg.lower_pos += next->lower.size();
        if (next->upper.empty() && next->lower.empty()) {
            if (!since_progress.insert(cfg.state).second) {
                r.stalled = true;
                return r;
            }
        } else {
            since_progress = {cfg.state};
        }
    }
}

bool wk_accepts(const WKAutomaton& m, const Word& upper) {
    ComplementStream stream(m.rho(), upper);
    while (auto lower = stream.next())
        if (run_on_strands(m, DoubleStrand(m.rho(), upper, *lower)))
            return true;
    return false;
}

namespace {

bool weakly_deterministic_on(const WKAutomaton& m, const DoubleStrand& strand) {
    std::set<WKConfiguration> seen;
    std::deque<WKConfiguration> frontier{WKConfiguration{m.start(), 0, 0}};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        WKConfiguration cfg = frontier.front();
        frontier.pop_front();
        std::size_t count = 0;
        for (std::size_t i : m.outgoing(cfg.state)) {
            const auto& t = m.transitions()[i];
            if (!applicable(t, strand, cfg))
                continue;
            if (++count > 1)
                return false;
            WKConfiguration nxt{t.to, cfg.upper_pos + t.upper.size(), cfg.lower_pos + t.lower.size()};
            if (seen.insert(nxt).second)
                frontier.push_back(std::move(nxt));
        }
    }
    return true;
}

} // namespace

bool check_weak_determinism_bounded(const WKAutomaton& m, std::size_t max_len) {
    const auto& syms = m.alphabet().symbols();
    if (syms.empty())
        return weakly_deterministic_on(m, DoubleStrand(m.rho(), {}, {}));
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        for (;;) {
            Word upper;
            for (auto d : digits)
                upper.push_back(syms[d]);
            ComplementStream stream(m.rho(), upper);
            while (auto lower = stream.next())
                if (!weakly_deterministic_on(m, DoubleStrand(m.rho(), upper, *lower)))
                    return false;
            std::size_t i = len;
            while (i > 0 && ++digits[i - 1] == syms.size())
                digits[--i] = 0;
            if (i == 0)
                break;
        }
    }
    return true;
}

} // namespace wkkit
