#include "wkkit/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>
#include <unordered_set>

namespace wkkit {

Csg::Csg(Alphabet nonterminals, Alphabet terminals, Symbol start, std::vector<CsgRule> rules)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      start_(std::move(start)), rules_(std::move(rules)) {
    for (const auto& t : terminals_)
        if (nonterminals_.contains(t))
            throw InvalidMachine("symbol '" + t + "' is both terminal and nonterminal");
    if (!nonterminals_.contains(start_))
        throw InvalidMachine("start symbol '" + start_ + "' is not a nonterminal");

    bool start_on_right = false;
    bool start_to_lambda = false;
    for (const auto& r : rules_) {
        for (const auto* side : {&r.lhs, &r.rhs})
            for (const auto& s : *side)
                if (!nonterminals_.contains(s) && !terminals_.contains(s))
                    throw InvalidMachine("rule uses undeclared symbol '" + s + "'");
        if (r.lhs.empty() || std::none_of(r.lhs.begin(), r.lhs.end(),
                                          [this](const Symbol& s) { return nonterminals_.contains(s); }))
            throw InvalidMachine("rule left side '" + format_word(r.lhs) + "' has no nonterminal");
        for (const auto& s : r.rhs)
            start_on_right = start_on_right || s == start_;
        if (r.rhs.empty()) {
            if (r.lhs != Word{start_})
                throw InvalidMachine("only the start symbol may rewrite to λ");
            start_to_lambda = true;
        } else if (r.lhs.size() > r.rhs.size()) {
            throw InvalidMachine("rule " + format_word(r.lhs) + " -> " + format_word(r.rhs) +
                                 " is contracting");
        }
    }
    if (start_to_lambda && start_on_right)
        throw InvalidMachine("start -> λ requires the start symbol to stay off right sides");

    prefix_stable_ = true;
    for (const auto& r : rules_) {
        std::size_t tp = 0;
        while (tp < r.lhs.size() && terminals_.contains(r.lhs[tp]))
            ++tp;
        if (r.rhs.size() < tp || !std::equal(r.lhs.begin(), r.lhs.begin() + static_cast<std::ptrdiff_t>(tp), r.rhs.begin()))
            prefix_stable_ = false;
    }
}

bool csg_derives(const Csg& g, const Word& w, std::size_t budget, CsgSearchStats* stats) {
    if (w.empty()) {
        for (const auto& r : g.rules())
            if (r.rhs.empty())
                return true;
        return false;
    }

    // Intern symbols as code units so forms hash and splice as strings.
    std::unordered_map<Symbol, char32_t> code;
    std::vector<bool> terminal{false};
    for (const auto& s : g.nonterminals()) {
        code.emplace(s, static_cast<char32_t>(terminal.size()));
        terminal.push_back(false);
    }
    for (const auto& s : g.terminals()) {
        code.emplace(s, static_cast<char32_t>(terminal.size()));
        terminal.push_back(true);
    }
    std::u32string target;
    for (const auto& s : w) {
        auto it = code.find(s);
        if (it == code.end() || !terminal[it->second])
            return false;
        target.push_back(it->second);
    }
    auto encode = [&](const Word& word) {
        std::u32string out;
        for (const auto& s : word)
            out.push_back(code.at(s));
        return out;
    };
    std::vector<std::pair<std::u32string, std::u32string>> rules;
    for (const auto& r : g.rules())
        if (!r.rhs.empty())
            rules.emplace_back(encode(r.lhs), encode(r.rhs));

    const std::size_t n = target.size();
    const bool prune_prefix = g.terminal_prefix_stable();
    auto viable = [&](const std::u32string& form) {
        if (form.size() > n)
            return false;
        if (!prune_prefix)
            return true;
        for (std::size_t i = 0; i < form.size() && terminal[form[i]]; ++i)
            if (form[i] != target[i])
                return false;
        return true;
    };

    std::u32string start{code.at(g.start())};
    std::unordered_set<std::u32string> seen{start};
    std::deque<std::u32string> frontier{start};
    CsgSearchStats local;
    auto& st = stats ? *stats : local;
    st = {};
    st.forms_explored = 1;
    st.longest_form = 1;
    if (start == target)
        return true;

    while (!frontier.empty()) {
        std::u32string form = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& [lhs, rhs] : rules) {
            for (auto pos = form.find(lhs); pos != std::u32string::npos; pos = form.find(lhs, pos + 1)) {
                std::u32string next = form.substr(0, pos) + rhs + form.substr(pos + lhs.size());
                if (!viable(next) || !seen.insert(next).second)
                    continue;
                // Noncontracting rules keep every form within the target length.
                assert(next.size() <= n);
                st.forms_explored = seen.size();
                st.longest_form = std::max(st.longest_form, next.size());
                if (next == target)
                    return true;
                if (seen.size() > budget)
                    throw ResourceBound("context-sensitive search exceeded " + std::to_string(budget) +
                                        " sentential forms");
                frontier.push_back(std::move(next));
            }
        }
    }
    return false;
}

} // namespace wkkit
