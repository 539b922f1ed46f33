#include "wkkit/grammar.hpp"

#include "wkkit/naming.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wkkit {

Cfg::Cfg(Alphabet nonterminals, Alphabet terminals, Symbol start, std::vector<CfgRule> rules)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      start_(std::move(start)), rules_(std::move(rules)) {
    for (const auto& t : terminals_)
        if (nonterminals_.contains(t))
            throw InvalidMachine("symbol '" + t + "' is both terminal and nonterminal");
    if (!nonterminals_.contains(start_))
        throw InvalidMachine("start symbol '" + start_ + "' is not a nonterminal");
    for (const auto& r : rules_) {
        if (!nonterminals_.contains(r.lhs))
            throw InvalidMachine("rule left side '" + r.lhs + "' is not a nonterminal");
        for (const auto& s : r.rhs)
            if (!nonterminals_.contains(s) && !terminals_.contains(s))
                throw InvalidMachine("rule for '" + r.lhs + "' uses undeclared symbol '" + s + "'");
    }
}

bool is_chomsky_normal_form(const Cfg& g) {
    for (const auto& r : g.rules()) {
        if (r.rhs.empty()) {
            if (r.lhs != g.start())
                return false;
        } else if (r.rhs.size() == 1) {
            if (!g.terminals().contains(r.rhs[0]))
                return false;
        } else if (r.rhs.size() == 2) {
            for (const auto& s : r.rhs)
                if (!g.is_nonterminal(s) || s == g.start())
                    return false;
        } else {
            return false;
        }
    }
    return true;
}

Cfg cnf_normalize(const Cfg& g) {
    std::set<std::string> taken;
    for (const auto& s : g.nonterminals())
        taken.insert(s);
    for (const auto& s : g.terminals())
        taken.insert(s);

    Alphabet nts = g.nonterminals();
    const Symbol start = naming::fresh_name(g.start() + "0", taken);
    nts.add(start);

    std::vector<CfgRule> rules{{start, {g.start()}}};
    rules.insert(rules.end(), g.rules().begin(), g.rules().end());

    // Terminals inside long right sides get proxy nonterminals.
    std::map<Symbol, Symbol> proxy;
    std::vector<CfgRule> proxied;
    for (auto r : rules) {
        if (r.rhs.size() >= 2) {
            for (auto& s : r.rhs) {
                if (!g.terminals().contains(s))
                    continue;
                auto [it, fresh] = proxy.try_emplace(s);
                if (fresh) {
                    it->second = naming::fresh_name("T_" + s, taken);
                    nts.add(it->second);
                    proxied.push_back({it->second, {s}});
                }
                s = it->second;
            }
        }
        proxied.push_back(std::move(r));
    }

    // Binarize.
    std::vector<CfgRule> binary;
    for (auto& r : proxied) {
        Symbol lhs = r.lhs;
        std::size_t i = 0;
        while (r.rhs.size() - i > 2) {
            Symbol rest = naming::fresh_chain_name(r.lhs, taken);
            nts.add(rest);
            binary.push_back({lhs, {r.rhs[i], rest}});
            lhs = rest;
            ++i;
        }
        binary.push_back({lhs, Word(r.rhs.begin() + static_cast<std::ptrdiff_t>(i), r.rhs.end())});
    }

    // Remove λ-rules.
    std::set<Symbol> nullable;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : binary) {
            if (nullable.count(r.lhs))
                continue;
            bool all = std::all_of(r.rhs.begin(), r.rhs.end(),
                                   [&](const Symbol& s) { return nullable.count(s) != 0; });
            if (all) {
                nullable.insert(r.lhs);
                changed = true;
            }
        }
    }
    std::set<CfgRule> no_lambda;
    for (const auto& r : binary) {
        if (r.rhs.empty())
            continue;
        no_lambda.insert(r);
        if (r.rhs.size() == 2) {
            if (nullable.count(r.rhs[0]))
                no_lambda.insert({r.lhs, {r.rhs[1]}});
            if (nullable.count(r.rhs[1]))
                no_lambda.insert({r.lhs, {r.rhs[0]}});
        }
    }

    // Remove unit rules via the unit closure of every nonterminal.
    auto is_unit = [&](const CfgRule& r) { return r.rhs.size() == 1 && nts.contains(r.rhs[0]); };
    std::map<Symbol, std::set<Symbol>> closure;
    for (const auto& a : nts) {
        auto& reach = closure[a];
        reach.insert(a);
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : no_lambda)
                if (is_unit(r) && reach.count(r.lhs) && reach.insert(r.rhs[0]).second)
                    changed = true;
        }
    }
    std::vector<CfgRule> out;
    std::set<CfgRule> emitted;
    auto emit = [&](CfgRule r) {
        if (emitted.insert(r).second)
            out.push_back(std::move(r));
    };
    if (nullable.count(start))
        emit({start, {}});
    for (const auto& a : nts)
        for (const auto& b : closure[a])
            for (const auto& r : no_lambda)
                if (r.lhs == b && !is_unit(r))
                    emit({a, r.rhs});

    return Cfg(nts, g.terminals(), start, std::move(out));
}

CykRecognizer::CykRecognizer(const Cfg& cnf) {
    if (!is_chomsky_normal_form(cnf))
        throw InvalidMachine("CYK requires a grammar in Chomsky normal form");
    std::unordered_map<Symbol, std::size_t> index;
    for (const auto& a : cnf.nonterminals())
        index.emplace(a, index.size());
    words_ = std::max<std::size_t>(1, (index.size() + 63) / 64);
    start_ = index.at(cnf.start());
    for (const auto& r : cnf.rules()) {
        const std::size_t a = index.at(r.lhs);
        if (r.rhs.empty()) {
            accepts_empty_ = true;
        } else if (r.rhs.size() == 1) {
            auto& bits = by_terminal_[r.rhs[0]];
            bits.resize(words_, 0);
            bits[a / 64] |= std::uint64_t{1} << (a % 64);
        } else {
            binary_.push_back({a, index.at(r.rhs[0]), index.at(r.rhs[1])});
        }
    }
}

bool CykRecognizer::recognizes(const Word& w) const {
    const std::size_t n = w.size();
    if (n == 0)
        return accepts_empty_;
    // cell(len, i): nonterminals deriving w[i, i+len).
    std::vector<std::uint64_t> table(n * n * words_, 0);
    auto cell = [&](std::size_t len, std::size_t i) { return table.data() + ((len - 1) * n + i) * words_; };
    auto test = [](const std::uint64_t* bits, std::size_t k) { return (bits[k / 64] >> (k % 64)) & 1U; };

    for (std::size_t i = 0; i < n; ++i) {
        auto it = by_terminal_.find(w[i]);
        if (it == by_terminal_.end())
            return false;
        std::copy(it->second.begin(), it->second.end(), cell(1, i));
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::uint64_t* out = cell(len, i);
            for (std::size_t k = 1; k < len; ++k) {
                const std::uint64_t* left = cell(k, i);
                const std::uint64_t* right = cell(len - k, i + k);
                for (const auto& r : binary_)
                    if (test(left, r.left) && test(right, r.right))
                        out[r.lhs / 64] |= std::uint64_t{1} << (r.lhs % 64);
            }
        }
    }
    return test(cell(n, 0), start_) != 0;
}

} // namespace wkkit
