#pragma once

// Context-free and context-sensitive (noncontracting) grammars with their
// membership deciders.

#include "wkkit/base.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace wkkit {

struct CfgRule {
    Symbol lhs;
    Word rhs; // empty means λ

    auto operator<=>(const CfgRule&) const = default;
};

class Cfg {
public:
    Cfg(Alphabet nonterminals, Alphabet terminals, Symbol start, std::vector<CfgRule> rules);

    const Alphabet& nonterminals() const { return nonterminals_; }
    const Alphabet& terminals() const { return terminals_; }
    const Symbol& start() const { return start_; }
    const std::vector<CfgRule>& rules() const { return rules_; }

    bool is_nonterminal(const Symbol& s) const { return nonterminals_.contains(s); }

    bool operator==(const Cfg&) const = default;

private:
    Alphabet nonterminals_;
    Alphabet terminals_;
    Symbol start_;
    std::vector<CfgRule> rules_;
};

/// Rules are A → B C, A → t, or start → λ; the start symbol never occurs on
/// a right-hand side.
bool is_chomsky_normal_form(const Cfg& g);

/// Weakly equivalent grammar in Chomsky normal form. λ ∈ L(g) is kept as a
/// rule start → λ for a fresh start symbol.
Cfg cnf_normalize(const Cfg& g);

/// CYK recognizer over a grammar in Chomsky normal form, with nonterminal
/// sets stored as bit vectors.
class CykRecognizer {
public:
    /// Throws InvalidMachine if @p cnf is not in Chomsky normal form.
    explicit CykRecognizer(const Cfg& cnf);

    bool recognizes(const Word& w) const;

private:
    using Bits = std::vector<std::uint64_t>;

    std::size_t words_ = 1;
    std::size_t start_ = 0;
    bool accepts_empty_ = false;
    std::unordered_map<Symbol, Bits> by_terminal_;
    struct Binary {
        std::size_t lhs, left, right;
    };
    std::vector<Binary> binary_;
};

struct CsgRule {
    Word lhs;
    Word rhs;

    auto operator<=>(const CsgRule&) const = default;
};

/// Noncontracting grammar: every rule α → β has |α| ≤ |β| and α holds at
/// least one nonterminal. A rule start → λ is allowed when the start symbol
/// never occurs on a right-hand side.
class Csg {
public:
    Csg(Alphabet nonterminals, Alphabet terminals, Symbol start, std::vector<CsgRule> rules);

    const Alphabet& nonterminals() const { return nonterminals_; }
    const Alphabet& terminals() const { return terminals_; }
    const Symbol& start() const { return start_; }
    const std::vector<CsgRule>& rules() const { return rules_; }

    /// Every rule's right side begins with the terminal prefix of its left
    /// side, so terminal prefixes of sentential forms only grow.
    bool terminal_prefix_stable() const { return prefix_stable_; }

    bool operator==(const Csg& o) const {
        return nonterminals_ == o.nonterminals_ && terminals_ == o.terminals_ &&
               start_ == o.start_ && rules_ == o.rules_;
    }

private:
    Alphabet nonterminals_;
    Alphabet terminals_;
    Symbol start_;
    std::vector<CsgRule> rules_;
    bool prefix_stable_ = false;
};

struct CsgSearchStats {
    std::size_t forms_explored = 0;
    std::size_t longest_form = 0;
};

constexpr std::size_t kDefaultCsBudget = 1'000'000;

/// Exhaustive breadth-first derivation search over sentential forms of
/// length ≤ |w|. Exact because rules never shrink a form. Throws
/// ResourceBound once more than @p budget distinct forms have been seen.
bool csg_derives(const Csg& g, const Word& w, std::size_t budget = kDefaultCsBudget,
                 CsgSearchStats* stats = nullptr);

} // namespace wkkit
