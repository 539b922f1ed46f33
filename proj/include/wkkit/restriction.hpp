#pragma once

// Restriction languages for the lower strand and the restricted acceptance
// semantics built on top of them.

#include "wkkit/base.hpp"
#include "wkkit/dfa.hpp"
#include "wkkit/grammar.hpp"
#include "wkkit/wk.hpp"

#include <memory>
#include <set>
#include <variant>

namespace wkkit {

struct FiniteLanguage {
    Alphabet alphabet;
    std::vector<Word> words; // declaration order, no duplicates

    bool operator==(const FiniteLanguage&) const = default;
};

struct MembershipOptions {
    /// Cap on distinct sentential forms for context-sensitive membership.
    std::size_t cs_budget = kDefaultCsBudget;
};

/// L as one of the five classes. Each variant decides membership exactly;
/// only the context-sensitive one can end in ResourceBound.
class RestrictionLanguage {
public:
    enum class Kind { Finite, Regular, UnaryRegular, ContextFree, ContextSensitive };

    static RestrictionLanguage finite(FiniteLanguage words);
    static RestrictionLanguage regular(Dfa dfa);
    /// Throws InvalidMachine unless the DFA alphabet has exactly one symbol.
    static RestrictionLanguage unary_regular(Dfa dfa);
    static RestrictionLanguage context_free(Cfg grammar);
    static RestrictionLanguage context_sensitive(Csg grammar);

    Kind kind() const;
    /// Symbols the language is written over (DFA alphabet, terminals, ...).
    const Alphabet& alphabet() const;

    /// Symbols outside alphabet() make the answer false.
    bool contains(const Word& w, const MembershipOptions& opts = {}) const;

    const FiniteLanguage* finite_words() const;
    /// Regular and unary-regular variants.
    const Dfa* dfa() const;
    const Cfg* cfg() const;
    const Csg* csg() const;

private:
    struct Finite {
        FiniteLanguage lang;
        std::set<Word> index;
    };
    struct Regular {
        Dfa dfa;
    };
    struct UnaryRegular {
        Dfa dfa;
    };
    struct ContextFree {
        Cfg grammar;
        CykRecognizer recognizer;
    };
    struct ContextSensitive {
        Csg grammar;
    };
    using Repr = std::variant<Finite, Regular, UnaryRegular, ContextFree, ContextSensitive>;

    explicit RestrictionLanguage(Repr repr) : repr_(std::move(repr)) {}

    Repr repr_;
};

std::string_view to_string(RestrictionLanguage::Kind k);

inline bool membership(const RestrictionLanguage& l, const Word& w, const MembershipOptions& opts = {}) {
    return l.contains(w, opts);
}

/// Every w2 with [w1/w2] admissible, in stream order. Empty when some symbol
/// of @p w1 has no complement; {λ} for w1 = λ.
std::vector<Word> complements(const ComplementarityRelation& rho, const Word& w1);

/// (V, ρ, Q, q0, F, δ, L). The core must be deterministic.
class RestrictedWKAutomaton {
public:
    /// Throws NonDeterministicMachine if @p core is not deterministic.
    RestrictedWKAutomaton(WKAutomaton core, std::shared_ptr<const RestrictionLanguage> restriction);

    const WKAutomaton& core() const { return core_; }
    const RestrictionLanguage& restriction() const { return *restriction_; }
    const std::shared_ptr<const RestrictionLanguage>& restriction_ptr() const { return restriction_; }

private:
    WKAutomaton core_;
    std::shared_ptr<const RestrictionLanguage> restriction_;
};

struct RestrictedOutcome {
    bool accepted = false;
    /// No complement of the input lies in L, so the core never ran.
    bool rejected_before_run = false;
    std::size_t complements_checked = 0;
    std::size_t runs = 0;
};

/// Streams complements of @p w1, tests each against L and runs the core only
/// on those in L, stopping at the first accepting run. Propagates
/// ResourceBound from context-sensitive membership.
RestrictedOutcome restricted_accepts_detailed(const RestrictedWKAutomaton& m, const Word& w1,
                                              const MembershipOptions& opts = {});

inline bool restricted_accepts(const RestrictedWKAutomaton& m, const Word& w1,
                               const MembershipOptions& opts = {}) {
    return restricted_accepts_detailed(m, w1, opts).accepted;
}

} // namespace wkkit
