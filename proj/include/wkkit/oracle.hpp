#pragma once

// Bounded enumeration and cross-machine equivalence checking.

#include "wkkit/constructions.hpp"
#include "wkkit/pda.hpp"
#include "wkkit/restriction.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <variant>

namespace wkkit {

enum class AcceptorKind { WK, RestrictedWK, DFA, PDA, Predicate };

std::string_view to_string(AcceptorKind k);

/// Uniform "does this machine accept w?" view. The callable owns (shares)
/// its machine, so acceptors are cheap to copy and safe to use from several
/// threads at once.
struct Acceptor {
    AcceptorKind kind = AcceptorKind::Predicate;
    Alphabet alphabet;
    std::function<Verdict(const Word&)> accepts;
};

Acceptor make_acceptor(WKAutomaton m);
Acceptor make_acceptor(RestrictedWKAutomaton m, MembershipOptions opts = {});
Acceptor make_acceptor(Dfa dfa);
/// @p limits chooses the engine caps per word; defaults to default_pda_limits.
Acceptor make_acceptor(Pda p, std::function<PdaLimits(const Pda&, const Word&)> limits = {});
Acceptor make_predicate(Alphabet alphabet, std::function<bool(const Word&)> pred);
/// Membership in @p l as a predicate over @p alphabet (defaults to l's own).
Acceptor make_membership_acceptor(std::shared_ptr<const RestrictionLanguage> l,
                                  std::optional<Alphabet> alphabet = std::nullopt,
                                  MembershipOptions opts = {});

struct OracleOptions {
    /// Worker threads per length stratum; results are merged in canonical order.
    unsigned jobs = 1;
};

/// Number of words over @p alphabet with length ≤ @p max_len.
std::size_t count_words(const Alphabet& alphabet, std::size_t max_len);
/// The @p index-th word of length @p len in lexicographic order.
Word word_at(const Alphabet& alphabet, std::size_t len, std::size_t index);

struct Enumeration {
    /// Accepted words in length-then-lexicographic order.
    std::vector<Word> words;
    /// Set when some word ended in ResourceBound; enumeration stops there.
    std::optional<Word> inconclusive_at;
};

Enumeration enumerate_accepted(const Acceptor& a, std::size_t max_len, const OracleOptions& opts = {});

struct Equal {
    std::size_t words_checked = 0;
};
struct Counterexample {
    Word word;
    Verdict left;
    Verdict right;
};
struct Inconclusive {
    Word word;
    std::string reason;
};
using EquivResult = std::variant<Equal, Counterexample, Inconclusive>;

/// Compares verdicts on every word up to @p max_len in length-lex order
/// (over a's declaration order) and reports the first disagreement.
/// Throws std::invalid_argument when the alphabets differ as sets.
EquivResult bounded_equiv(const Acceptor& a, const Acceptor& b, std::size_t max_len,
                          const OracleOptions& opts = {});

inline bool is_equal(const EquivResult& r) { return std::holds_alternative<Equal>(r); }
std::string describe(const EquivResult& r);

struct FinitenessReport {
    std::size_t max_accepted_length = 0;
    std::vector<Word> accepted;
    /// {|v| : v ∈ L}; only these lengths can be accepted.
    std::set<std::size_t> candidate_lengths;
};

/// Complete accepted language of a machine with a finite restriction,
/// found by checking only words whose length matches some word of L.
/// Throws UnsupportedRestrictionClass for other restrictions.
FinitenessReport finiteness_check(const RestrictedWKAutomaton& m);

/// Backtracking search for a complete DFA with at most @p max_states states
/// that agrees with @p a on every word of length ≤ @p max_len. nullopt means
/// no such DFA exists.
std::optional<Dfa> find_consistent_dfa(const Acceptor& a, std::size_t max_len, std::size_t max_states);

} // namespace wkkit
