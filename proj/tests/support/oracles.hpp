#pragma once

// Reference implementations used only by the tests. None of them calls the
// library's run engines, recognizers or search code.

#include "wkkit/grammar.hpp"
#include "wkkit/pda.hpp"
#include "wkkit/wk.hpp"

#include <functional>
#include <set>

namespace ref {

using wkkit::Alphabet;
using wkkit::Word;

/// Every word over @p v with length exactly @p len, lexicographic.
std::vector<Word> words_of_length(const Alphabet& v, std::size_t len);
/// Every word with length ≤ @p max_len, length-lex.
std::vector<Word> words_up_to(const Alphabet& v, std::size_t max_len);

/// Lower strands related to @p upper pointwise by the raw pairs of ρ.
std::vector<Word> brute_complements(const std::vector<std::pair<std::string, std::string>>& rho,
                                    const Alphabet& v, const Word& upper);

/// Nondeterministic search over (state, i, j) for every admissible lower
/// strand; accepts when some (final, n, n) is reachable.
bool wk_search_accepts(const wkkit::WKAutomaton& m, const Word& upper);

/// wk_search_accepts restricted to lower strands satisfying @p in_l.
bool restricted_search_accepts(const wkkit::WKAutomaton& m, const std::function<bool(const Word&)>& in_l,
                               const Word& upper);

/// Depth-bounded enumeration of every PDA derivation from (start, 0, [$]).
bool pda_derivation_accepts(const wkkit::Pda& p, const Word& w, std::size_t max_depth);

/// All terminal words of length ≤ @p max_len derivable from the start
/// symbol, by least fixpoint over per-nonterminal word sets.
std::set<Word> cfg_language(const wkkit::Cfg& g, std::size_t max_len);

/// Direct check of the determinism condition on every pair of rules.
bool static_deterministic(const wkkit::WKAutomaton& m);

// Closed-form predicates on words of single-character tokens.
std::string flat(const Word& w);
bool is_anbn(const Word& w);
bool is_anbncn(const Word& w);
bool is_ab_star(const Word& w);
bool is_a_star_b(const Word& w);
bool is_palindrome(const Word& w);
bool is_a2n_bn(const Word& w);

} // namespace ref
