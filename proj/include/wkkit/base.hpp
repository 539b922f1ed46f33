#pragma once

// Shared vocabulary: symbols, words, alphabets, verdicts and the error
// hierarchy used by every wkkit module.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wkkit {

/// A token of a declared alphabet. Tokens may be longer than one character.
using Symbol = std::string;
/// A word is a sequence of tokens; the empty vector is λ.
using Word = std::vector<Symbol>;
using StateId = std::string;

/// Ordered set of symbols. Declaration order is kept because enumeration
/// (length-then-lexicographic) is defined relative to it.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);
    Alphabet(std::initializer_list<Symbol> symbols);

    /// Appends @p s unless already present.
    void add(const Symbol& s);

    bool contains(const Symbol& s) const { return index_.count(s) != 0; }
    bool contains_all(const Word& w) const;
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    /// Equality as sets, ignoring declaration order.
    bool same_set(const Alphabet& other) const { return index_ == other.index_; }
    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::set<Symbol> index_;
};

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

/// Three-valued outcome of a bounded decision procedure. ResourceBound is
/// never folded into Reject.
enum class Verdict { Reject, Accept, ResourceBound };

std::string_view to_string(Verdict v);
inline Verdict verdict_of(bool accepted) { return accepted ? Verdict::Accept : Verdict::Reject; }

/// true iff @p u is a prefix of @p v.
bool is_prefix(const Word& u, const Word& v);
/// true iff u is a prefix of v or v is a prefix of u.
bool prefix_comparable(const Word& u, const Word& v);

/// Space-separated tokens; λ renders as "-".
std::string format_word(const Word& w);
/// Inverse of format_word: whitespace-separated tokens, a lone "-" is λ.
Word parse_word(std::string_view text);

/// Length-then-lexicographic comparison relative to @p order.
bool length_lex_less(const Word& a, const Word& b, const Alphabet& order);

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A machine description violates a structural invariant (undeclared state,
/// symbol outside the alphabet, contracting grammar rule, ...).
class InvalidMachine : public Error {
public:
    using Error::Error;
};

class NonDeterministicMachine : public Error {
public:
    using Error::Error;
};

class InvalidStrand : public Error {
public:
    using Error::Error;
};

class NotOneLimited : public Error {
public:
    using Error::Error;
};

class UnsupportedRestrictionClass : public Error {
public:
    using Error::Error;
};

/// A bounded search exhausted its configured budget before deciding.
class ResourceBound : public Error {
public:
    using Error::Error;
};

} // namespace wkkit
