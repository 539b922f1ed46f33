#pragma once

// Line-based machine description format.
//
//   kind: restricted-wk
//   alphabet: a b
//   rho: a:a b:a
//   states: q0 qf
//   start: q0
//   final: qf
//   trans: q0 a / - -> q0
//   restriction: unary-regular inline
//     alphabet: a
//     ...
//
// '#' opens a comment at the start of a line or after whitespace; inside a
// token it is an ordinary character (chain states are named "q#1").

#include "wkkit/pda.hpp"
#include "wkkit/restriction.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace wkkit {

enum class DocumentKind { Wk, RestrictedWk, Dfa, Pda, Cfg, Csg, Finite };

std::string_view to_string(DocumentKind k);

using Machine = std::variant<WKAutomaton, RestrictedWKAutomaton, Dfa, Pda, Cfg, Csg, FiniteLanguage>;

struct SourceDocument {
    std::string path;
    DocumentKind kind;
    Machine machine;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class UnknownKind : public ParseError {
public:
    using ParseError::ParseError;
};

class UndeclaredSymbol : public ParseError {
public:
    using ParseError::ParseError;
};

/// @p base_dir resolves `restriction: <class> <path>` references.
SourceDocument parse_document(std::string_view text, const std::filesystem::path& base_dir = {},
                              const std::string& path = {});
SourceDocument load_document(const std::filesystem::path& path);

/// Canonical text; restrictions are always written inline.
std::string render(const SourceDocument& doc);
std::string render(const Machine& m);

DocumentKind kind_of(const Machine& m);

} // namespace wkkit
