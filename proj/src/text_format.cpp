#include "wkkit/text_format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wkkit {

std::string_view to_string(DocumentKind k) {
    switch (k) {
    case DocumentKind::Wk: return "wk";
    case DocumentKind::RestrictedWk: return "restricted-wk";
    case DocumentKind::Dfa: return "dfa";
    case DocumentKind::Pda: return "pda";
    case DocumentKind::Cfg: return "cfg";
    case DocumentKind::Csg: return "csg";
    case DocumentKind::Finite: return "finite";
    }
    return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column),
      message_(message) {}

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

struct Line {
    std::size_t no;
    std::size_t indent;
    std::string key;
    std::size_t key_col;
    std::vector<Token> values;
};

std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    std::size_t no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        ++no;
        pos = end + 1;

        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                ++i;
            if (i >= raw.size() || raw[i] == '#')
                break;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
                ++i;
            toks.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (toks.empty())
            continue;

        Line line{no, toks[0].col - 1, {}, toks[0].col, {}};
        const std::string& head = toks[0].text;
        const auto colon = head.find(':');
        if (colon == std::string::npos)
            throw ParseError(no, toks[0].col, "expected 'key:' but found '" + head + "'");
        line.key = head.substr(0, colon);
        if (colon + 1 < head.size())
            line.values.push_back({head.substr(colon + 1), toks[0].col + colon + 1});
        line.values.insert(line.values.end(), toks.begin() + 1, toks.end());
        out.push_back(std::move(line));
    }
    return out;
}

const std::set<std::string> kReserved{"-", "/", "->"};

// Keys collected for one document body.
class Fields {
public:
    Fields(std::vector<const Line*> lines, std::set<std::string> single, std::set<std::string> repeated)
        : single_(std::move(single)), repeated_(std::move(repeated)) {
        for (const Line* l : lines) {
            if (!single_.count(l->key) && !repeated_.count(l->key))
                throw ParseError(l->no, l->key_col, "unexpected key '" + l->key + "'");
            auto& slot = by_key_[l->key];
            if (single_.count(l->key) && !slot.empty())
                throw ParseError(l->no, l->key_col, "duplicate key '" + l->key + "'");
            slot.push_back(l);
        }
    }

    const Line* get(const std::string& key) const {
        auto it = by_key_.find(key);
        return it == by_key_.end() ? nullptr : it->second.front();
    }

    const Line& require(const std::string& key, std::size_t header_line) const {
        if (const Line* l = get(key))
            return *l;
        throw ParseError(header_line, 1, "missing '" + key + ":'");
    }

    std::vector<const Line*> all(const std::string& key) const {
        auto it = by_key_.find(key);
        return it == by_key_.end() ? std::vector<const Line*>{} : it->second;
    }

private:
    std::set<std::string> single_;
    std::set<std::string> repeated_;
    std::map<std::string, std::vector<const Line*>> by_key_;
};

Alphabet declare(const Line& l, const char* what) {
    Alphabet a;
    for (const auto& t : l.values) {
        if (kReserved.count(t.text))
            throw ParseError(l.no, t.col, "'" + t.text + "' is reserved and cannot name a " + what);
        if (a.contains(t.text))
            throw ParseError(l.no, t.col, std::string("duplicate ") + what + " '" + t.text + "'");
        a.add(t.text);
    }
    return a;
}

void check_declared(const Alphabet& a, const Line& l, const Token& t, const char* what) {
    if (!a.contains(t.text))
        throw UndeclaredSymbol(l.no, t.col, std::string("undeclared ") + what + " '" + t.text + "'");
}

const Token& single_value(const Line& l) {
    if (l.values.size() != 1)
        throw ParseError(l.no, l.key_col, "'" + l.key + ":' takes exactly one value");
    return l.values[0];
}

// Tokens [from, to) as a word; a lone '-' is λ.
Word word_of(const Line& l, std::size_t from, std::size_t to, const Alphabet& allowed, const char* what) {
    Word w;
    if (to == from + 1 && l.values[from].text == "-")
        return w;
    if (to == from)
        throw ParseError(l.no, from < l.values.size() ? l.values[from].col : l.key_col,
                         "empty word; write '-' for the empty word");
    for (std::size_t i = from; i < to; ++i) {
        if (l.values[i].text == "-")
            throw ParseError(l.no, l.values[i].col, "'-' must stand alone");
        check_declared(allowed, l, l.values[i], what);
        w.push_back(l.values[i].text);
    }
    return w;
}

std::size_t find_token(const Line& l, const std::string& text, std::size_t from = 0) {
    for (std::size_t i = from; i < l.values.size(); ++i)
        if (l.values[i].text == text)
            return i;
    throw ParseError(l.no, l.key_col, "expected '" + text + "' in '" + l.key + ":' line");
}

struct Automaton {
    Alphabet states;
    StateId start;
    std::vector<StateId> finals;
};

Automaton parse_states(const Fields& f, std::size_t header) {
    Automaton a;
    a.states = declare(f.require("states", header), "state");
    const Line& s = f.require("start", header);
    check_declared(a.states, s, single_value(s), "state");
    a.start = s.values[0].text;
    for (const Line* l : f.all("final"))
        for (const auto& t : l->values) {
            check_declared(a.states, *l, t, "state");
            a.finals.push_back(t.text);
        }
    return a;
}

template <class F>
auto wrap(std::size_t line, F&& build) {
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line, 1, e.what());
    }
}

WKAutomaton parse_wk_core(const Fields& f, std::size_t header) {
    Alphabet v = declare(f.require("alphabet", header), "symbol");
    std::vector<ComplementarityRelation::Pair> pairs;
    f.require("rho", header);
    for (const Line* l : f.all("rho"))
        for (const auto& t : l->values) {
            const auto colon = t.text.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == t.text.size())
                throw ParseError(l->no, t.col, "rho entries are written upper:lower");
            Token up{t.text.substr(0, colon), t.col};
            Token low{t.text.substr(colon + 1), t.col + colon + 1};
            check_declared(v, *l, up, "symbol");
            check_declared(v, *l, low, "symbol");
            pairs.emplace_back(up.text, low.text);
        }
    Automaton a = parse_states(f, header);
    std::vector<Transition> ts;
    for (const Line* l : f.all("trans")) {
        if (l->values.empty())
            throw ParseError(l->no, l->key_col, "empty transition");
        const std::size_t slash = find_token(*l, "/");
        const std::size_t arrow = find_token(*l, "->", slash);
        if (arrow + 2 != l->values.size() || slash < 1)
            throw ParseError(l->no, l->key_col, "transitions are written 'from upper / lower -> to'");
        check_declared(a.states, *l, l->values[0], "state");
        check_declared(a.states, *l, l->values[arrow + 1], "state");
        ts.push_back({l->values[0].text, word_of(*l, 1, slash, v, "symbol"),
                      word_of(*l, slash + 1, arrow, v, "symbol"), l->values[arrow + 1].text});
    }
    return wrap(header, [&] {
        return WKAutomaton(v, ComplementarityRelation(pairs), a.states.symbols(), a.start, a.finals, ts);
    });
}

Dfa parse_dfa(const Fields& f, std::size_t header) {
    Alphabet v = declare(f.require("alphabet", header), "symbol");
    Automaton a = parse_states(f, header);
    std::vector<DfaStep> steps;
    for (const Line* l : f.all("step")) {
        if (l->values.size() != 4 || l->values[2].text != "->")
            throw ParseError(l->no, l->key_col, "steps are written 'from symbol -> to'");
        check_declared(a.states, *l, l->values[0], "state");
        check_declared(v, *l, l->values[1], "symbol");
        check_declared(a.states, *l, l->values[3], "state");
        steps.push_back({l->values[0].text, l->values[1].text, l->values[3].text});
    }
    return wrap(header, [&] { return Dfa(v, a.states.symbols(), a.start, a.finals, steps); });
}

Pda parse_pda(const Fields& f, std::size_t header) {
    Alphabet input = declare(f.require("alphabet", header), "symbol");
    Alphabet stack = declare(f.require("stack", header), "stack symbol");
    Automaton a = parse_states(f, header);
    const Line& init = f.require("initial-stack", header);
    check_declared(stack, init, single_value(init), "stack symbol");
    std::optional<HeadDistanceTag> tag;
    if (const Line* h = f.get("head-distance")) {
        if (h->values.size() != 2)
            throw ParseError(h->no, h->key_col, "'head-distance:' takes the upper-lead and lower-lead symbols");
        check_declared(stack, *h, h->values[0], "stack symbol");
        check_declared(stack, *h, h->values[1], "stack symbol");
        tag = HeadDistanceTag{h->values[0].text, h->values[1].text};
    }
    std::vector<PdaRule> rules;
    for (const Line* l : f.all("rule")) {
        if (l->values.size() < 6 || l->values[3].text != "->")
            throw ParseError(l->no, l->key_col, "PDA rules are written 'from input top -> to push...'");
        const auto& v = l->values;
        check_declared(a.states, *l, v[0], "state");
        std::optional<Symbol> x;
        if (v[1].text != "-") {
            check_declared(input, *l, v[1], "symbol");
            x = v[1].text;
        }
        check_declared(stack, *l, v[2], "stack symbol");
        check_declared(a.states, *l, v[4], "state");
        rules.push_back({v[0].text, x, v[2].text, v[4].text, word_of(*l, 5, v.size(), stack, "stack symbol")});
    }
    return wrap(header, [&] {
        return Pda(input, stack, a.states.symbols(), a.start, init.values[0].text, rules, tag);
    });
}

struct GrammarParts {
    Alphabet nonterminals;
    Alphabet terminals;
    Symbol start;
    Alphabet all;
};

GrammarParts parse_grammar_header(const Fields& f, std::size_t header) {
    GrammarParts g;
    g.nonterminals = declare(f.require("nonterminals", header), "nonterminal");
    const Line& t = f.require("terminals", header);
    g.terminals = declare(t, "terminal");
    for (const auto& tok : t.values)
        if (g.nonterminals.contains(tok.text))
            throw ParseError(t.no, tok.col, "'" + tok.text + "' is both a terminal and a nonterminal");
    const Line& s = f.require("start", header);
    check_declared(g.nonterminals, s, single_value(s), "nonterminal");
    g.start = s.values[0].text;
    g.all = alphabet_union(g.nonterminals, g.terminals);
    return g;
}

Cfg parse_cfg(const Fields& f, std::size_t header) {
    GrammarParts g = parse_grammar_header(f, header);
    std::vector<CfgRule> rules;
    for (const Line* l : f.all("rule")) {
        if (l->values.size() < 3 || l->values[1].text != "->")
            throw ParseError(l->no, l->key_col, "CFG rules are written 'A -> rhs...'");
        check_declared(g.nonterminals, *l, l->values[0], "nonterminal");
        rules.push_back({l->values[0].text, word_of(*l, 2, l->values.size(), g.all, "symbol")});
    }
    return wrap(header, [&] { return Cfg(g.nonterminals, g.terminals, g.start, rules); });
}

Csg parse_csg(const Fields& f, std::size_t header) {
    GrammarParts g = parse_grammar_header(f, header);
    std::vector<CsgRule> rules;
    for (const Line* l : f.all("rule")) {
        std::size_t arrow = find_token(*l, "->");
        if (arrow == 0 || arrow + 1 == l->values.size())
            throw ParseError(l->no, l->key_col, "CSG rules are written 'lhs... -> rhs...'");
        rules.push_back({word_of(*l, 0, arrow, g.all, "symbol"),
                         word_of(*l, arrow + 1, l->values.size(), g.all, "symbol")});
    }
    return wrap(header, [&] { return Csg(g.nonterminals, g.terminals, g.start, rules); });
}

FiniteLanguage parse_finite(const Fields& f, std::size_t header) {
    FiniteLanguage lang;
    lang.alphabet = declare(f.require("alphabet", header), "symbol");
    std::set<Word> seen;
    for (const Line* l : f.all("word")) {
        Word w = word_of(*l, 0, l->values.size(), lang.alphabet, "symbol");
        if (seen.insert(w).second)
            lang.words.push_back(std::move(w));
    }
    return lang;
}

std::optional<DocumentKind> kind_from(const std::string& s) {
    for (auto k : {DocumentKind::Wk, DocumentKind::RestrictedWk, DocumentKind::Dfa, DocumentKind::Pda,
                   DocumentKind::Cfg, DocumentKind::Csg, DocumentKind::Finite})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

std::optional<RestrictionLanguage::Kind> restriction_kind_from(const std::string& s) {
    using K = RestrictionLanguage::Kind;
    for (auto k : {K::Finite, K::Regular, K::UnaryRegular, K::ContextFree, K::ContextSensitive})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

DocumentKind document_kind_for(RestrictionLanguage::Kind k) {
    switch (k) {
    case RestrictionLanguage::Kind::Finite: return DocumentKind::Finite;
    case RestrictionLanguage::Kind::Regular:
    case RestrictionLanguage::Kind::UnaryRegular: return DocumentKind::Dfa;
    case RestrictionLanguage::Kind::ContextFree: return DocumentKind::Cfg;
    case RestrictionLanguage::Kind::ContextSensitive: return DocumentKind::Csg;
    }
    return DocumentKind::Dfa;
}

Machine parse_body(DocumentKind kind, const std::vector<const Line*>& lines, std::size_t header,
                   const std::filesystem::path& base_dir);

std::shared_ptr<const RestrictionLanguage> to_restriction(RestrictionLanguage::Kind k, Machine m, std::size_t line) {
    return wrap(line, [&] {
        switch (k) {
        case RestrictionLanguage::Kind::Finite:
            return std::make_shared<const RestrictionLanguage>(
                RestrictionLanguage::finite(std::get<FiniteLanguage>(std::move(m))));
        case RestrictionLanguage::Kind::Regular:
            return std::make_shared<const RestrictionLanguage>(RestrictionLanguage::regular(std::get<Dfa>(std::move(m))));
        case RestrictionLanguage::Kind::UnaryRegular:
            return std::make_shared<const RestrictionLanguage>(
                RestrictionLanguage::unary_regular(std::get<Dfa>(std::move(m))));
        case RestrictionLanguage::Kind::ContextFree:
            return std::make_shared<const RestrictionLanguage>(
                RestrictionLanguage::context_free(std::get<Cfg>(std::move(m))));
        case RestrictionLanguage::Kind::ContextSensitive:
            return std::make_shared<const RestrictionLanguage>(
                RestrictionLanguage::context_sensitive(std::get<Csg>(std::move(m))));
        }
        throw ParseError(line, 1, "unknown restriction class");
    });
}

Machine parse_restricted(const std::vector<const Line*>& lines, std::size_t header,
                         const std::filesystem::path& base_dir) {
    std::vector<const Line*> own;
    const Line* restriction = nullptr;
    std::vector<const Line*> block;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line* l = lines[i];
        if (l->key != "restriction") {
            if (l->indent > 0)
                throw ParseError(l->no, l->key_col, "unexpected indentation");
            own.push_back(l);
            continue;
        }
        if (restriction)
            throw ParseError(l->no, l->key_col, "duplicate key 'restriction'");
        restriction = l;
        while (i + 1 < lines.size() && lines[i + 1]->indent > l->indent)
            block.push_back(lines[++i]);
    }
    Fields f(own, {"alphabet", "states", "start"}, {"rho", "final", "trans"});
    WKAutomaton core = parse_wk_core(f, header);
    if (!restriction)
        throw ParseError(header, 1, "missing 'restriction:'");

    const Line& r = *restriction;
    if (r.values.size() != 2)
        throw ParseError(r.no, r.key_col, "expected 'restriction: <class> inline|<path>'");
    auto rk = restriction_kind_from(r.values[0].text);
    if (!rk)
        throw UnknownKind(r.no, r.values[0].col, "unknown restriction class '" + r.values[0].text + "'");
    const DocumentKind dk = document_kind_for(*rk);
    Machine inner = [&] {
        if (r.values[1].text == "inline")
            return parse_body(dk, block, r.no, base_dir);
        if (!block.empty())
            throw ParseError(block.front()->no, 1, "indented block after a restriction file reference");
        SourceDocument sub = [&] {
            try {
                return load_document(base_dir / r.values[1].text);
            } catch (const ParseError& e) {
                throw ParseError(r.no, r.values[1].col, r.values[1].text + ":" + e.what());
            } catch (const Error& e) {
                throw ParseError(r.no, r.values[1].col, e.what());
            }
        }();
        if (sub.kind != dk)
            throw ParseError(r.no, r.values[1].col,
                             "restriction file has kind '" + std::string(to_string(sub.kind)) + "', expected '" +
                                 std::string(to_string(dk)) + "'");
        return std::move(sub.machine);
    }();
    auto lang = to_restriction(*rk, std::move(inner), r.no);
    return wrap(header, [&] { return RestrictedWKAutomaton(std::move(core), lang); });
}

Machine parse_body(DocumentKind kind, const std::vector<const Line*>& lines, std::size_t header,
                   const std::filesystem::path& base_dir) {
    if (kind == DocumentKind::RestrictedWk)
        return parse_restricted(lines, header, base_dir);
    for (const Line* l : lines)
        if (l->indent != lines.front()->indent)
            throw ParseError(l->no, l->key_col, "unexpected indentation");
    switch (kind) {
    case DocumentKind::Wk:
        return parse_wk_core(Fields(lines, {"alphabet", "states", "start"}, {"rho", "final", "trans"}), header);
    case DocumentKind::Dfa:
        return parse_dfa(Fields(lines, {"alphabet", "states", "start"}, {"final", "step"}), header);
    case DocumentKind::Pda:
        return parse_pda(Fields(lines, {"alphabet", "stack", "states", "start", "initial-stack", "head-distance"},
                                {"rule"}),
                         header);
    case DocumentKind::Cfg:
        return parse_cfg(Fields(lines, {"nonterminals", "terminals", "start"}, {"rule"}), header);
    case DocumentKind::Csg:
        return parse_csg(Fields(lines, {"nonterminals", "terminals", "start"}, {"rule"}), header);
    case DocumentKind::Finite:
        return parse_finite(Fields(lines, {"alphabet"}, {"word"}), header);
    case DocumentKind::RestrictedWk: break;
    }
    throw ParseError(header, 1, "unsupported kind");
}

} // namespace

SourceDocument parse_document(std::string_view text, const std::filesystem::path& base_dir, const std::string& path) {
    const std::vector<Line> lines = lex(text);
    if (lines.empty() || lines.front().key != "kind")
        throw ParseError(lines.empty() ? 1 : lines.front().no, 1, "missing kind header");
    const Line& head = lines.front();
    if (head.indent != 0)
        throw ParseError(head.no, head.key_col, "the kind header must not be indented");
    const Token& k = single_value(head);
    auto kind = kind_from(k.text);
    if (!kind)
        throw UnknownKind(head.no, k.col, "unknown kind '" + k.text + "'");
    std::vector<const Line*> body;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].key == "kind")
            throw ParseError(lines[i].no, lines[i].key_col, "duplicate kind header");
        body.push_back(&lines[i]);
    }
    return SourceDocument{path, *kind, parse_body(*kind, body, head.no, base_dir)};
}

SourceDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path.parent_path(), path.string());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string join(const std::vector<Symbol>& xs) {
    std::string out;
    for (const auto& x : xs) {
        out += ' ';
        out += x;
    }
    return out;
}

std::string word_text(const Word& w) { return w.empty() ? " -" : join(w); }

void render_states(std::ostream& out, const std::string& in, const std::vector<StateId>& states, const StateId& start,
                   const std::vector<StateId>& finals) {
    out << in << "states:" << join(states) << '\n';
    out << in << "start: " << start << '\n';
    if (!finals.empty())
        out << in << "final:" << join(finals) << '\n';
}

void render_wk_core(std::ostream& out, const WKAutomaton& m) {
    out << "alphabet:" << join(m.alphabet().symbols()) << '\n';
    out << "rho:";
    for (const auto& [u, l] : m.rho().pairs())
        out << ' ' << u << ':' << l;
    out << '\n';
    render_states(out, "", m.states(), m.start(), m.finals());
    for (const auto& t : m.transitions())
        out << "trans: " << t.from << word_text(t.upper) << " /" << word_text(t.lower) << " -> " << t.to << '\n';
}

void render_dfa(std::ostream& out, const std::string& in, const Dfa& d) {
    out << in << "alphabet:" << join(d.alphabet().symbols()) << '\n';
    render_states(out, in, d.states(), d.start(), d.finals());
    for (const auto& s : d.steps())
        out << in << "step: " << s.from << ' ' << s.symbol << " -> " << s.to << '\n';
}

void render_grammar_header(std::ostream& out, const std::string& in, const Alphabet& n, const Alphabet& t,
                           const Symbol& s) {
    out << in << "nonterminals:" << join(n.symbols()) << '\n';
    out << in << "terminals:" << join(t.symbols()) << '\n';
    out << in << "start: " << s << '\n';
}

void render_cfg(std::ostream& out, const std::string& in, const Cfg& g) {
    render_grammar_header(out, in, g.nonterminals(), g.terminals(), g.start());
    for (const auto& r : g.rules())
        out << in << "rule: " << r.lhs << " ->" << word_text(r.rhs) << '\n';
}

void render_csg(std::ostream& out, const std::string& in, const Csg& g) {
    render_grammar_header(out, in, g.nonterminals(), g.terminals(), g.start());
    for (const auto& r : g.rules())
        out << in << "rule:" << word_text(r.lhs) << " ->" << word_text(r.rhs) << '\n';
}

void render_finite(std::ostream& out, const std::string& in, const FiniteLanguage& f) {
    out << in << "alphabet:" << join(f.alphabet.symbols()) << '\n';
    for (const auto& w : f.words)
        out << in << "word:" << word_text(w) << '\n';
}

void render_restriction(std::ostream& out, const RestrictionLanguage& l) {
    const std::string in = "  ";
    out << "restriction: " << to_string(l.kind()) << " inline\n";
    if (l.finite_words())
        render_finite(out, in, *l.finite_words());
    else if (l.dfa())
        render_dfa(out, in, *l.dfa());
    else if (l.cfg())
        render_cfg(out, in, *l.cfg());
    else if (l.csg())
        render_csg(out, in, *l.csg());
}

void render_pda(std::ostream& out, const Pda& p) {
    out << "alphabet:" << join(p.input_alphabet().symbols()) << '\n';
    out << "stack:" << join(p.stack_alphabet().symbols()) << '\n';
    out << "states:" << join(p.states()) << '\n';
    out << "start: " << p.start() << '\n';
    out << "initial-stack: " << p.initial_stack() << '\n';
    if (p.head_distance())
        out << "head-distance: " << p.head_distance()->upper_lead << ' ' << p.head_distance()->lower_lead << '\n';
    for (const auto& r : p.rules())
        out << "rule: " << r.from << ' ' << (r.input ? *r.input : "-") << ' ' << r.top << " -> " << r.to
            << word_text(r.push) << '\n';
}

} // namespace

DocumentKind kind_of(const Machine& m) {
    return static_cast<DocumentKind>(m.index());
}

std::string render(const Machine& m) {
    std::ostringstream out;
    out << "kind: " << to_string(kind_of(m)) << '\n';
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WKAutomaton>) {
                render_wk_core(out, x);
            } else if constexpr (std::is_same_v<T, RestrictedWKAutomaton>) {
                render_wk_core(out, x.core());
                render_restriction(out, x.restriction());
            } else if constexpr (std::is_same_v<T, Dfa>) {
                render_dfa(out, "", x);
            } else if constexpr (std::is_same_v<T, Pda>) {
                render_pda(out, x);
            } else if constexpr (std::is_same_v<T, Cfg>) {
                render_cfg(out, "", x);
            } else if constexpr (std::is_same_v<T, Csg>) {
                render_csg(out, "", x);
            } else {
                render_finite(out, "", x);
            }
        },
        m);
    return out.str();
}

std::string render(const SourceDocument& doc) { return render(doc.machine); }

} // namespace wkkit
