#include "wkkit/cli.hpp"

#include "wkkit/constructions.hpp"
#include "wkkit/oracle.hpp"
#include "wkkit/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace wkkit {

namespace {

struct Settings {
    std::optional<std::size_t> max_stack;
    std::optional<std::size_t> max_steps;
    std::size_t cs_budget = kDefaultCsBudget;
    unsigned jobs = 1;
    bool color = false;
};

std::string paint(const Settings& s, const std::string& text, bool good) {
    if (!s.color)
        return text;
    return std::string(good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

PdaLimits limits_for(const Settings& s, const Pda& p, const Word& w) {
    PdaLimits l = default_pda_limits(p, w);
    if (s.max_stack)
        l.max_stack = *s.max_stack;
    if (s.max_steps)
        l.max_steps = *s.max_steps;
    return l;
}

Acceptor acceptor_for(const Machine& m, const Settings& s) {
    const MembershipOptions mo{s.cs_budget};
    return std::visit(
        [&](const auto& x) -> Acceptor {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WKAutomaton>)
                return make_acceptor(x);
            else if constexpr (std::is_same_v<T, RestrictedWKAutomaton>)
                return make_acceptor(x, mo);
            else if constexpr (std::is_same_v<T, Dfa>)
                return make_acceptor(x);
            else if constexpr (std::is_same_v<T, Pda>)
                return make_acceptor(x, [s](const Pda& p, const Word& w) { return limits_for(s, p, w); });
            else if constexpr (std::is_same_v<T, Cfg>)
                return make_membership_acceptor(
                    std::make_shared<const RestrictionLanguage>(RestrictionLanguage::context_free(x)), std::nullopt, mo);
            else if constexpr (std::is_same_v<T, Csg>)
                return make_membership_acceptor(
                    std::make_shared<const RestrictionLanguage>(RestrictionLanguage::context_sensitive(x)),
                    std::nullopt, mo);
            else
                return make_membership_acceptor(
                    std::make_shared<const RestrictionLanguage>(RestrictionLanguage::finite(x)), std::nullopt, mo);
        },
        m);
}

// "aabb" over {a, b} is read as a a b b when the whole token is not itself
// a symbol; anything else follows the whitespace-separated token rule.
Word read_word(const std::string& text, const Alphabet& v) {
    Word w = parse_word(text);
    if (w.size() == 1 && !v.contains(w[0])) {
        Word split;
        for (char c : w[0])
            split.push_back(std::string(1, c));
        if (v.contains_all(split))
            return split;
    }
    for (const auto& x : w)
        if (!v.contains(x))
            throw Error("symbol '" + x + "' is not in the alphabet");
    return w;
}

const WKAutomaton& core_of(const Machine& m) {
    if (auto* r = std::get_if<RestrictedWKAutomaton>(&m))
        return r->core();
    if (auto* w = std::get_if<WKAutomaton>(&m))
        return *w;
    throw Error("expected a wk or restricted-wk document");
}

void print_report(const ConstructionReport& r, std::ostream& err) {
    err << "states: " << r.input_states << " -> " << r.output_states << ", transitions: " << r.output_transitions
        << '\n';
    for (const auto& n : r.notes)
        err << "note: " << n << '\n';
}

RestrictedWKAutomaton one_limited(const RestrictedWKAutomaton& m, std::ostream& err) {
    if (classify(m.core()).one_limited)
        return m;
    auto c = to_one_limited(m);
    print_report(c.report, err);
    return std::move(c.machine);
}

Machine convert(const Machine& m, const std::string& target, std::ostream& err) {
    if (target == "1lim") {
        if (auto* r = std::get_if<RestrictedWKAutomaton>(&m)) {
            auto c = to_one_limited(*r);
            print_report(c.report, err);
            return std::move(c.machine);
        }
        auto c = to_one_limited(core_of(m));
        print_report(c.report, err);
        return std::move(c.machine);
    }
    if (target == "restricted") {
        if (auto* d = std::get_if<Dfa>(&m)) {
            auto c = lift_dfa(*d, d->alphabet().symbols().front());
            print_report(c.report, err);
            return std::move(c.machine);
        }
        auto* w = std::get_if<WKAutomaton>(&m);
        if (!w)
            throw Error("--to restricted expects a wk or dfa document");
        auto c = lift_to_restricted(*w);
        print_report(c.report, err);
        return std::move(c.machine);
    }
    auto* r = std::get_if<RestrictedWKAutomaton>(&m);
    if (!r)
        throw Error("--to " + target + " expects a restricted-wk document");
    if (target == "dwk") {
        auto c = product_with_dfa(one_limited(*r, err));
        print_report(c.report, err);
        return std::move(c.machine);
    }
    auto c = to_pda(one_limited(*r, err));
    print_report(c.report, err);
    return std::move(c.machine);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Watson-Crick automata toolkit", "wkkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    s.color = color;
    app.add_option("--max-stack", s.max_stack, "PDA stack height cap");
    app.add_option("--max-steps", s.max_steps, "PDA expansion cap");
    app.add_option("--cs-budget", s.cs_budget, "sentential forms explored per CSG membership query");
    app.add_option("--jobs", s.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string file, file_b, word_text, target, output;
    std::size_t max_len = 0;

    auto* run = app.add_subcommand("run", "run a machine on one word");
    run->add_option("file", file)->required();
    run->add_option("--word", word_text, "whitespace-separated tokens; '-' is the empty word")->required();

    auto* cls = app.add_subcommand("classify", "print the classification flags");
    cls->add_option("file", file)->required();

    auto* conv = app.add_subcommand("convert", "apply a construction and print the result");
    conv->add_option("file", file)->required();
    conv->add_option("--to", target)->required()->check(CLI::IsMember({"1lim", "dwk", "pda", "restricted"}));
    conv->add_option("-o,--output", output, "write to a file instead of standard output");

    auto* en = app.add_subcommand("enum", "list accepted words up to a length");
    en->add_option("file", file)->required();
    en->add_option("--max-len", max_len)->required();

    auto* eq = app.add_subcommand("equiv", "compare two machines on all words up to a length");
    eq->add_option("a", file)->required();
    eq->add_option("b", file_b)->required();
    eq->add_option("--max-len", max_len)->required();

    auto* wd = app.add_subcommand("check-weak-det", "check weak determinism on all strands up to a length");
    wd->add_option("file", file)->required();
    wd->add_option("--max-len", max_len)->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        const SourceDocument doc = load_document(file);
        const OracleOptions oo{s.jobs};

        if (run->parsed()) {
            const Acceptor a = acceptor_for(doc.machine, s);
            const Word w = read_word(word_text, a.alphabet);
            const Verdict v = a.accepts(w);
            if (v == Verdict::ResourceBound) {
                err << "resource bound reached on " << format_word(w) << '\n';
                return 2;
            }
            out << paint(s, std::string(to_string(v)), v == Verdict::Accept) << '\n';
            return v == Verdict::Accept ? 0 : 1;
        }
        if (cls->parsed()) {
            const Classification c = classify(core_of(doc.machine));
            out << "stateless: " << std::boolalpha << c.stateless << '\n'
                << "all-final: " << c.all_final << '\n'
                << "simple: " << c.simple << '\n'
                << "1-limited: " << c.one_limited << '\n'
                << "deterministic: " << c.deterministic << '\n'
                << "strongly-deterministic: " << c.strongly_deterministic << '\n';
            return 0;
        }
        if (conv->parsed()) {
            const std::string text = render(convert(doc.machine, target, err));
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!(f << text))
                    throw Error("cannot write '" + output + "'");
            }
            return 0;
        }
        if (en->parsed()) {
            const Enumeration e = enumerate_accepted(acceptor_for(doc.machine, s), max_len, oo);
            for (const auto& w : e.words)
                out << format_word(w) << '\n';
            if (e.inconclusive_at) {
                out << "inconclusive " << format_word(*e.inconclusive_at) << '\n';
                return 2;
            }
            return 0;
        }
        if (eq->parsed()) {
            const SourceDocument other = load_document(file_b);
            const EquivResult r =
                bounded_equiv(acceptor_for(doc.machine, s), acceptor_for(other.machine, s), max_len, oo);
            out << paint(s, describe(r), is_equal(r)) << '\n';
            if (is_equal(r))
                return 0;
            return std::holds_alternative<Counterexample>(r) ? 1 : 2;
        }
        const bool ok = check_weak_determinism_bounded(core_of(doc.machine), max_len);
        out << paint(s, ok ? "weakly-deterministic" : "not-weakly-deterministic", ok) << '\n';
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace wkkit
