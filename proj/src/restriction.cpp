#include "wkkit/restriction.hpp"

namespace wkkit {

RestrictionLanguage RestrictionLanguage::finite(FiniteLanguage words) {
    Finite f;
    for (auto& w : words.words) {
        if (!words.alphabet.empty() && !words.alphabet.contains_all(w))
            throw InvalidMachine("finite language word '" + format_word(w) + "' leaves its alphabet");
        if (f.index.insert(w).second)
            f.lang.words.push_back(w);
    }
    f.lang.alphabet = std::move(words.alphabet);
    for (const auto& w : f.lang.words)
        for (const auto& s : w)
            f.lang.alphabet.add(s);
    return RestrictionLanguage(std::move(f));
}

RestrictionLanguage RestrictionLanguage::regular(Dfa dfa) {
    return RestrictionLanguage(Regular{std::move(dfa)});
}

RestrictionLanguage RestrictionLanguage::unary_regular(Dfa dfa) {
    if (dfa.alphabet().size() != 1)
        throw InvalidMachine("a unary regular restriction needs a one-symbol DFA alphabet");
    return RestrictionLanguage(UnaryRegular{std::move(dfa)});
}

RestrictionLanguage RestrictionLanguage::context_free(Cfg grammar) {
    CykRecognizer recognizer(cnf_normalize(grammar));
    return RestrictionLanguage(ContextFree{std::move(grammar), std::move(recognizer)});
}

RestrictionLanguage RestrictionLanguage::context_sensitive(Csg grammar) {
    return RestrictionLanguage(ContextSensitive{std::move(grammar)});
}

RestrictionLanguage::Kind RestrictionLanguage::kind() const {
    return static_cast<Kind>(repr_.index());
}

const Alphabet& RestrictionLanguage::alphabet() const {
    return std::visit(
        [](const auto& r) -> const Alphabet& {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Finite>)
                return r.lang.alphabet;
            else if constexpr (std::is_same_v<T, Regular> || std::is_same_v<T, UnaryRegular>)
                return r.dfa.alphabet();
            else
                return r.grammar.terminals();
        },
        repr_);
}

bool RestrictionLanguage::contains(const Word& w, const MembershipOptions& opts) const {
    return std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Finite>)
                return r.index.count(w) != 0;
            else if constexpr (std::is_same_v<T, Regular> || std::is_same_v<T, UnaryRegular>)
                return r.dfa.accepts(w);
            else if constexpr (std::is_same_v<T, ContextFree>)
                return r.recognizer.recognizes(w);
            else
                return csg_derives(r.grammar, w, opts.cs_budget);
        },
        repr_);
}

const FiniteLanguage* RestrictionLanguage::finite_words() const {
    auto* f = std::get_if<Finite>(&repr_);
    return f ? &f->lang : nullptr;
}

const Dfa* RestrictionLanguage::dfa() const {
    if (auto* r = std::get_if<Regular>(&repr_))
        return &r->dfa;
    if (auto* u = std::get_if<UnaryRegular>(&repr_))
        return &u->dfa;
    return nullptr;
}

const Cfg* RestrictionLanguage::cfg() const {
    auto* c = std::get_if<ContextFree>(&repr_);
    return c ? &c->grammar : nullptr;
}

const Csg* RestrictionLanguage::csg() const {
    auto* c = std::get_if<ContextSensitive>(&repr_);
    return c ? &c->grammar : nullptr;
}

std::string_view to_string(RestrictionLanguage::Kind k) {
    switch (k) {
    case RestrictionLanguage::Kind::Finite: return "finite";
    case RestrictionLanguage::Kind::Regular: return "regular";
    case RestrictionLanguage::Kind::UnaryRegular: return "unary-regular";
    case RestrictionLanguage::Kind::ContextFree: return "cfg";
    case RestrictionLanguage::Kind::ContextSensitive: return "csg";
    }
    return "?";
}

std::vector<Word> complements(const ComplementarityRelation& rho, const Word& w1) {
    std::vector<Word> out;
    ComplementStream stream(rho, w1);
    while (auto w2 = stream.next())
        out.push_back(std::move(*w2));
    return out;
}

RestrictedWKAutomaton::RestrictedWKAutomaton(WKAutomaton core,
                                             std::shared_ptr<const RestrictionLanguage> restriction)
    : core_(std::move(core)), restriction_(std::move(restriction)) {
    if (!core_.deterministic())
        throw NonDeterministicMachine("a restricted machine needs a deterministic core");
    if (!restriction_)
        throw InvalidMachine("restricted machine without a restriction language");
}

RestrictedOutcome restricted_accepts_detailed(const RestrictedWKAutomaton& m, const Word& w1,
                                              const MembershipOptions& opts) {
    RestrictedOutcome out;
    const auto& rho = m.core().rho();
    ComplementStream stream(rho, w1);
    while (auto w2 = stream.next()) {
        ++out.complements_checked;
        if (!m.restriction().contains(*w2, opts))
            continue;
        ++out.runs;
        if (run_on_strands(m.core(), DoubleStrand(rho, w1, std::move(*w2)))) {
            out.accepted = true;
            return out;
        }
    }
    out.rejected_before_run = out.runs == 0;
    return out;
}

} // namespace wkkit
