#include "wkkit/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace wkkit {

std::string_view to_string(AcceptorKind k) {
    switch (k) {
    case AcceptorKind::WK: return "wk";
    case AcceptorKind::RestrictedWK: return "restricted-wk";
    case AcceptorKind::DFA: return "dfa";
    case AcceptorKind::PDA: return "pda";
    case AcceptorKind::Predicate: return "predicate";
    }
    return "?";
}

Acceptor make_acceptor(WKAutomaton m) {
    auto shared = std::make_shared<const WKAutomaton>(std::move(m));
    return {AcceptorKind::WK, shared->alphabet(),
            [shared](const Word& w) { return verdict_of(wk_accepts(*shared, w)); }};
}

Acceptor make_acceptor(RestrictedWKAutomaton m, MembershipOptions opts) {
    auto shared = std::make_shared<const RestrictedWKAutomaton>(std::move(m));
    return {AcceptorKind::RestrictedWK, shared->core().alphabet(), [shared, opts](const Word& w) {
                try {
                    return verdict_of(restricted_accepts(*shared, w, opts));
                } catch (const ResourceBound&) {
                    return Verdict::ResourceBound;
                }
            }};
}

Acceptor make_acceptor(Dfa dfa) {
    auto shared = std::make_shared<const Dfa>(std::move(dfa));
    return {AcceptorKind::DFA, shared->alphabet(),
            [shared](const Word& w) { return verdict_of(shared->accepts(w)); }};
}

Acceptor make_acceptor(Pda p, std::function<PdaLimits(const Pda&, const Word&)> limits) {
    auto shared = std::make_shared<const Pda>(std::move(p));
    if (!limits)
        limits = default_pda_limits;
    return {AcceptorKind::PDA, shared->input_alphabet(),
            [shared, limits](const Word& w) { return pda_accepts(*shared, w, limits(*shared, w)); }};
}

Acceptor make_predicate(Alphabet alphabet, std::function<bool(const Word&)> pred) {
    return {AcceptorKind::Predicate, std::move(alphabet),
            [pred = std::move(pred)](const Word& w) { return verdict_of(pred(w)); }};
}

Acceptor make_membership_acceptor(std::shared_ptr<const RestrictionLanguage> l, std::optional<Alphabet> alphabet,
                                  MembershipOptions opts) {
    Alphabet v = alphabet ? *alphabet : l->alphabet();
    return {AcceptorKind::Predicate, std::move(v), [l, opts](const Word& w) {
                try {
                    return verdict_of(l->contains(w, opts));
                } catch (const ResourceBound&) {
                    return Verdict::ResourceBound;
                }
            }};
}

// ---------------------------------------------------------------------------
// Enumeration

std::size_t count_words(const Alphabet& alphabet, std::size_t max_len) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += layer;
        layer *= alphabet.size();
    }
    return total;
}

Word word_at(const Alphabet& alphabet, std::size_t len, std::size_t index) {
    Word w(len);
    const std::size_t k = alphabet.size();
    for (std::size_t i = len; i > 0; --i) {
        w[i - 1] = alphabet.symbols()[index % k];
        index /= k;
    }
    return w;
}

namespace {

std::size_t stratum_size(const Alphabet& alphabet, std::size_t len) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < len; ++i)
        n *= alphabet.size();
    return n;
}

// Verdicts for every word of one length, in lexicographic order.
std::vector<Verdict> evaluate_stratum(const Acceptor& a, const Alphabet& order, std::size_t len, unsigned jobs) {
    const std::size_t n = order.empty() && len > 0 ? 0 : stratum_size(order, len);
    std::vector<Verdict> out(n, Verdict::Reject);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            out[i] = a.accepts(word_at(order, len, i));
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n / 64 + 1));
    if (workers == 1) {
        work(0, n);
        return out;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t lo = 0; lo < n; lo += chunk)
        threads.emplace_back(work, lo, std::min(n, lo + chunk));
    for (auto& t : threads)
        t.join();
    return out;
}

} // namespace

Enumeration enumerate_accepted(const Acceptor& a, std::size_t max_len, const OracleOptions& opts) {
    Enumeration e;
    for (std::size_t len = 0; len <= max_len; ++len) {
        auto verdicts = evaluate_stratum(a, a.alphabet, len, opts.jobs);
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            if (verdicts[i] == Verdict::ResourceBound) {
                e.inconclusive_at = word_at(a.alphabet, len, i);
                return e;
            }
            if (verdicts[i] == Verdict::Accept)
                e.words.push_back(word_at(a.alphabet, len, i));
        }
    }
    return e;
}

EquivResult bounded_equiv(const Acceptor& a, const Acceptor& b, std::size_t max_len, const OracleOptions& opts) {
    if (!a.alphabet.same_set(b.alphabet))
        throw std::invalid_argument("bounded_equiv needs acceptors over the same alphabet");
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        auto left = evaluate_stratum(a, a.alphabet, len, opts.jobs);
        auto right = evaluate_stratum(b, a.alphabet, len, opts.jobs);
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (left[i] == Verdict::ResourceBound || right[i] == Verdict::ResourceBound) {
                const char* side = left[i] == Verdict::ResourceBound ? "left" : "right";
                return Inconclusive{word_at(a.alphabet, len, i), std::string(side) + " acceptor hit a resource bound"};
            }
            if (left[i] != right[i])
                return Counterexample{word_at(a.alphabet, len, i), left[i], right[i]};
        }
        checked += left.size();
    }
    return Equal{checked};
}

std::string describe(const EquivResult& r) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Equal>)
                return "equal (checked " + std::to_string(v.words_checked) + " words)";
            else if constexpr (std::is_same_v<T, Counterexample>)
                return "counterexample " + format_word(v.word) + " (" + std::string(to_string(v.left)) + " vs " +
                       std::string(to_string(v.right)) + ")";
            else
                return "inconclusive " + format_word(v.word) + " (" + v.reason + ")";
        },
        r);
}

// ---------------------------------------------------------------------------
// Finite restrictions

FinitenessReport finiteness_check(const RestrictedWKAutomaton& m) {
    const FiniteLanguage* l = m.restriction().finite_words();
    if (l == nullptr)
        throw UnsupportedRestrictionClass("finiteness_check needs a finite restriction");
    FinitenessReport r;
    for (const auto& v : l->words)
        r.candidate_lengths.insert(v.size());
    const auto& alphabet = m.core().alphabet();
    for (std::size_t len : r.candidate_lengths) {
        if (alphabet.empty() && len > 0)
            continue;
        const std::size_t n = stratum_size(alphabet, len);
        for (std::size_t i = 0; i < n; ++i) {
            Word w = word_at(alphabet, len, i);
            if (restricted_accepts(m, w)) {
                r.max_accepted_length = std::max(r.max_accepted_length, len);
                r.accepted.push_back(std::move(w));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Small consistent DFA search

namespace {

class ConsistentDfaSearch {
public:
    ConsistentDfaSearch(const Acceptor& a, std::size_t max_len, std::size_t max_states)
        : alphabet_(a.alphabet), k_(a.alphabet.size()), max_len_(max_len), max_states_(max_states) {
        const std::size_t n = count_words(alphabet_, max_len);
        label_.resize(n);
        depth_.resize(n);
        std::size_t node = 0;
        for (std::size_t len = 0; len <= max_len; ++len) {
            const std::size_t m = stratum_size(alphabet_, len);
            for (std::size_t i = 0; i < m; ++i, ++node) {
                Verdict v = a.accepts(word_at(alphabet_, len, i));
                if (v == Verdict::ResourceBound)
                    throw ResourceBound("acceptor hit a resource bound while labelling the sample");
                label_[node] = v == Verdict::Accept;
                depth_[node] = len;
            }
        }
        state_of_.assign(n, -1);
    }

    std::optional<Dfa> run() {
        if (max_states_ == 0)
            return std::nullopt;
        delta_.assign(max_states_ * std::max<std::size_t>(k_, 1), -1);
        state_label_.assign(max_states_, false);
        rep_.assign(max_states_, 0);
        used_ = 1;
        state_label_[0] = label_[0];
        state_of_[0] = 0;
        if (k_ == 0 || !solve(1))
            return k_ == 0 ? std::optional<Dfa>(build()) : std::nullopt;
        return build();
    }

private:
    std::size_t parent(std::size_t node) const { return (node - 1) / k_; }
    std::size_t symbol(std::size_t node) const { return (node - 1) % k_; }
    std::size_t child(std::size_t node, std::size_t c) const { return node * k_ + 1 + c; }

    // Some suffix z keeps both u·z and v·z within the sample and separates them.
    bool distinguishable(std::size_t u, std::size_t v) {
        if (u == v)
            return false;
        if (u > v)
            std::swap(u, v);
        const auto key = (static_cast<std::uint64_t>(u) << 32) | v;
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool d = label_[u] != label_[v];
        if (!d && depth_[u] < max_len_ && depth_[v] < max_len_)
            for (std::size_t c = 0; c < k_ && !d; ++c)
                d = distinguishable(child(u, c), child(v, c));
        memo_.emplace(key, d);
        return d;
    }

    bool solve(std::size_t from) {
        for (std::size_t i = from; i < label_.size(); ++i) {
            const int src = state_of_[parent(i)];
            int& edge = delta_[static_cast<std::size_t>(src) * k_ + symbol(i)];
            if (edge >= 0) {
                if (state_label_[static_cast<std::size_t>(edge)] != label_[i])
                    return false;
                state_of_[i] = edge;
                continue;
            }
            for (std::size_t t = 0; t < used_; ++t) {
                if (state_label_[t] != label_[i] || distinguishable(rep_[t], i))
                    continue;
                edge = static_cast<int>(t);
                state_of_[i] = edge;
                if (solve(i + 1))
                    return true;
            }
            if (used_ < max_states_) {
                const std::size_t t = used_++;
                state_label_[t] = label_[i];
                rep_[t] = i;
                edge = static_cast<int>(t);
                state_of_[i] = edge;
                if (solve(i + 1))
                    return true;
                --used_;
            }
            edge = -1;
            return false;
        }
        return true;
    }

    Dfa build() const {
        std::vector<StateId> states;
        std::vector<StateId> finals;
        for (std::size_t s = 0; s < used_; ++s) {
            states.push_back("s" + std::to_string(s));
            if (state_label_[s])
                finals.push_back(states.back());
        }
        std::vector<DfaStep> steps;
        for (std::size_t s = 0; s < used_; ++s)
            for (std::size_t c = 0; c < k_; ++c) {
                const int t = delta_[s * k_ + c];
                steps.push_back({states[s], alphabet_.symbols()[c], states[t < 0 ? 0 : static_cast<std::size_t>(t)]});
            }
        return Dfa(alphabet_, states, states[0], finals, steps);
    }

    Alphabet alphabet_;
    std::size_t k_;
    std::size_t max_len_;
    std::size_t max_states_;
    std::vector<bool> label_;
    std::vector<std::size_t> depth_;
    std::vector<int> state_of_;
    std::vector<int> delta_;
    std::vector<bool> state_label_;
    std::vector<std::size_t> rep_;
    std::size_t used_ = 0;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

std::optional<Dfa> find_consistent_dfa(const Acceptor& a, std::size_t max_len, std::size_t max_states) {
    return ConsistentDfaSearch(a, max_len, max_states).run();
}

} // namespace wkkit
