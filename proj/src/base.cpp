#include "wkkit/base.hpp"

#include <algorithm>
#include <sstream>

namespace wkkit {

Alphabet::Alphabet(std::vector<Symbol> symbols) {
    for (auto& s : symbols)
        add(s);
}

Alphabet::Alphabet(std::initializer_list<Symbol> symbols) {
    for (const auto& s : symbols)
        add(s);
}

void Alphabet::add(const Symbol& s) {
    if (index_.insert(s).second)
        symbols_.push_back(s);
}

bool Alphabet::contains_all(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [this](const Symbol& s) { return contains(s); });
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    Alphabet out = a;
    for (const auto& s : b)
        out.add(s);
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::ResourceBound: return "resource-bound";
    }
    return "?";
}

bool is_prefix(const Word& u, const Word& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool prefix_comparable(const Word& u, const Word& v) {
    return u.size() <= v.size() ? is_prefix(u, v) : is_prefix(v, u);
}

std::string format_word(const Word& w) {
    if (w.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += w[i];
    }
    return out;
}

Word parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    Word w;
    for (std::string tok; in >> tok;)
        w.push_back(tok);
    if (w.size() == 1 && w[0] == "-")
        w.clear();
    return w;
}

bool length_lex_less(const Word& a, const Word& b, const Alphabet& order) {
    if (a.size() != b.size())
        return a.size() < b.size();
    const auto& syms = order.symbols();
    auto rank = [&](const Symbol& s) {
        return static_cast<std::size_t>(std::find(syms.begin(), syms.end(), s) - syms.begin());
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        return rank(a[i]) < rank(b[i]);
    }
    return false;
}

} // namespace wkkit
