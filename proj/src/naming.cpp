#include "wkkit/naming.hpp"

namespace wkkit::naming {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ',' || c == '(' || c == ')' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string pair_name(const StateId& left, const StateId& right) {
    return "(" + escape(left) + "," + escape(right) + ")";
}

std::string fresh_chain_name(const StateId& base, std::set<std::string>& taken) {
    for (std::size_t k = 1;; ++k) {
        std::string candidate = base + "#" + std::to_string(k);
        if (taken.insert(candidate).second)
            return candidate;
    }
}

std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
    if (taken.insert(base).second)
        return base;
    return fresh_chain_name(base, taken);
}

} // namespace wkkit::naming
