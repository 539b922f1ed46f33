#pragma once

#include "wkkit/base.hpp"

#include <set>
#include <string>

namespace wkkit::naming {

/// "(left,right)" with ',', '(', ')' and '\' in the components backslash-escaped,
/// so distinct pairs never render to the same name.
std::string pair_name(const StateId& left, const StateId& right);

/// First of "base#1", "base#2", ... not in @p taken; the result is inserted.
std::string fresh_chain_name(const StateId& base, std::set<std::string>& taken);

/// @p base itself if free, otherwise base#k as above.
std::string fresh_name(const std::string& base, std::set<std::string>& taken);

} // namespace wkkit::naming
