#pragma once

#include <string>

#include "rankagg/profile.hpp"

namespace rankagg {

// PROFILE text format. Header line "n m", then one line per distinct
// ranking: "<multiplicity> <e_0> ... <e_{n-1}>" listing elements from
// highest-ranked to lowest. Lines starting with '#' and blank lines are
// ignored. Multiplicities must sum to m. Throws ParseError with the
// offending line number.
Profile parse_profile(const std::string& text);

std::string serialize_profile(const Profile& profile);

}  // namespace rankagg
