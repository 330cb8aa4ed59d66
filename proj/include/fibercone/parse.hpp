#pragma once

#include <string>
#include <string_view>

#include "fibercone/monomial_ideal.hpp"

namespace fibercone {

/// Parses a comma-separated list of monomials, either in text form
/// ("x^10, x^9*y^2, y^10"; the '*' is optional, whitespace insignificant,
/// "1" is the unit monomial) or in exponent-pair form
/// ("(10,0),(9,2),(0,10)"). The result is minimalized.
MonomialIdeal parse_ideal(std::string_view text);

std::string format_monomial(ExpVec u);
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace fibercone
