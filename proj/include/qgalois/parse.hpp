#pragma once

#include <string>

#include "qgalois/element.hpp"

namespace qgalois {

// Scalar literal: integers, fractions p/q, z^k, combined with + - * and
// parentheses. Throws ParseError with position.
Cyclotomic parse_scalar(const std::string& text, int order);

// Element literal. Terms are products of scalar atoms and generator powers,
// multiplied in written order (the engine applies the normal form), joined
// with + and -. Example: "a^-1*b^2 + 3*b".
AlgebraElement parse_element(const std::string& text, const PresentationPtr& pres);

std::string format_element(const AlgebraElement& e);

}  // namespace qgalois
