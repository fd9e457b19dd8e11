#pragma once

// Form expressions.
//
//   form := term { "+" term }              "+" is the orthogonal sum
//   term := atom { "*" atom }              "*" is the tensor product
//   atom := "<" class {"," class} ">"      diagonal form
//         | "<<" class {"," class} ">>"    Pfister form <<a,...>> = (x) <1,-a>
//         | class "*" atom                 scaling
//         | "-" atom | "(" form ")" | "H" | int "x" atom
//
// Classes use the literal syntax of parse_class. "<>" and "<<>>" denote the
// zero form and <1>, so every printed form (including the empty one) parses.

#include <string_view>

#include "wittlab/forms.hpp"

namespace wittlab {

/// Throws ParseError (with line/column) on syntax errors and unknown variables.
Form parse_form(std::string_view src, FieldTower field);

}  // namespace wittlab
