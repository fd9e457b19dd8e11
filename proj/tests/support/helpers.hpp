#pragma once

#include <string>

#include "wittlab/parse.hpp"
#include "wittlab/square_class.hpp"

namespace testing_helpers {

inline wittlab::FieldTower tower(const std::string& d) { return wittlab::parse_field(d); }

inline wittlab::Form form(const std::string& expr, wittlab::FieldTower k) {
  return wittlab::parse_form(expr, k);
}

inline wittlab::SquareClass cls(const std::string& lit, wittlab::FieldTower k) {
  return wittlab::parse_class(lit, k);
}

}  // namespace testing_helpers
