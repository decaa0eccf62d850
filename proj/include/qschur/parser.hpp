#pragma once

#include <string_view>

#include "qschur/element.hpp"

namespace qschur {

// Parses the CLI element grammar:
//   element := term { ("+"|"-") term } ;
//   term    := [ "(" poly ")" ] gen { gen } ;
//   gen     := "E" ["-"] int [ "^(" int ")" ] | "1_(" int {"," int} ")"
//            | "R" | "R^-1" | "Ed" | "E-d" ;
// Colors are 1-based; "Ed"/"E-d" denote E_{+-delta}.
Element parse_element(std::string_view text, int n, int r);

}  // namespace qschur
