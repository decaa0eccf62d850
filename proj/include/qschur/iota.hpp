#pragma once

#include "qschur/catalogs.hpp"
#include "qschur/element.hpp"

namespace qschur {

// Generator-wise image of a word of S(n,n) in S(n+1,n). The word must not
// contain R^{+-1} or divided powers of color n; use iota_image on an Element
// for the general case.
Word iota_image_word(const Word& w, int n);

// Image of an element of S(n,n) in S(n+1,n). R^{+-1} is first rewritten via
// r_expansion (unless rewrite_r is false, in which case it is an error), and
// divided powers are expanded before mapping.
Element iota_image(const Element& e, int n, bool rewrite_r = true);

// Maps both sides of a relation of S(n,n) into S(n+1,n).
RelationPair iota_image(const RelationPair& p);

}  // namespace qschur
