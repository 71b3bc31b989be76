#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "zdposet/poset.hpp"

namespace zdp {

// Line-based poset format:
//
//   # comment
//   elements: 0 a b c
//   rel: 0 < a
//   rel: a < b
//
// Lines may also be separated by ';'. Labels may not contain whitespace,
// '<', ';' or '#'. Closure and validation are applied on load.

/// Throws ParseError (with line number) or a ValidationError.
Poset parse_poset(std::string_view text);
Poset read_poset(std::istream &in);

/// Elements in index order followed by the cover relations, one per line.
std::string write_poset(const Poset &p);

/// Single-line form of write_poset, lines joined by "; ".
std::string encode_poset(const Poset &p);

} // namespace zdp
