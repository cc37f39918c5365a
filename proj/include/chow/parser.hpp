#pragma once

#include <string_view>

#include "chow/multipoly.hpp"

namespace chow {

// Grammar (whitespace insignificant):
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := base ('^' uint)?
//   base     := rational | varname | '(' expr ')'
//   rational := int ('/' uint)?
//   varname  := 'x'uint | 'a'uint | 'b'uint | 'g{'uint','uint'}' | 't' | 'xi'uint
//
// x0 denotes the chart constant 1. g{i,j} with i > j reads as -g{j,i} and
// g{i,i} as 0, so the antisymmetric gamma symbols can be written either way.
MultiPoly parse_poly(std::string_view text, const VarTable::Ptr& table);

}  // namespace chow
