#pragma once

#include <string>
#include <string_view>

#include "lietrees/core/formal_sum.hpp"

namespace lietrees {

// Expression grammar (whitespace is insignificant between tokens):
//
//   sum  := term (('+'|'-') term)*      an optional sign may precede the first term
//   term := [integer '*'] tree
//   tree := leaf | '[' tree ',' tree ']'
//   leaf := integer ['{' word '}']
//
// The literal "0" denotes the empty sum.

Tree parse_tree(std::string_view text);

/// Rejects decorations (there is no model to interpret them).
TreeSum parse_tree_sum(std::string_view text);

/// Leaves without braces carry the identity.
DecoratedTreeSum parse_decorated_sum(std::string_view text, const GroupModelPtr& model);

std::string print_expr(const TreeSum& sum);
std::string print_expr(const DecoratedTreeSum& sum);

}  // namespace lietrees
