#pragma once

#include "qramsey/weyl.hpp"

#include <stdexcept>
#include <string>

namespace qramsey {

// Raised on malformed operator expressions; column is 1-based and also
// embedded in what().
class parse_error : public std::runtime_error {
 public:
  parse_error(int column, const std::string& what_arg)
      : std::runtime_error("column " + std::to_string(column) + ": " + what_arg),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := number | 'i' | 'hbar' | generator | '(' expr ')'
//           | base '/' number | base '/' 'hbar'
// with generator in {x,y,z,px,py,pz,lx,ly,lz,L2}. Whitespace is insignificant,
// identifiers are case-sensitive, '*' preserves written order. The optional
// leading '-' exists so every printed polynomial re-parses.
OperatorPoly parse_operator(const std::string& text);

// Canonical rendering; parse_operator(format_operator(A)) == A.
std::string format_operator(const OperatorPoly& A);

}  // namespace qramsey
