#pragma once

// Polynomial expressions in x, y over Q(i).

#include <cstddef>
#include <stdexcept>
#include <string>

#include "polarclust/bivariate.hpp"

namespace polarclust {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
/// unary := ('+'|'-') unary | power; power := primary ('^' integer)?;
/// primary := integer | integer '/' integer | 'x' | 'y' | 'i' | '(' expr ')'.
/// Juxtaposition (implicit multiplication) is rejected.
BivarPoly parse_polynomial(const std::string& text);

}  // namespace polarclust
