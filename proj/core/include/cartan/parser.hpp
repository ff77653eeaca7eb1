#pragma once

#include <stdexcept>
#include <string>

#include "cartan/expression.hpp"

namespace cartan {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Parse the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' int)?
///   atom   := ident | number | '(' expr ')' | '-' atom
///   ident  := 'x'|'y'|'u1'|'u2'|'u3'|'i'
///   number := int | int '/' int
/// Parsing, printing and re-parsing is a fixed point.
Expression parse_expression(const std::string& text);

/// Parse a rational literal like "3", "-1/2".
mpq_class parse_rational(const std::string& text);

}  // namespace cartan
