#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "morsecob/surface.hpp"

namespace morsecob {

/// Syntax or domain error in a surface expression, with the byte offset of
/// the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar (whitespace between tokens is ignored):
///
///   surface := term ('+' term)*
///   term    := atom ('#' atom)*
///   atom    := 'S2' | 'T2' | 'RP2' | 'K2' | 'O' integer | 'N' positive-integer
///
/// '+' is disjoint union, '#' connected sum. The result is in canonical
/// order, so identifiers follow the printed order.
Surface parse_surface(std::string_view text);

/// Canonical notation; parse_surface(format_surface(s)) == s.
inline std::string format_surface(const Surface& s) { return s.to_string(); }

}  // namespace morsecob
