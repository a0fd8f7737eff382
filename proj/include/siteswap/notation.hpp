//
// notation.hpp
//
// Text notation for throw sequences. Two forms:
//
//   compact:  one character per throw, [0-9] for heights 0-9 and
//             [a-z] (case-insensitive) for 10-35, e.g. "5551", "a1"
//   list:     comma-separated decimal heights, e.g. "20,0,0,0"
//
// Input is auto-detected: a comma selects list form. Parsing never checks
// pattern validity; a parsed sequence may still fail validate().
//

#pragma once

#include "siteswap/pattern.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace siteswap {

enum class NotationForm {
  compact,  // heights 0-35 only
  list,     // unbounded heights
};

// Lexical error with the byte offset of the offending token in the original
// input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:  compact := ([0-9]|[a-zA-Z])+
//           list    := INT (\s* ',' \s* INT)*      INT := [0-9]+
// Surrounding whitespace is trimmed first. Throws ParseError on anything
// else, including numerals too large for a 64-bit height.
ThrowSequence parse(std::string_view text);

// Canonical text for a sequence: lowercase letters in compact form, single
// comma separators in list form. parse(render(q, f)) == q, with one
// unavoidable corner: the list text of a period-1 sequence has no comma, so
// a multi-digit single throw such as (40) re-parses as the compact digits
// (4,0). Compact form with any height > 35 throws std::domain_error.
std::string render(const ThrowSequence& seq, NotationForm form);

// Compact when every height fits (<= 35), list form otherwise.
std::string render_auto(const ThrowSequence& seq);

}  // namespace siteswap
