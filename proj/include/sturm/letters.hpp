#pragma once

#include <stdexcept>

// Alphabet of the four elementary morphism letters.  Latin letters {a, b}
// and Greek letters {alpha, beta} are stored as the ASCII bytes 'a', 'b',
// 'A', 'B'; the Greek glyphs are accepted on input and rendered on demand.

namespace sturm {

inline constexpr char kAlpha = 'A';
inline constexpr char kBeta = 'B';

inline constexpr bool is_latin(char c) { return c == 'a' || c == 'b'; }
inline constexpr bool is_greek(char c) { return c == kAlpha || c == kBeta; }
inline constexpr bool is_name_letter(char c) { return is_latin(c) || is_greek(c); }

// The involution F: a <-> alpha, b <-> beta.
inline constexpr char f_letter(char c) {
  switch (c) {
    case 'a':
      return kAlpha;
    case kAlpha:
      return 'a';
    case 'b':
      return kBeta;
    case kBeta:
      return 'b';
    default:
      throw std::invalid_argument("f_letter: not a name letter");
  }
}

inline constexpr char exchange_binary(char c) { return c == '0' ? '1' : '0'; }

}  // namespace sturm
