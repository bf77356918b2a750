#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <sturm/error.hpp>
#include <sturm/letters.hpp>

// Symbolic algebra of morphism names over {a, b, alpha, beta}: the word
// rewriting system
//
//   alpha a^k beta = beta b^k alpha      a alpha^k b = b beta^k a   (k >= 0)
//
// its normal forms, the involution F, cyclic shifts, and power detection.
// Each name denotes the composition of elementary morphisms, first letter
// outermost; an optional ".E" suffix composes the letter-exchange map on
// the right.  All functions here are pure.

namespace sturm {

struct MorphismName {
  std::string letters;  // over 'a', 'b', 'A' (= alpha), 'B' (= beta)
  bool exchange = false;

  // Grammar: one or more letters (ASCII a, b, A, B or the Greek glyphs),
  // then an optional ".E".  A bare ".E" denotes the exchange map itself.
  static MorphismName parse(std::string_view text);
  std::string render(bool unicode = false) const;

  bool plain() const { return !exchange; }
  std::size_t size() const { return letters.size(); }
  auto operator<=>(const MorphismName&) const = default;
};

inline MorphismName MorphismName::parse(std::string_view text) {
  MorphismName out;
  if (text.size() >= 2 && text.substr(text.size() - 2) == ".E") {
    out.exchange = true;
    text.remove_suffix(2);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_name_letter(static_cast<char>(c))) {
      out.letters.push_back(static_cast<char>(c));
    } else if (c == 0xCE && i + 1 < text.size()) {
      const unsigned char d = static_cast<unsigned char>(text[++i]);
      if (d == 0xB1)
        out.letters.push_back(kAlpha);  // U+03B1
      else if (d == 0xB2)
        out.letters.push_back(kBeta);  // U+03B2
      else
        throw parse_error("unexpected character in morphism name");
    } else {
      throw parse_error("unexpected character in morphism name");
    }
  }
  if (out.letters.empty() && !out.exchange)
    throw parse_error("empty morphism name");
  return out;
}

inline std::string MorphismName::render(bool unicode) const {
  std::string out;
  for (char c : letters) {
    if (unicode && c == kAlpha)
      out += "α";
    else if (unicode && c == kBeta)
      out += "β";
    else
      out.push_back(c);
  }
  if (exchange) out += ".E";
  return out;
}

namespace detail {

// One leftmost application of the increasing rewrite direction
//   alpha a^k beta -> beta b^k alpha,   a alpha^k b -> b beta^k a.
// Returns false when the word contains no such factor (it is normal).
inline bool rewrite_leftmost_up(std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == kAlpha) {
      std::size_t j = i + 1;
      while (j < n && s[j] == 'a') ++j;
      if (j < n && s[j] == kBeta) {
        s[i] = kBeta;
        std::fill(s.begin() + i + 1, s.begin() + j, 'b');
        s[j] = kAlpha;
        return true;
      }
    } else if (s[i] == 'a') {
      std::size_t j = i + 1;
      while (j < n && s[j] == kAlpha) ++j;
      if (j < n && s[j] == 'b') {
        s[i] = 'b';
        std::fill(s.begin() + i + 1, s.begin() + j, kBeta);
        s[j] = 'a';
        return true;
      }
    }
  }
  return false;
}

inline std::string normal_letters(std::string s) {
  while (rewrite_leftmost_up(s)) {
  }
  return s;
}

// True when the word contains no factor alpha a^k beta or a alpha^k b.
inline bool is_normal_letters(std::string_view s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == kAlpha) {
      std::size_t j = i + 1;
      while (j < n && s[j] == 'a') ++j;
      if (j < n && s[j] == kBeta) return false;
    } else if (s[i] == 'a') {
      std::size_t j = i + 1;
      while (j < n && s[j] == kAlpha) ++j;
      if (j < n && s[j] == 'b') return false;
    }
  }
  return true;
}

inline std::string f_word(std::string s) {
  for (char& c : s) c = f_letter(c);
  return s;
}

// Latin/Greek class per position.  Rewriting never moves a position across
// the two classes, so the pattern is shared by every name of a morphism.
inline std::vector<bool> latin_pattern(std::string_view s) {
  std::vector<bool> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = is_latin(s[i]);
  return out;
}

template <typename Fn>
bool any_word_with_pattern(const std::vector<bool>& latin, Fn&& fn) {
  const std::size_t d = latin.size();
  if (d > 20) throw domain_error("power search: name too long");
  std::string u(d, 'a');
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    for (std::size_t i = 0; i < d; ++i) {
      const bool high = (mask >> i) & 1u;
      u[i] = latin[i] ? (high ? 'b' : 'a') : (high ? kBeta : kAlpha);
    }
    if (fn(u)) return true;
  }
  return false;
}

inline std::string repeat(std::string_view u, std::size_t times) {
  std::string out;
  out.reserve(u.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += u;
  return out;
}

}  // namespace detail

// The normal form N(w): the unique fixed point of the increasing rewrite,
// equal to the positionwise-greatest name of the same morphism.  Length,
// and the Latin/Greek class of every position, are preserved.
inline MorphismName normalize(const MorphismName& w) {
  if (w.exchange)
    throw domain_error("normalize: name has an exchange suffix");
  return MorphismName{detail::normal_letters(w.letters), false};
}

inline bool is_normal(const MorphismName& w) {
  return w.plain() && detail::is_normal_letters(w.letters);
}

inline bool names_equal_as_morphisms(const MorphismName& w,
                                     const MorphismName& v) {
  if (w.exchange || v.exchange)
    throw domain_error("names_equal_as_morphisms: exchange suffix present");
  if (w.letters.size() != v.letters.size()) return false;
  return detail::normal_letters(w.letters) ==
         detail::normal_letters(v.letters);
}

inline MorphismName apply_F(const MorphismName& w) {
  return MorphismName{detail::f_word(w.letters), w.exchange};
}

inline MorphismName cyc(const MorphismName& w) {
  if (w.letters.empty()) throw domain_error("cyc: empty name");
  MorphismName out = w;
  std::rotate(out.letters.begin(), out.letters.begin() + 1,
              out.letters.end());
  return out;
}

// Cyclic shift that applies F to the letter moved to the back; iterating it
// |w| times yields F(w), 2|w| times the identity.
inline MorphismName cyc_F(const MorphismName& w) {
  if (w.letters.empty()) throw domain_error("cyc_F: empty name");
  MorphismName out = cyc(w);
  out.letters.back() = f_letter(out.letters.back());
  return out;
}

struct PowerReport {
  enum class Kind { not_power, pure_power, exchange_power };
  Kind kind = Kind::not_power;
  MorphismName root;  // normalized; root.exchange set for exchange powers
  int exponent = 1;

  bool is_proper_power() const { return kind != Kind::not_power; }
};

// Detects, up to equality of morphisms, whether the named morphism is a
// proper power of another one:
//   plain w:      w  ==  u^l (l >= 2)   or   w == (u F(u))^k (k >= 1),
//                 the latter being the even power 2k of phi_u o E;
//   suffixed w.E: w  ==  (u F(u))^l u (l >= 1), the odd power 2l+1.
// Candidate roots are constrained by the rewrite-invariant Latin/Greek
// position pattern, then compared through normal forms, so the search is
// exhaustive.  Pure powers are preferred, smaller roots first.
inline PowerReport is_power(const MorphismName& w) {
  const std::size_t n = w.letters.size();
  if (n == 0) return {};
  const std::string nw = detail::normal_letters(w.letters);
  const std::vector<bool> latin = detail::latin_pattern(nw);

  const auto periodic = [&](std::size_t d) {
    for (std::size_t i = 0; i + d < n; ++i)
      if (latin[i + d] != latin[i]) return false;
    return true;
  };
  const auto antiperiodic = [&](std::size_t d) {
    for (std::size_t i = 0; i + d < n; ++i)
      if (latin[i + d] == latin[i]) return false;
    return true;
  };
  const auto head = [&](std::size_t d) {
    return std::vector<bool>(latin.begin(), latin.begin() + d);
  };

  PowerReport found;
  if (!w.exchange) {
    for (std::size_t ell = n; ell >= 2; --ell) {
      if (n % ell != 0) continue;
      const std::size_t d = n / ell;
      if (!periodic(d)) continue;
      const bool hit =
          detail::any_word_with_pattern(head(d), [&](const std::string& u) {
            if (detail::normal_letters(detail::repeat(u, ell)) != nw)
              return false;
            found = {PowerReport::Kind::pure_power,
                     MorphismName{detail::normal_letters(u), false},
                     static_cast<int>(ell)};
            return true;
          });
      if (hit) return found;
    }
    for (std::size_t k = n / 2; k >= 1; --k) {
      if (n % (2 * k) != 0) continue;
      const std::size_t d = n / (2 * k);
      if (!antiperiodic(d)) continue;
      const bool hit =
          detail::any_word_with_pattern(head(d), [&](const std::string& u) {
            const std::string block = u + detail::f_word(u);
            if (detail::normal_letters(detail::repeat(block, k)) != nw)
              return false;
            found = {PowerReport::Kind::exchange_power,
                     MorphismName{detail::normal_letters(u), true},
                     static_cast<int>(2 * k)};
            return true;
          });
      if (hit) return found;
    }
    return {};
  }

  for (std::size_t e = n; e >= 3; --e) {
    if (e % 2 == 0 || n % e != 0) continue;
    const std::size_t d = n / e;
    if (!antiperiodic(d)) continue;
    const bool hit =
        detail::any_word_with_pattern(head(d), [&](const std::string& u) {
          const std::string cand =
              detail::repeat(u + detail::f_word(u), (e - 1) / 2) + u;
          if (detail::normal_letters(cand) != nw) return false;
          found = {PowerReport::Kind::exchange_power,
                   MorphismName{detail::normal_letters(u), true},
                   static_cast<int>(e)};
          return true;
        });
    if (hit) return found;
  }
  return {};
}

}  // namespace sturm
