#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <sturm/error.hpp>
#include <sturm/morphism.hpp>
#include <sturm/name.hpp>
#include <sturm/word_stream.hpp>

// The rotation operator Delta on normalized names, its orbit analysis, and
// the complete derivated-word set of a fixed point as a list of morphism
// certificates.  A normalized name outside {a,alpha}* starts with a^k beta
// or alpha^k b; Delta moves that prefix block to the end and renormalizes:
//
//   Delta(a^k beta w') = N(w' a^k beta)    Delta(alpha^k b w') = N(w' alpha^k b)
//
// Iterating Delta from N(w) is eventually periodic, and the fixed points
// of the iterates are exactly the derivated words of the fixed point of
// phi_w, up to letter exchange.

namespace sturm {

namespace detail {

inline bool has_both_classes(const std::string& letters) {
  bool latin = false, greek = false;
  for (char c : letters) (is_latin(c) ? latin : greek) = true;
  return latin && greek;
}

}  // namespace detail

inline MorphismName delta(const MorphismName& w) {
  if (w.exchange) throw domain_error("delta: name has an exchange suffix");
  if (detail::in_letter_set(w.letters, "aA"))
    throw domain_error("delta: name over {a,alpha} has two fixed points");
  if (!detail::has_both_classes(w.letters))
    throw domain_error("delta: morphism is not primitive");
  std::string s = detail::normal_letters(w.letters);

  std::size_t block = 0;
  if (s[0] == 'a' || s[0] == kAlpha) {
    const char run = s[0];
    while (block < s.size() && s[block] == run) ++block;
    // Normal form guarantees the run is closed by beta (after a's) or b
    // (after alpha's); a bare b/beta head is the k = 0 case.
    const char closer = run == 'a' ? kBeta : 'b';
    if (block == s.size() || s[block] != closer)
      throw std::logic_error("normal form lost its a^k beta / alpha^k b head");
  }
  ++block;
  std::rotate(s.begin(), s.begin() + block, s.end());
  return MorphismName{detail::normal_letters(s), false};
}

struct DeltaOrbit {
  MorphismName seed;                    // normalized
  std::vector<MorphismName> elements;   // Delta^1 .. Delta^(pre+per)
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<MorphismName> distinct_mod_f;  // after identifying v ~ F(v)
};

inline DeltaOrbit delta_orbit(const MorphismName& w,
                              std::size_t max_iter = 0) {
  DeltaOrbit orbit;
  orbit.seed = normalize(w);
  if (max_iter == 0) max_iter = 3 * w.letters.size() + 2;

  std::map<std::string, std::size_t> seen;  // name -> k with Delta^k = name
  MorphismName cur = orbit.seed;
  for (std::size_t k = 1; k <= max_iter; ++k) {
    cur = delta(cur);
    if (const auto it = seen.find(cur.letters); it != seen.end()) {
      orbit.preperiod = it->second - 1;
      orbit.period = k - it->second;
      break;
    }
    seen.emplace(cur.letters, k);
    orbit.elements.push_back(cur);
  }
  if (orbit.period == 0)
    throw std::logic_error("delta orbit did not close within the bound");

  for (const MorphismName& e : orbit.elements) {
    const std::string f = detail::f_word(e.letters);
    const bool dup = std::any_of(
        orbit.distinct_mod_f.begin(), orbit.distinct_mod_f.end(),
        [&](const MorphismName& r) {
          return r.letters == e.letters || r.letters == f;
        });
    if (!dup) orbit.distinct_mod_f.push_back(e);
  }
  return orbit;
}

enum class DerClass { general, two_fixed_points, standard_exchange,
                      squared_exchange };

inline const char* to_string(DerClass c) {
  switch (c) {
    case DerClass::general:
      return "general";
    case DerClass::two_fixed_points:
      return "two_fixed_points";
    case DerClass::standard_exchange:
      return "standard_exchange";
    default:
      return "squared_exchange";
  }
}

struct DerSetReport {
  MorphismName input;  // normalized
  std::optional<char> start;
  DerClass der_class = DerClass::general;
  std::vector<MorphismName> certificates;  // one per derivated word, mod F
  std::size_t count = 0;
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;
};

// Inclusive bounds on the number of derivated words of the fixed point of
// a primitive phi_w with w outside {a,alpha}*.
inline std::pair<std::size_t, std::size_t> count_bounds(
    const MorphismName& w) {
  if (w.exchange)
    throw domain_error("count_bounds: name has an exchange suffix");
  if (detail::in_letter_set(w.letters, "aA"))
    throw domain_error("count_bounds: name over {a,alpha}");
  if (!is_primitive(w))
    throw domain_error("count_bounds: morphism is not primitive");
  return {1, 3 * w.letters.size() - 4};
}

namespace detail {

inline DerSetReport der_set_impl(MorphismName w, std::optional<char> start,
                                 int depth);

// Two-fixed-point dispatch for a normalized name over {a,alpha}.  The
// a-first, start-0 case strips the leading b off N(wb); start 1 rotates;
// an alpha-first name is handled on F-conjugated data and mapped back.
inline DerSetReport der_set_two_fixed_points(const MorphismName& w,
                                             char start, int depth) {
  if (depth > 64)
    throw std::logic_error("two-fixed-point dispatch did not terminate");

  if (w.letters[0] == kAlpha) {
    DerSetReport inner = der_set_impl(
        apply_F(w), start == '0' ? std::optional<char>('1')
                                 : std::optional<char>('0'),
        depth + 1);
    DerSetReport out;
    out.input = w;
    out.start = start;
    out.der_class = DerClass::two_fixed_points;
    for (const MorphismName& c : inner.certificates)
      out.certificates.push_back(apply_F(c));
    out.count = out.certificates.size();
    return out;
  }

  DerSetReport out;
  out.input = w;
  out.start = start;
  out.der_class = DerClass::two_fixed_points;

  if (start == '0') {
    std::string grown = detail::normal_letters(w.letters + "b");
    if (grown.front() != 'b')
      throw std::logic_error("N(wb) must start with b");
    const MorphismName v{grown.substr(1), false};
    DerSetReport rest = der_set_impl(v, std::nullopt, depth + 1);
    out.certificates.push_back(normalize(v));
    for (const MorphismName& c : rest.certificates)
      out.certificates.push_back(c);
  } else {
    DerSetReport rest = der_set_impl(cyc(w), start, depth + 1);
    out.certificates = std::move(rest.certificates);
  }
  out.count = out.certificates.size();
  return out;
}

inline DerSetReport der_set_impl(MorphismName w, std::optional<char> start,
                                 int depth) {
  if (!w.letters.empty())
    w.letters = detail::normal_letters(w.letters);
  if (!is_primitive(w))
    throw domain_error("der_set: morphism is not primitive");

  if (w.plain()) {
    if (detail::in_letter_set(w.letters, "aA")) {
      if (!start)
        throw domain_error(
            "der_set: a morphism with two fixed points needs a start letter");
      if (*start != '0' && *start != '1')
        throw domain_error("der_set: start letter must be 0 or 1");
      return der_set_two_fixed_points(w, *start, depth);
    }
    DerSetReport out;
    out.input = w;
    out.der_class = DerClass::general;
    const DeltaOrbit orbit = delta_orbit(w);
    out.certificates = orbit.distinct_mod_f;
    out.count = out.certificates.size();
    out.preperiod = orbit.preperiod;
    out.period = orbit.period;
    return out;
  }

  if (detail::in_letter_set(w.letters, "aA"))
    throw domain_error(
        "der_set: an exchange-suffixed name over {a,alpha} has no fixed "
        "point");

  if (detail::in_letter_set(w.letters, "bB")) {
    // Standard morphism composed with E: the certificates are the
    // cyc_F shifts, deduplicated by their fixed points up to exchange
    // (coincidences happen exactly when the morphism is a proper power).
    DerSetReport out;
    out.input = w;
    out.der_class = DerClass::standard_exchange;
    std::vector<WordStream> kept;
    MorphismName cand = w;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
      const auto starts = fixed_point_starts(cand);
      WordStream fp = fixed_point(cand, starts.at(0));
      const bool dup = std::any_of(
          kept.begin(), kept.end(), [&](WordStream& seen) {
            return equal_prefix_up_to_exchange(seen, fp, 200);
          });
      if (!dup) {
        kept.push_back(fp);
        out.certificates.push_back(cand);
      }
      cand = cyc_F(cand);
    }
    out.count = out.certificates.size();
    return out;
  }

  // Mixed letters under an exchange suffix: work with the square, which
  // is a plain name fixing the same word.
  DerSetReport out = der_set_impl(
      MorphismName{w.letters + detail::f_word(w.letters), false},
      std::nullopt, depth + 1);
  out.input = w;
  out.der_class = DerClass::squared_exchange;
  return out;
}

}  // namespace detail

// The complete derivated-word set of the chosen fixed point of the named
// morphism, as morphism certificates (one per derivated word, up to letter
// exchange).  `start` is required exactly when the name is plain and lies
// in {a,alpha}*.
inline DerSetReport der_set(const MorphismName& w,
                            std::optional<char> start = std::nullopt) {
  return detail::der_set_impl(w, start, 0);
}

}  // namespace sturm
