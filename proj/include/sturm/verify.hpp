#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <sturm/derset.hpp>
#include <sturm/error.hpp>
#include <sturm/mechanical.hpp>
#include <sturm/morphism.hpp>
#include <sturm/name.hpp>
#include <sturm/word_stream.hpp>
#include <sturm/words.hpp>

// Brute-force cross-checks: the certificate list produced by the orbit
// machinery is compared in both directions against return-word codings
// computed directly on generated prefixes, and exhaustive small-name
// sweeps assert the orbit bounds and the closed-form counts.

namespace sturm {

struct CheckResult {
  std::string check_id;
  std::string params;
  bool pass = true;
  std::string witness;
};

struct VerificationReport {
  std::optional<MorphismName> subject;
  std::vector<CheckResult> checks;
  std::size_t budget = kDefaultBudget;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return !c.pass; }));
  }
};

namespace detail {

// Certificates whose fixed point equals the derivated stream up to letter
// exchange.  Ties at the base length are broken by doubling the compared
// prefix; distinct Sturmian fixed points separate after finitely many
// letters, so at most one candidate survives.
inline std::vector<std::size_t> matching_certificates(
    WordStream derivated, std::vector<WordStream>& cert_streams,
    std::size_t sample, std::size_t budget) {
  std::vector<std::size_t> alive(cert_streams.size());
  for (std::size_t j = 0; j < alive.size(); ++j) alive[j] = j;
  std::size_t len = sample;
  while (true) {
    std::vector<std::size_t> next;
    for (std::size_t j : alive)
      if (equal_prefix_up_to_exchange(derivated, cert_streams[j], len))
        next.push_back(j);
    if (next.size() <= 1 || len >= budget) return next;
    alive = std::move(next);
    len *= 2;
  }
}

// Fast right-special test for a Sturmian stream of known slope: the left
// special factors of the language are exactly the prefixes of the
// characteristic word, so a prefix is right special iff its reversal is a
// prefix of c(gamma).
inline bool prefix_is_right_special(WordStream& u, WordStream& cword,
                                    std::size_t len) {
  u.ensure(len);
  cword.ensure(len);
  for (std::size_t i = 0; i < len; ++i)
    if (u[len - 1 - i] != cword[i]) return false;
  return true;
}

inline std::vector<std::string> all_letter_words(std::size_t len) {
  std::vector<std::string> out{std::string{}};
  static constexpr char kLetters[4] = {'a', 'b', kAlpha, kBeta};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * 4);
    for (const std::string& w : out)
      for (char c : kLetters) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

inline std::size_t count_letter(const std::string& s, char c) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
}

}  // namespace detail

// Both directions of the certificate/oracle equivalence for a primitive
// plain name outside {a,alpha}*:
//  - every right special prefix of length <= max_prefix derivates to the
//    fixed point of exactly one certificate (up to exchange), and
//  - every certificate is reached by some right special prefix; prefixes
//    are walked by level, one orbit step per level, so preperiod + period
//    levels always suffice when the machinery is sound.
inline VerificationReport verify_derivated_words(
    const MorphismName& w, std::size_t max_prefix = 20,
    std::size_t sample = 100, std::size_t budget = kDefaultBudget) {
  const MorphismName nw = normalize(w);
  VerificationReport report;
  report.subject = nw;
  report.budget = budget;

  const DerSetReport ds = der_set(nw);
  if (ds.der_class != DerClass::general)
    throw domain_error("verify: expected a morphism with a unique fixed "
                       "point outside the standard-exchange classes");
  WordStream u = fixed_point(nw, fixed_point_starts(nw).at(0));
  WordStream cword = mechanical_word(slope_of_fixed_point(nw),
                                     slope_of_fixed_point(nw));
  std::vector<WordStream> certs;
  for (const MorphismName& c : ds.certificates)
    certs.push_back(fixed_point(c, fixed_point_starts(c).at(0)));

  {  // the two right-special characterizations must agree in the horizon
    std::vector<std::size_t> by_walker;
    for (std::size_t len = 1; len <= max_prefix; ++len)
      if (detail::prefix_is_right_special(u, cword, len))
        by_walker.push_back(len);
    const auto direct = right_special_prefixes(u, max_prefix, budget);
    CheckResult check{"right-special-methods-agree", nw.render(),
                      by_walker == direct, {}};
    if (!check.pass)
      check.witness = "language scan and standard-word walk disagree";
    report.checks.push_back(std::move(check));
  }

  std::vector<bool> hit(certs.size(), false);
  const std::size_t orbit_levels = *ds.preperiod + *ds.period;
  const std::size_t hard_cap = std::max<std::size_t>(budget / 32, 32768);
  std::size_t level = 0;
  for (std::size_t len = 1; len <= hard_cap; ++len) {
    if (!detail::prefix_is_right_special(u, cword, len)) continue;
    ++level;
    const bool in_horizon = len <= max_prefix;
    if (!in_horizon) {
      const bool all_hit =
          std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      if (all_hit || level > orbit_levels) break;
    }

    const DerivationRecord rec = derivate(u, len, sample, budget);
    const auto matches =
        detail::matching_certificates(rec.derivated, certs, sample, budget);
    for (const std::size_t j : matches) hit[j] = true;
    if (in_horizon) {
      CheckResult check;
      check.check_id = "prefix-matches-one-certificate";
      check.params = "prefix_len=" + std::to_string(len);
      check.pass = matches.size() == 1;
      if (!check.pass) {
        check.witness = "coding " + rec.derivated.prefix(
                            std::min<std::size_t>(sample, 40)) +
                        " matched " + std::to_string(matches.size()) +
                        " certificates";
      } else {
        check.witness = ds.certificates[matches[0]].render();
      }
      report.checks.push_back(std::move(check));
    }
  }

  for (std::size_t j = 0; j < certs.size(); ++j) {
    CheckResult check;
    check.check_id = "certificate-reached";
    check.params = ds.certificates[j].render();
    check.pass = hit[j];
    if (!hit[j]) check.witness = "no right special prefix produced it";
    report.checks.push_back(std::move(check));
  }
  return report;
}

namespace detail {

inline void sweep_general(const MorphismName& w, VerificationReport& rep) {
  const std::size_t n = w.letters.size();
  const DeltaOrbit orbit = delta_orbit(w);
  const auto add = [&](const char* id, bool pass, std::string witness) {
    rep.checks.push_back(CheckResult{id, w.render(), pass,
                                     pass ? std::string{} : witness});
  };

  bool closure = true;
  for (const MorphismName& e : orbit.elements)
    closure = closure && e.letters.size() == n &&
              is_normal(e) && has_both_classes(e.letters) &&
              !in_letter_set(e.letters, "aA");
  add("orbit-closure", closure, "orbit left the normalized general class");

  if (w.letters.back() == 'b' || w.letters.back() == kBeta) {
    std::string rotated = w.letters;
    std::size_t block = 1;
    if (rotated[0] == 'a' || rotated[0] == kAlpha) {
      block = 0;
      while (rotated[block] == rotated[0]) ++block;
      ++block;
    }
    std::rotate(rotated.begin(), rotated.begin() + block, rotated.end());
    add("delta-pure-rotation", delta(w).letters == rotated,
        "delta rewrote a name whose suffix is b/beta");
  }

  const bool pure = orbit.preperiod == 0;
  add("orbit-period-bound",
      pure ? orbit.period <= n : orbit.period <= n - 1,
      "period " + std::to_string(orbit.period));
  const bool has_b = w.letters.find('b') != std::string::npos;
  const bool has_beta = w.letters.find(kBeta) != std::string::npos;
  add("orbit-preperiod-bound",
      has_b && has_beta ? orbit.preperiod <= n - 2
                        : orbit.preperiod <= 2 * n - 3,
      "preperiod " + std::to_string(orbit.preperiod));

  const DerSetReport ds = der_set(w);
  const auto bounds = count_bounds(w);
  add("derset-count-bounds",
      ds.count >= bounds.first && ds.count <= bounds.second,
      "count " + std::to_string(ds.count));

  if (in_letter_set(w.letters, "bB") && !is_power(w).is_proper_power())
    add("standard-count", ds.count == n,
        "count " + std::to_string(ds.count));
}

inline void sweep_two_fixed_points(const MorphismName& w,
                                   VerificationReport& rep) {
  const auto add = [&](const char* id, bool pass, std::string witness) {
    rep.checks.push_back(CheckResult{id, w.render(), pass,
                                     pass ? std::string{} : witness});
  };
  if (w.letters[0] == 'a') {
    const std::string grown = normal_letters(w.letters + "b");
    const std::string v = grown.substr(1);
    add("strip-name-shape",
        grown.front() == 'b' && grown.back() == 'a' &&
            in_letter_set(v, "aB") &&
            count_letter(v, kBeta) == count_letter(w.letters, kAlpha),
        "N(wb) = " + grown);
  }
  if (!is_power(w).is_proper_power()) {
    const std::size_t c0 = der_set(w, '0').count;
    const std::size_t c1 = der_set(w, '1').count;
    add("two-fixed-point-count-0",
        c0 == 1 + count_letter(w.letters, kAlpha), std::to_string(c0));
    add("two-fixed-point-count-1",
        c1 == 1 + count_letter(w.letters, 'a'), std::to_string(c1));
  }
}

}  // namespace detail

// Exhaustive small-name sweep: enumerates every normalized name up to the
// given length and runs the invariant suite for its class, including the
// exchange-suffixed standard names.  Failures become report content.
inline VerificationReport verify_sweep(std::size_t max_name_len,
                                       std::size_t budget = kDefaultBudget) {
  if (max_name_len > 8)
    throw domain_error("verify_sweep: lengths above 8 are not a desk job");
  VerificationReport rep;
  rep.budget = budget;
  for (std::size_t len = 1; len <= max_name_len; ++len) {
    for (const std::string& letters : detail::all_letter_words(len)) {
      if (!detail::is_normal_letters(letters)) continue;
      const MorphismName w{letters, false};

      if (detail::in_letter_set(letters, "aA")) {
        if (is_primitive(w)) detail::sweep_two_fixed_points(w, rep);
        // the exchange-suffixed companion has no fixed point
        if (detail::has_both_classes(letters)) {
          bool threw = false;
          try {
            der_set(MorphismName{letters, true});
          } catch (const domain_error&) {
            threw = true;
          }
          rep.checks.push_back(CheckResult{
              "exchange-over-a-alpha-has-no-fixed-point",
              w.render() + ".E", threw, threw ? "" : "der_set accepted it"});
        }
        continue;
      }
      if (!is_primitive(w)) continue;
      detail::sweep_general(w, rep);

      if (detail::in_letter_set(letters, "bB")) {
        const MorphismName we{letters, true};
        if (!is_power(we).is_proper_power()) {
          const DerSetReport ds = der_set(we);
          rep.checks.push_back(CheckResult{
              "standard-exchange-count", we.render(),
              ds.count == letters.size(), std::to_string(ds.count)});
        }
      }
    }
  }
  return rep;
}

}  // namespace sturm
