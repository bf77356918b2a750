#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <sturm/error.hpp>
#include <sturm/quadratic.hpp>

// Continued fractions of slopes in (0, 1): the leading term is fixed to 0
// and only the partial quotients a_1, a_2, ... are stored, split into a
// preperiod and a (possibly empty) period.  Text form "[0; 2, (1)]".
// The canonical representative has a primitive period rolled as far left
// as possible, so equal values compare equal componentwise.

namespace sturm {

struct ContinuedFraction {
  std::vector<long long> preperiod;
  std::vector<long long> period;  // empty means a finite (rational) fraction

  static ContinuedFraction parse(std::string_view text);
  std::string render() const;

  bool eventually_periodic() const { return !period.empty(); }

  // 1-based partial quotient a_k, cycling through the period.
  long long quotient(std::size_t k) const {
    if (k == 0) throw domain_error("quotient index is 1-based");
    if (k <= preperiod.size()) return preperiod[k - 1];
    if (period.empty())
      throw domain_error("finite continued fraction has no quotient there");
    return period[(k - 1 - preperiod.size()) % period.size()];
  }

  ContinuedFraction canonical() const {
    ContinuedFraction out = *this;
    if (!out.period.empty()) {
      // Shrink the period to its primitive root.
      for (std::size_t len = 1; len <= out.period.size() / 2; ++len) {
        if (out.period.size() % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < out.period.size() && ok; ++i)
          ok = out.period[i] == out.period[i % len];
        if (ok) {
          out.period.resize(len);
          break;
        }
      }
      // Roll the period left across an agreeing preperiod tail.
      while (!out.preperiod.empty() &&
             out.preperiod.back() == out.period.back()) {
        out.preperiod.pop_back();
        std::rotate(out.period.begin(), out.period.end() - 1,
                    out.period.end());
      }
    }
    return out;
  }

  bool operator==(const ContinuedFraction& other) const {
    const ContinuedFraction a = canonical(), b = other.canonical();
    return a.preperiod == b.preperiod && a.period == b.period;
  }

  // Exact value as an element of Q(sqrt(d)).
  QuadraticNumber value() const {
    validate();
    QuadraticNumber tail;
    std::size_t fold_from = preperiod.size();
    if (!period.empty()) {
      // x = [p_1; p_2, ..., p_m, x]  =>  c x^2 + (dd - a) x - b = 0
      long long a = 1, b = 0, c = 0, dd = 1;
      for (long long qk : period) {
        const long long na = a * qk + b, nc = c * qk + dd;
        b = a;
        dd = c;
        a = na;
        c = nc;
      }
      const long long disc = (dd - a) * (dd - a) + 4 * b * c;
      tail = QuadraticNumber(a - dd, 1, 2 * c, disc);
    } else {
      if (preperiod.empty())
        throw domain_error("empty continued fraction has no value");
      tail = QuadraticNumber(preperiod.back());
      fold_from = preperiod.size() - 1;
    }
    QuadraticNumber v = tail;
    for (std::size_t i = fold_from; i-- > 0;)
      v = QuadraticNumber(preperiod[i]) + QuadraticNumber(1) / v;
    return QuadraticNumber(1) / v;
  }

  // Continued fraction of 1 - value:  [0; a1, ...] with a1 >= 2 maps to
  // [0; 1, a1 - 1, a2, ...] and [0; 1, a2, ...] maps back to [0; a2 + 1, ...].
  ContinuedFraction complement() const {
    validate();
    ContinuedFraction out = *this;
    // Make sure two leading quotients are materialized in the preperiod.
    while (out.preperiod.size() < 2 && !out.period.empty()) {
      out.preperiod.push_back(out.period.front());
      std::rotate(out.period.begin(), out.period.begin() + 1,
                  out.period.end());
    }
    if (out.preperiod.empty())
      throw domain_error("empty continued fraction");
    if (out.preperiod[0] >= 2) {
      out.preperiod[0] -= 1;
      out.preperiod.insert(out.preperiod.begin(), 1);
    } else {
      if (out.preperiod.size() < 2)
        throw domain_error("cannot complement [0; 1]");
      out.preperiod.erase(out.preperiod.begin());
      out.preperiod[0] += 1;
    }
    return out.canonical();
  }

  void validate() const {
    for (long long q : preperiod)
      if (q < 1) throw domain_error("partial quotients must be >= 1");
    for (long long q : period)
      if (q < 1) throw domain_error("partial quotients must be >= 1");
  }
};

inline ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  ContinuedFraction out;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw parse_error("bad continued fraction literal");
    ++i;
  };
  const auto integer = [&]() -> long long {
    skip_ws();
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("bad continued fraction literal");
    long long v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  expect('[');
  if (integer() != 0)
    throw parse_error("continued fraction must start with 0 (slope in (0,1))");
  expect(';');
  bool in_period = false, done = false;
  while (!done) {
    skip_ws();
    if (!in_period && i < text.size() && text[i] == '(') {
      ++i;
      in_period = true;
      continue;
    }
    (in_period ? out.period : out.preperiod).push_back(integer());
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (in_period) {
      expect(')');
      in_period = false;
    }
    expect(']');
    done = true;
  }
  if (i != text.size()) throw parse_error("bad continued fraction literal");
  if (out.preperiod.empty() && out.period.empty())
    throw parse_error("continued fraction needs at least one quotient");
  out.validate();
  return out;
}

inline std::string ContinuedFraction::render() const {
  std::string out = "[0;";
  bool first = true;
  for (long long q : preperiod) {
    out += first ? " " : ", ";
    out += std::to_string(q);
    first = false;
  }
  if (!period.empty()) {
    out += first ? " (" : ", (";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(period[i]);
    }
    out += ")";
  }
  out += "]";
  return out;
}

// Continued fraction expansion of an exact value in (0, 1); quadratic
// irrationals repeat their tail state, which closes the period.
inline ContinuedFraction to_continued_fraction(const QuadraticNumber& x) {
  if (x.sign() <= 0 || x >= QuadraticNumber(1))
    throw domain_error("continued fraction expansion needs 0 < x < 1");
  ContinuedFraction out;
  std::vector<long long> quots;
  std::map<std::tuple<long long, long long, long long, long long>,
           std::size_t>
      seen;
  QuadraticNumber rem = x;
  while (true) {
    if (rem.sign() == 0) {  // rational tail terminated
      out.preperiod = quots;
      return out;
    }
    if (!rem.is_rational()) {
      const auto key = std::make_tuple(rem.p(), rem.q(), rem.r(), rem.d());
      if (const auto it = seen.find(key); it != seen.end()) {
        out.preperiod.assign(quots.begin(), quots.begin() + it->second);
        out.period.assign(quots.begin() + it->second, quots.end());
        return out.canonical();
      }
      seen.emplace(key, quots.size());
    }
    const QuadraticNumber inv = QuadraticNumber(1) / rem;
    const long long a = inv.floor_int();
    quots.push_back(a);
    rem = inv - QuadraticNumber(a);
    if (quots.size() > 4096)
      throw domain_error("continued fraction expansion did not close");
  }
}

}  // namespace sturm
