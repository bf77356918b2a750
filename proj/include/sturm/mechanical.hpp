#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <sturm/continued_fraction.hpp>
#include <sturm/error.hpp>
#include <sturm/morphism.hpp>
#include <sturm/name.hpp>
#include <sturm/quadratic.hpp>
#include <sturm/word_stream.hpp>

// Exact mechanical and characteristic words.  The letter at index n of the
// lower mechanical word with slope gamma and intercept rho is
// floor((n+1)gamma + rho) - floor(n gamma + rho); the upper variant uses
// ceilings.  Everything runs on QuadraticNumber, so no letter ever depends
// on floating point.

namespace sturm {

inline WordStream mechanical_word(const QuadraticNumber& slope,
                                  const QuadraticNumber& intercept,
                                  bool upper = false) {
  if (slope.is_rational())
    throw domain_error("mechanical_word: slope must be irrational");
  if (slope.sign() <= 0 || slope >= QuadraticNumber(1))
    throw domain_error("mechanical_word: slope must lie in (0,1)");
  if (intercept.sign() < 0 || intercept >= QuadraticNumber(1))
    throw domain_error("mechanical_word: intercept must lie in [0,1)");

  struct State {
    QuadraticNumber slope;
    QuadraticNumber acc;       // n*gamma + rho for the next index n
    long long prev;            // floor/ceil at the current acc
    bool upper;
  };
  auto st = std::make_shared<State>();
  st->slope = slope;
  st->acc = intercept;
  st->prev = upper ? intercept.ceil_int() : intercept.floor_int();
  st->upper = upper;
  return WordStream(
      std::string(upper ? "s'(" : "s(") + slope.render() + "," +
          intercept.render() + ")",
      [st](std::string& buf, std::size_t want) {
        while (buf.size() < want) {
          st->acc = st->acc + st->slope;
          const long long next =
              st->upper ? st->acc.ceil_int() : st->acc.floor_int();
          buf.push_back(static_cast<char>('0' + (next - st->prev)));
          st->prev = next;
        }
      });
}

// Characteristic word c(gamma) by the standard-pair recursion: with
// gamma = [0; a1, a2, ...] put d1 = a1 - 1 and dk = ak, then
// s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2};  c(gamma) = lim s_k.
// Every s_k is a prefix of the next, so the buffer is just the largest
// pair member computed so far.
inline WordStream characteristic_word(const ContinuedFraction& gamma) {
  gamma.validate();
  if (!gamma.eventually_periodic())
    throw domain_error("characteristic_word: slope must be irrational");
  struct State {
    ContinuedFraction cf;
    std::string prev = "1";  // s_{k-1}
    std::string cur = "0";   // s_k
    std::size_t k = 0;       // index of cur
  };
  auto st = std::make_shared<State>();
  st->cf = gamma;
  return WordStream(
      "c(" + gamma.canonical().render() + ")",
      [st](std::string& buf, std::size_t want) {
        while (st->cur.size() < want) {
          ++st->k;
          const long long d =
              st->cf.quotient(st->k) - (st->k == 1 ? 1 : 0);
          std::string next;
          next.reserve(st->cur.size() * (d + 1) + st->prev.size());
          for (long long i = 0; i < d; ++i) next += st->cur;
          next += st->prev;
          st->prev = std::move(st->cur);
          st->cur = std::move(next);
        }
        buf.append(st->cur, buf.size(), want - buf.size());
      });
}

// The derivated words of the standard word c(gamma), gamma < 1/2, given by
// shifting the continued fraction: with gamma = [0; c1+1, c2, c3, ...],
//   Der(c(gamma)) = { c(delta) : delta = [0; c_k+1-i, c_{k+1}, ...],
//                     0 <= i <= c_k - 1, (k,i) != (1,0) }.
// Eventual periodicity keeps the set finite; results are canonical and
// deduplicated, sorted by their rendering.
inline std::vector<ContinuedFraction> cf_der_set(
    const ContinuedFraction& gamma) {
  const ContinuedFraction cf = gamma.canonical();
  cf.validate();
  if (!cf.eventually_periodic())
    throw domain_error("cf_der_set: need an eventually periodic slope");
  if (cf.quotient(1) < 2)
    throw domain_error(
        "cf_der_set: slope must be < 1/2; complement the fraction first");

  const std::size_t pre = cf.preperiod.size(), per = cf.period.size();
  const auto tail_after = [&](std::size_t k) {
    // Quotients a_{k+1}, a_{k+2}, ... as (preperiod, period) lists.
    ContinuedFraction t;
    t.period = cf.period;
    if (k < pre) {
      t.preperiod.assign(cf.preperiod.begin() + k, cf.preperiod.end());
    } else if (per > 0) {
      const std::size_t shift = (k - pre) % per;
      std::rotate(t.period.begin(), t.period.begin() + shift,
                  t.period.end());
    }
    return t;
  };

  std::set<std::string> seen;
  std::vector<ContinuedFraction> out;
  for (std::size_t k = 1; k <= pre + per + 1; ++k) {
    const long long ck = cf.quotient(k) - (k == 1 ? 1 : 0);
    for (long long i = 0; i <= ck - 1; ++i) {
      if (k == 1 && i == 0) continue;  // that would be gamma itself
      ContinuedFraction delta = tail_after(k);
      delta.preperiod.insert(delta.preperiod.begin(), ck + 1 - i);
      delta = delta.canonical();
      if (seen.insert(delta.render()).second) out.push_back(delta);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ContinuedFraction& a, const ContinuedFraction& b) {
              return a.render() < b.render();
            });
  return out;
}

// Density of the letter 1 in the fixed point, from the Perron eigenvector
// of the incidence matrix.  Letter counts transform by the transpose, so
// with t = trace and lambda = (t + sqrt(t^2-4))/2 the frequency vector is
// proportional to (m10, lambda - m00) and the slope is its normalized
// second component.
inline QuadraticNumber slope_of_fixed_point(const MorphismName& w) {
  if (w.exchange)
    throw domain_error("slope_of_fixed_point: plain names only");
  if (!is_primitive(w))
    throw domain_error("slope_of_fixed_point: morphism is not primitive");
  const IncidenceMatrix m = matrix_of(w);
  const long long t = m.trace();
  const QuadraticNumber lambda(t, 1, 2, t * t - 4);
  const QuadraticNumber f0(m.entry(1, 0));
  const QuadraticNumber f1 = lambda - QuadraticNumber(m.entry(0, 0));
  return f1 / (f0 + f1);
}

}  // namespace sturm
