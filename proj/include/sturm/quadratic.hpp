#pragma once

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <sturm/error.hpp>

// Exact arithmetic in Q(sqrt(d)): values (p + q*sqrt(d)) / r with integer
// components.  Canonical form: r > 0, gcd(|p|, |q|, r) = 1, d square-free;
// rational values carry q = 0 and d = 1.  Comparisons, floors and field
// operations are exact integer computations; no floating point enters any
// decision.  Components live in 64 bits with 128-bit intermediates, which
// covers slopes of desk-scale incidence matrices and prefix generation.

namespace sturm {

namespace detail {

using int128 = __int128;

inline long long narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("quadratic number component overflow");
  return static_cast<long long>(v);
}

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Sign of p + q*sqrt(d), d >= 1.
inline int radical_sign(int128 p, int128 q, int128 d) {
  if (q == 0) return p > 0 ? 1 : p < 0 ? -1 : 0;
  if (p == 0) return q > 0 ? 1 : -1;
  if (p > 0 && q > 0) return 1;
  if (p < 0 && q < 0) return -1;
  const int128 lhs = p * p;
  const int128 rhs = q * q * d;
  if (lhs == rhs) return 0;  // only possible when d is a perfect square
  const bool p_side_bigger = lhs > rhs;
  return (p > 0) == p_side_bigger ? (p > 0 ? 1 : -1) : (q > 0 ? 1 : -1);
}

}  // namespace detail

class QuadraticNumber {
 public:
  QuadraticNumber() : QuadraticNumber(0) {}
  QuadraticNumber(long long integer) : p_(integer), q_(0), r_(1), d_(1) {}

  QuadraticNumber(long long p, long long q, long long r, long long d) {
    init(p, q, r, d);
  }

  static QuadraticNumber rational(long long num, long long den) {
    return QuadraticNumber(num, 0, den, 1);
  }

  static QuadraticNumber sqrt_of(long long d) {
    return QuadraticNumber(0, 1, 1, d);
  }

  long long p() const { return p_; }
  long long q() const { return q_; }
  long long r() const { return r_; }
  long long d() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticNumber conjugate() const {
    return make(p_, -q_, r_, d_);
  }

  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    return make(-detail::int128(x.p_), -detail::int128(x.q_), x.r_, x.d_);
  }

  friend QuadraticNumber operator+(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    const long long d = common_radical(a, b);
    using detail::int128;
    return make(int128(a.p_) * b.r_ + int128(b.p_) * a.r_,
                int128(a.q_) * b.r_ + int128(b.q_) * a.r_,
                int128(a.r_) * b.r_, d);
  }

  friend QuadraticNumber operator-(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    return a + (-b);
  }

  friend QuadraticNumber operator*(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    const long long d = common_radical(a, b);
    using detail::int128;
    return make(int128(a.p_) * b.p_ + int128(a.q_) * b.q_ * d,
                int128(a.p_) * b.q_ + int128(a.q_) * b.p_,
                int128(a.r_) * b.r_, d);
  }

  friend QuadraticNumber operator/(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    if (b.sign() == 0) throw domain_error("quadratic division by zero");
    const long long d = common_radical(a, b);
    using detail::int128;
    // a / b = a * conj(b) * r_b / (p_b^2 - q_b^2 d)
    const int128 norm = int128(b.p_) * b.p_ - int128(b.q_) * b.q_ * d;
    return make((int128(a.p_) * b.p_ - int128(a.q_) * b.q_ * d) * b.r_,
                (int128(a.q_) * b.p_ - int128(a.p_) * b.q_) * b.r_,
                int128(a.r_) * norm, d);
  }

  int sign() const { return detail::radical_sign(p_, q_, d_); }

  friend std::strong_ordering operator<=>(const QuadraticNumber& a,
                                          const QuadraticNumber& b) {
    const int s = (a - b).sign();
    return s < 0   ? std::strong_ordering::less
           : s > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  long long floor_int() const {
    // Estimate in floating point, then certify with exact comparisons.
    const long double approx =
        (static_cast<long double>(p_) +
         static_cast<long double>(q_) *
             std::sqrt(static_cast<long double>(d_))) /
        static_cast<long double>(r_);
    long long m = static_cast<long long>(std::floor(approx));
    while (compare_to_integer(m) < 0) --m;        // value < m
    while (compare_to_integer(m + 1) >= 0) ++m;   // value >= m + 1
    return m;
  }

  long long ceil_int() const { return -(-*this).floor_int(); }

  // Canonical rendering "(p+q*sqrt(d))/r".
  std::string render() const {
    std::string out = "(" + std::to_string(p_);
    out += q_ < 0 ? "-" : "+";
    out += std::to_string(q_ < 0 ? -q_ : q_);
    out += "*sqrt(" + std::to_string(d_) + "))/" + std::to_string(r_);
    return out;
  }

  static QuadraticNumber parse(std::string_view text);

 private:
  static QuadraticNumber make(detail::int128 p, detail::int128 q,
                              detail::int128 r, long long d) {
    QuadraticNumber out;
    out.init_wide(p, q, r, d);
    return out;
  }

  void init(long long p, long long q, long long r, long long d) {
    init_wide(p, q, r, d);
  }

  void init_wide(detail::int128 p, detail::int128 q, detail::int128 r,
                 long long d) {
    if (r == 0) throw domain_error("quadratic number with zero denominator");
    if (d < 1) throw domain_error("quadratic number needs radicand >= 1");
    // Pull square factors of d into q, so equal values share components.
    for (long long e = 2; e * e <= d && e <= 2'000'000; ++e) {
      while (d % (e * e) == 0) {
        d /= e * e;
        q *= e;
      }
    }
    if (d == 1) {  // sqrt(1) is rational
      p += q;
      q = 0;
    }
    if (q == 0) d = 1;
    if (r < 0) {
      p = -p;
      q = -q;
      r = -r;
    }
    detail::int128 g = detail::gcd128(detail::gcd128(p, q), r);
    if (g == 0) g = 1;
    p_ = detail::narrow(p / g);
    q_ = detail::narrow(q / g);
    r_ = detail::narrow(r / g);
    d_ = d;
  }

  static long long common_radical(const QuadraticNumber& a,
                                  const QuadraticNumber& b) {
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    if (a.d_ != b.d_)
      throw domain_error("mixed radicals are out of scope");
    return a.d_;
  }

  // Sign of (value - m).
  int compare_to_integer(long long m) const {
    using detail::int128;
    return detail::radical_sign(int128(p_) - int128(m) * r_, q_, d_);
  }

  long long p_, q_, r_, d_;
};

inline QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  // Accepts the canonical form "(p+q*sqrt(d))/r"; r defaults to 1.
  const auto fail = [] { throw parse_error("bad quadratic number literal"); };
  std::size_t i = 0;
  const auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) fail();
    ++i;
  };
  const auto integer = [&]() -> long long {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
      neg = text[i++] == '-';
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      fail();
    long long v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  expect('(');
  const long long p = integer();
  if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail();
  const long long q = integer();
  expect('*');
  for (char c : {'s', 'q', 'r', 't', '('}) expect(c);
  const long long d = integer();
  expect(')');
  expect(')');
  long long r = 1;
  if (i < text.size()) {
    expect('/');
    r = integer();
  }
  if (i != text.size()) fail();
  return QuadraticNumber(p, q, r, d);
}

}  // namespace sturm
