#pragma once

// Exact truncated power series in the four formal variables q, t, z, w.
//
// Truncation is by t-degree only. Every series built here keeps the
// exponents of z and w bounded by the exponent of t, which keeps the term
// maps finite; insertion checks this and throws on violation.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wonderful {

using BigInt = mpz_class;
using Rational = mpq_class;

class QPolynomial;

struct Monomial {
  unsigned q = 0;
  unsigned t = 0;
  unsigned z = 0;
  unsigned w = 0;

  // Ordered by (t, z, w, q), the serialization order.
  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.q <=> b.q;
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const { return {q + o.q, t + o.t, z + o.z, w + o.w}; }

  std::string to_string() const;
};

class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TruncatedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit TruncatedSeries(unsigned trunc) : trunc_(trunc) {}

  static TruncatedSeries constant(unsigned trunc, const Rational& c);
  static TruncatedSeries monomial(unsigned trunc, Monomial m, const Rational& c = 1);
  // p(q) * m, for a polynomial p in q.
  static TruncatedSeries from_q_polynomial(unsigned trunc, const QPolynomial& p, Monomial m,
                                           const Rational& c = 1);

  unsigned trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Throws std::out_of_range when m.t exceeds the truncation order.
  Rational coeff(const Monomial& m) const;

  // Accumulates c into the coefficient of m. Terms above the truncation
  // order are dropped; zero results are erased.
  void add_term(const Monomial& m, const Rational& c);

  // Largest exponent of the given variable present, or 0 for the zero series.
  unsigned max_q() const;
  unsigned min_t() const;  // t-valuation; trunc()+1 for the zero series
  bool has_z() const;
  bool has_w() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  unsigned trunc_;
  TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

/// exp(s) = sum_k s^k / k!. The t^0 part of s must vanish.
TruncatedSeries exp(const TruncatedSeries& s);

/// 1/(1-s) as the geometric sum up to s^trunc. The t^0 part of s must vanish.
TruncatedSeries invert_one_minus(const TruncatedSeries& s);

/// Replaces z by d/dt monomial by monomial: z^k t^m -> m!/(m-k)! t^(m-k),
/// and z^k t^m with k > m -> 0. The result contains no z.
TruncatedSeries subst_z_derivative(const TruncatedSeries& s);

/// Formal antiderivative in t with zero constant. Throws if z is present.
TruncatedSeries integrate_t(const TruncatedSeries& s);

/// Formal derivative in t (test and invariant support).
TruncatedSeries differentiate_t(const TruncatedSeries& s);

TruncatedSeries negate_t(const TruncatedSeries& s);
TruncatedSeries eval_w(const TruncatedSeries& s, const Rational& v);
TruncatedSeries scale_t(const TruncatedSeries& s, const Rational& c);

/// Same terms, re-truncated to a (not larger) order.
TruncatedSeries truncate(const TruncatedSeries& s, unsigned trunc);

/// Polynomial in q collected from the terms with the given (t, z, w) exponents.
std::map<unsigned, Rational> q_coefficients(const TruncatedSeries& s, unsigned t, unsigned z = 0,
                                            unsigned w = 0);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace wonderful
