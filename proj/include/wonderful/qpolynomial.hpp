#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wonderful/series.hpp"

namespace wonderful {

/// Integer polynomial in q. For a Poincare polynomial the coefficient of q^k
/// is the rank of H^{2k}.
class QPolynomial {
 public:
  QPolynomial() = default;
  // Dense coefficient list, lowest degree first.
  QPolynomial(std::initializer_list<long> coeffs);
  explicit QPolynomial(const std::vector<BigInt>& coeffs);

  static QPolynomial monomial(unsigned k, const BigInt& c = 1);

  const std::map<unsigned, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(unsigned k) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the highest nonzero coefficient; 0 for the zero polynomial.
  unsigned degree() const;
  // Dense list [c_0, ..., c_degree]; empty for zero.
  std::vector<BigInt> dense() const;
  BigInt evaluate(long q) const;

  void add_term(unsigned k, const BigInt& c);

  QPolynomial& operator+=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  bool is_palindromic() const;

  // "1 + 42q + 127q^2", "0" for zero.
  std::string to_string() const;

 private:
  std::map<unsigned, BigInt> coeffs_;
};

/// [j]_q = 1 + q + ... + q^(j-1); [0]_q = 0.
QPolynomial q_analog(unsigned j);

class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// multiplier * (q-polynomial at t^t z^z w^w), asserting integer coefficients.
QPolynomial extract_integral(const TruncatedSeries& s, unsigned t, unsigned z, unsigned w,
                             const BigInt& multiplier);

}  // namespace wonderful
