#include "wonderful/qpolynomial.hpp"

namespace wonderful {

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
  unsigned k = 0;
  for (long c : coeffs) add_term(k++, BigInt(c));
}

QPolynomial::QPolynomial(const std::vector<BigInt>& coeffs) {
  for (unsigned k = 0; k < coeffs.size(); ++k) add_term(k, coeffs[k]);
}

QPolynomial QPolynomial::monomial(unsigned k, const BigInt& c) {
  QPolynomial p;
  p.add_term(k, c);
  return p;
}

BigInt QPolynomial::coefficient(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

unsigned QPolynomial::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::vector<BigInt> QPolynomial::dense() const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> out(degree() + 1, BigInt(0));
  for (const auto& [k, c] : coeffs_) out[k] = c;
  return out;
}

BigInt QPolynomial::evaluate(long q) const {
  BigInt out = 0;
  BigInt power = 1;
  unsigned k = 0;
  for (const auto& [e, c] : coeffs_) {
    for (; k < e; ++k) power *= q;
    out += c * power;
  }
  return out;
}

void QPolynomial::add_term(unsigned k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

bool QPolynomial::is_palindromic() const {
  if (coeffs_.empty()) return true;
  const unsigned lo = coeffs_.begin()->first;
  const unsigned hi = coeffs_.rbegin()->first;
  for (const auto& [k, c] : coeffs_) {
    if (coefficient(lo + hi - k) != c) return false;
  }
  return true;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

QPolynomial q_analog(unsigned j) {
  QPolynomial p;
  for (unsigned k = 0; k < j; ++k) p.add_term(k, 1);
  return p;
}

QPolynomial extract_integral(const TruncatedSeries& s, unsigned t, unsigned z, unsigned w,
                             const BigInt& multiplier) {
  QPolynomial out;
  for (const auto& [k, c] : q_coefficients(s, t, z, w)) {
    Rational scaled = c * Rational(multiplier);
    if (scaled.get_den() != 1) {
      throw IntegralityError("coefficient of q^" + std::to_string(k) + " at t^" +
                             std::to_string(t) + " z^" + std::to_string(z) + " w^" +
                             std::to_string(w) + " is not integral after scaling: " +
                             scaled.get_str());
    }
    out.add_term(k, scaled.get_num());
  }
  return out;
}

}  // namespace wonderful
