#include "wonderful/series.hpp"

#include <sstream>

#include "wonderful/qpolynomial.hpp"

namespace wonderful {

namespace {

void require_same_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.trunc() != b.trunc()) {
    throw TruncationMismatch("truncation orders differ: " + std::to_string(a.trunc()) + " vs " +
                             std::to_string(b.trunc()));
  }
}

void require_no_constant(const TruncatedSeries& s, const char* op) {
  if (s.min_t() == 0) {
    throw std::domain_error(std::string(op) + ": argument has a nonzero t^0 part");
  }
}

Rational pow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

std::string Monomial::to_string() const {
  std::string out;
  auto var = [&out](char name, unsigned e) {
    if (e == 0) return;
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var('q', q);
  var('z', z);
  var('w', w);
  var('t', t);
  return out.empty() ? "1" : out;
}

TruncatedSeries TruncatedSeries::constant(unsigned trunc, const Rational& c) {
  TruncatedSeries s(trunc);
  s.add_term({}, c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(unsigned trunc, Monomial m, const Rational& c) {
  TruncatedSeries s(trunc);
  s.add_term(m, c);
  return s;
}

TruncatedSeries TruncatedSeries::from_q_polynomial(unsigned trunc, const QPolynomial& p, Monomial m,
                                                   const Rational& c) {
  TruncatedSeries s(trunc);
  for (const auto& [k, a] : p.coefficients()) {
    Monomial mk = m;
    mk.q += k;
    s.add_term(mk, c * Rational(a));
  }
  return s;
}

Rational TruncatedSeries::coeff(const Monomial& m) const {
  if (m.t > trunc_) {
    throw std::out_of_range("coefficient query t^" + std::to_string(m.t) +
                            " beyond truncation order " + std::to_string(trunc_));
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
  if (m.t > trunc_ || c == 0) return;
  if (m.z > m.t || m.w > m.t) {
    throw std::logic_error("series invariant violated: term " + m.to_string() +
                           " has a z or w exponent above its t exponent");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    Rational sum = c;
    sum.canonicalize();
    it->second += sum;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned TruncatedSeries::max_q() const {
  unsigned out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.q);
  return out;
}

unsigned TruncatedSeries::min_t() const {
  return terms_.empty() ? trunc_ + 1 : terms_.begin()->first.t;
}

bool TruncatedSeries::has_z() const {
  for (const auto& [m, c] : terms_) {
    if (m.z != 0) return true;
  }
  return false;
}

bool TruncatedSeries::has_w() const {
  for (const auto& [m, c] : terms_) {
    if (m.w != 0) return true;
  }
  return false;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_trunc(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_trunc(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, a] : terms_) a *= c;
  return *this;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (m != Monomial{}) os << "*" << m.to_string();
  }
  os << " + O(t^" << trunc_ + 1 << ")";
  return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  out += b;
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  out -= b;
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_trunc(a, b);
  TruncatedSeries out(a.trunc());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // terms are ordered by t first
      if (ma.t + mb.t > a.trunc()) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  TruncatedSeries out = s;
  out *= c;
  return out;
}

TruncatedSeries exp(const TruncatedSeries& s) {
  require_no_constant(s, "exp");
  const unsigned n = s.trunc();
  TruncatedSeries out = TruncatedSeries::constant(n, 1);
  TruncatedSeries power = out;
  // s^k has t-valuation >= k
  for (unsigned k = 1; k <= n; ++k) {
    power = mul(power, s);
    if (power.is_zero()) break;
    power *= Rational(1, k);
    out += power;
  }
  return out;
}

TruncatedSeries invert_one_minus(const TruncatedSeries& s) {
  require_no_constant(s, "invert_one_minus");
  const unsigned n = s.trunc();
  TruncatedSeries out = TruncatedSeries::constant(n, 1);
  TruncatedSeries power = out;
  for (unsigned k = 1; k <= n; ++k) {
    power = mul(power, s);
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

TruncatedSeries subst_z_derivative(const TruncatedSeries& s) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) {
    if (m.z > m.t) continue;
    Rational falling = 1;
    for (unsigned i = 0; i < m.z; ++i) falling *= m.t - i;
    out.add_term({m.q, m.t - m.z, 0, m.w}, c * falling);
  }
  return out;
}

TruncatedSeries integrate_t(const TruncatedSeries& s) {
  if (s.has_z()) {
    throw std::domain_error("integrate_t: series still contains z; substitute z first");
  }
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) {
    out.add_term({m.q, m.t + 1, 0, m.w}, c / Rational(m.t + 1));
  }
  return out;
}

TruncatedSeries differentiate_t(const TruncatedSeries& s) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) {
    if (m.t == 0) continue;
    out.add_term({m.q, m.t - 1, m.z, m.w}, c * Rational(m.t));
  }
  return out;
}

TruncatedSeries negate_t(const TruncatedSeries& s) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) out.add_term(m, m.t % 2 == 0 ? c : Rational(-c));
  return out;
}

TruncatedSeries eval_w(const TruncatedSeries& s, const Rational& v) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) out.add_term({m.q, m.t, m.z, 0}, c * pow(v, m.w));
  return out;
}

TruncatedSeries scale_t(const TruncatedSeries& s, const Rational& c) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, a] : s.terms()) out.add_term(m, a * pow(c, m.t));
  return out;
}

TruncatedSeries truncate(const TruncatedSeries& s, unsigned trunc) {
  if (trunc > s.trunc()) {
    throw TruncationMismatch("cannot raise truncation order from " + std::to_string(s.trunc()) +
                             " to " + std::to_string(trunc));
  }
  TruncatedSeries out(trunc);
  for (const auto& [m, c] : s.terms()) out.add_term(m, c);
  return out;
}

std::map<unsigned, Rational> q_coefficients(const TruncatedSeries& s, unsigned t, unsigned z,
                                            unsigned w) {
  if (t > s.trunc()) {
    throw std::out_of_range("coefficient query t^" + std::to_string(t) +
                            " beyond truncation order " + std::to_string(s.trunc()));
  }
  std::map<unsigned, Rational> out;
  auto it = s.terms().lower_bound(Monomial{0, t, z, w});
  for (; it != s.terms().end(); ++it) {
    const Monomial& m = it->first;
    if (m.t != t || m.z != z || m.w != w) break;
    out[m.q] = it->second;
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace wonderful
