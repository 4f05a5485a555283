#include "wonderful/formulas.hpp"

#include <algorithm>

namespace wonderful {

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

Rational inverse_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

// Order at which a series must be expanded before z -> d/dt and one
// integration, when every z comes with at least `t_per_z` powers of t.
unsigned working_order(unsigned trunc, unsigned t_per_z, bool integrate) {
  const unsigned reach = integrate ? (trunc == 0 ? 0 : trunc - 1) : trunc;
  // m - k <= reach with k <= m / t_per_z
  const unsigned m = reach * t_per_z / (t_per_z - 1);
  return std::max(trunc, m);
}

// (z/r) q [i-2]_q (rt)^i / i!, summed over 3 <= i <= trunc.
TruncatedSeries weak_exponent(unsigned r, unsigned trunc) {
  TruncatedSeries out(trunc);
  for (unsigned i = 3; i <= trunc; ++i) {
    Rational c = rational_pow(Rational(r), i) / Rational(r) * inverse_factorial(i);
    out += TruncatedSeries::from_q_polynomial(trunc, q_analog(i - 2), {1, i, 1, 0}, c);
  }
  return out;
}

TruncatedSeries substitute_and_integrate(const TruncatedSeries& s, unsigned trunc) {
  return truncate(integrate_t(subst_z_derivative(s)), trunc);
}

}  // namespace

TruncatedSeries psi(unsigned trunc) {
  TruncatedSeries exponent = TruncatedSeries::monomial(trunc, {0, 1, 0, 0});
  for (unsigned i = 3; i <= trunc; ++i) {
    exponent += TruncatedSeries::from_q_polynomial(trunc, q_analog(i - 2), {1, i, 1, 0},
                                                   inverse_factorial(i));
  }
  return exp(exponent);
}

QPolynomial poincare_from_psi(unsigned n) {
  if (n < 2) throw std::invalid_argument("poincare_from_psi: n must be at least 2");
  const unsigned trunc = std::max(2u, 2 * n - 3);
  const TruncatedSeries s = psi(trunc);
  QPolynomial out;
  for (unsigned z = 0; z + 2 <= n; ++z) {
    const unsigned t = n + z - 1;
    out += extract_integral(s, t, z, 0, factorial(t));
  }
  return out;
}

TruncatedSeries k_series(unsigned r, unsigned trunc) {
  if (r == 0) throw std::invalid_argument("k_series: r must be positive");
  TruncatedSeries exponent = TruncatedSeries::monomial(trunc, {0, 1, 0, 0});
  exponent += weak_exponent(r, trunc);
  return exp(exponent);
}

TruncatedSeries gamma_series(unsigned r, unsigned trunc, GammaReading reading) {
  if (r == 0) throw std::invalid_argument("gamma_series: r must be positive");
  TruncatedSeries prefactor(trunc);
  for (unsigned i = 2; i <= trunc + 1; ++i) {
    prefactor += TruncatedSeries::from_q_polynomial(trunc, q_analog(i - 1), {1, i - 1, 0, 0},
                                                    inverse_factorial(i - 1));
  }
  TruncatedSeries exponent(trunc);
  if (reading == GammaReading::Standard) {
    exponent = weak_exponent(r, trunc);
  } else {
    for (unsigned i = 3; i <= trunc; ++i) {
      Rational c = rational_pow(Rational(r) / Rational(factorial(i)), i) / Rational(r);
      exponent += TruncatedSeries::from_q_polynomial(trunc, q_analog(i - 2), {1, i, 1, 0}, c);
    }
  }
  return prefactor * exp(exponent);
}

TruncatedSeries big_gamma(unsigned r, unsigned trunc, GammaReading reading) {
  return substitute_and_integrate(gamma_series(r, working_order(trunc, 3, true), reading), trunc);
}

TruncatedSeries cal_k(unsigned r, unsigned trunc) {
  TruncatedSeries out = TruncatedSeries::constant(trunc, 1);
  out += substitute_and_integrate(k_series(r, working_order(trunc, 3, true)), trunc);
  return out;
}

TruncatedSeries phi_full_monomial(unsigned r, unsigned trunc, GammaReading reading) {
  return invert_one_minus(big_gamma(r, trunc, reading)) * cal_k(r, trunc);
}

TruncatedSeries phi_rr(unsigned r, unsigned trunc) {
  if (r < 2) throw std::invalid_argument("phi_rr: r must be at least 2 (r = 1 is type A)");
  TruncatedSeries phi = phi_full_monomial(r, trunc);
  if (r >= 3) return phi;
  // no lowest strong vertex on a coordinate plane when r = 2
  TruncatedSeries correction = TruncatedSeries::constant(trunc, 1);
  correction.add_term({1, 2, 0, 0}, Rational(-1, 2));
  return correction * phi;
}

QPolynomial poincare_from_series(const GroupId& g) {
  const unsigned n = g.n();
  switch (g.variant()) {
    case Variant::TypeA:
      return poincare_from_psi(n);
    case Variant::FullMonomial:
      return extract_integral(phi_full_monomial(g.r(), n), n, 0, 0, factorial(n));
    case Variant::RR:
      return extract_integral(phi_rr(g.r(), n), n, 0, 0, factorial(n));
  }
  return {};
}

TruncatedSeries f_type_a(unsigned trunc) {
  TruncatedSeries exponent(trunc);
  for (unsigned i = 2; i <= trunc; ++i) exponent.add_term({0, i, 1, 0}, 1);
  return exp(exponent) - TruncatedSeries::constant(trunc, 1);
}

BigInt kirkman_cayley(unsigned n, unsigned s) {
  if (n < 2 || s < 1 || s > n - 1) {
    throw std::invalid_argument("kirkman_cayley: need n >= 2 and 1 <= s <= n-1");
  }
  BigInt num = binomial(n - 2, s - 1) * binomial(n + s - 1, s - 1);
  if (num % s != 0) throw IntegralityError("Kirkman-Cayley quotient is not integral");
  return num / s;
}

TruncatedSeries x_type_a(unsigned trunc) {
  const unsigned work = working_order(trunc, 2, false);
  // (z/2) t^2 / (1 + t)
  TruncatedSeries exponent(work);
  for (unsigned i = 2; i <= work; ++i) {
    exponent.add_term({0, i, 1, 0}, Rational(i % 2 == 0 ? 1 : -1, 2));
  }
  TruncatedSeries s = exp(exponent) - TruncatedSeries::constant(work, 1);
  return truncate(subst_z_derivative(s), trunc);
}

TruncatedSeries tilde_gamma(unsigned trunc) {
  TruncatedSeries prefactor(trunc);
  for (unsigned i = 1; i <= trunc + 1; ++i) {
    prefactor.add_term({0, i - 1, 0, 0}, Rational(2 * i) * rational_pow(Rational(2), i - 1));
  }
  TruncatedSeries exponent(trunc);
  for (unsigned j = 2; j <= trunc; ++j) {
    exponent.add_term({0, j, 1, 1}, rational_pow(Rational(2), j) / 2);
  }
  return prefactor * exp(exponent);
}

TruncatedSeries tilde_big_gamma(unsigned trunc) {
  return substitute_and_integrate(tilde_gamma(working_order(trunc, 2, true)), trunc);
}

namespace {

// w * s; every term of s already has w below its t-degree.
TruncatedSeries w_times(const TruncatedSeries& s) {
  TruncatedSeries out(s.trunc());
  for (const auto& [m, c] : s.terms()) out.add_term({m.q, m.t, m.z, m.w + 1}, c);
  return out;
}

}  // namespace

TruncatedSeries f_cy_b(unsigned trunc) { return invert_one_minus(w_times(tilde_big_gamma(trunc))); }

TruncatedSeries f_cy_d(unsigned trunc) {
  const TruncatedSeries wg = w_times(tilde_big_gamma(trunc));
  TruncatedSeries one_minus_t = TruncatedSeries::constant(trunc, 1);
  one_minus_t.add_term({0, 1, 0, 0}, -1);
  TruncatedSeries numerator = one_minus_t * wg;
  numerator.add_term({0, 1, 0, 1}, -2);
  numerator.add_term({0, 2, 0, 1}, -2);
  numerator.add_term({0, 2, 0, 2}, -2);
  return numerator * invert_one_minus(wg);
}

TruncatedSeries named_series(const std::string& name, unsigned r, unsigned trunc, GammaReading reading) {
  if (name == "psi") return psi(trunc);
  if (name == "K") return k_series(r, trunc);
  if (name == "gamma") return gamma_series(r, trunc, reading);
  if (name == "Gamma") return big_gamma(r, trunc, reading);
  if (name == "calK") return cal_k(r, trunc);
  if (name == "phiFull") return phi_full_monomial(r, trunc, reading);
  if (name == "phiRR") return phi_rr(r, trunc);
  if (name == "F") return f_type_a(trunc);
  if (name == "X") return x_type_a(trunc);
  if (name == "tildeGamma") return tilde_big_gamma(trunc);
  if (name == "FcyB") return f_cy_b(trunc);
  if (name == "FcyD") return f_cy_d(trunc);
  throw std::invalid_argument("unknown series '" + name + "'");
}

FaceFamily parse_family(const std::string& name) {
  if (name == "A") return FaceFamily::A;
  if (name == "B") return FaceFamily::B;
  if (name == "D") return FaceFamily::D;
  throw std::invalid_argument("unknown family '" + name + "' (expected A, B or D)");
}

std::string to_string(FaceFamily family) {
  switch (family) {
    case FaceFamily::A:
      return "A";
    case FaceFamily::B:
      return "B";
    case FaceFamily::D:
      return "D";
  }
  return "?";
}

FVector fvector_from_fcy(FaceFamily family, unsigned n) {
  if (family == FaceFamily::A) return fvector_type_a(n);
  if (family == FaceFamily::B && n < 1) throw std::invalid_argument("B_n needs n >= 1");
  if (family == FaceFamily::D && n < 3) throw std::invalid_argument("D_n needs n >= 3");
  const TruncatedSeries s = family == FaceFamily::B ? f_cy_b(n) : f_cy_d(n);
  const unsigned shift = family == FaceFamily::B ? n : n - 1;
  const Rational divisor = rational_pow(Rational(2), shift);
  FVector out;
  out.degenerate = family == FaceFamily::D && n == 3;
  for (unsigned j = 1; j <= n; ++j) {
    Rational v = s.coeff({0, n, 0, j}) / divisor;
    if (v.get_den() != 1) {
      throw IntegralityError("[w^" + std::to_string(j) + " t^" + std::to_string(n) +
                             "] is not divisible by 2^" + std::to_string(shift));
    }
    out.entries.push_back(v.get_num());
  }
  return out;
}

FVector fvector_type_a(unsigned n) {
  if (n < 3) throw std::invalid_argument("A_{n-1} face counts need n >= 3");
  const unsigned trunc = 2 * n - 2;
  const TruncatedSeries s = f_type_a(trunc);
  FVector out;
  for (unsigned j = 1; j + 1 <= n; ++j) {
    const unsigned t = n + j - 1;
    Rational v = s.coeff({0, t, j, 0}) * (Rational(factorial(t)) / Rational(factorial(n)));
    if (v.get_den() != 1) throw IntegralityError("type A face count is not integral");
    out.entries.push_back(v.get_num());
  }
  return out;
}

TruncatedSeries euler_bd(FaceFamily family, unsigned trunc) {
  if (family == FaceFamily::A) throw std::invalid_argument("euler_bd: family must be B or D");
  const TruncatedSeries s = family == FaceFamily::B ? f_cy_b(trunc) : f_cy_d(trunc);
  return eval_w(negate_t(s), Rational(-1, 2));
}

BigInt euler_from_series(FaceFamily family, unsigned n) {
  Rational v;
  if (family == FaceFamily::A) {
    if (n < 2) throw std::invalid_argument("type A Euler characteristic needs n >= 2");
    v = x_type_a(n - 1).coeff({0, n - 1, 0, 0}) * Rational(factorial(n - 1));
  } else {
    if (n < (family == FaceFamily::B ? 1u : 3u)) {
      throw std::invalid_argument("Euler characteristic out of range for " + to_string(family));
    }
    v = euler_bd(family, n).coeff({0, n, 0, 0}) * Rational(factorial(n));
  }
  if (v.get_den() != 1) throw IntegralityError("Euler characteristic is not integral");
  return v.get_num();
}

}  // namespace wonderful
