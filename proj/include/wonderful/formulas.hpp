#pragma once

// Exponential generating series for Betti numbers of the minimal wonderful
// models Y_{G(r,p,n)} and for face counts of the associated real spherical
// models.
//
// Every function takes the output truncation order in t. Series that are
// later hit by z -> d/dt are expanded internally to a larger order so that
// all terms landing at or below the output order are present.

#include <string>
#include <vector>

#include "wonderful/lattice.hpp"
#include "wonderful/qpolynomial.hpp"
#include "wonderful/series.hpp"

namespace wonderful {

/// Which reading of the product factor of gamma to use. `Literal` expands
/// exp(q[i-2]_q (z/r) (t r / i!)^i) and exists only to show that it disagrees
/// with the brute-force oracle.
enum class GammaReading { Standard, Literal };

/// Type A: e^t prod_{i>=3} exp(z q [i-2]_q t^i / i!).
TruncatedSeries psi(unsigned trunc);

/// Poincare polynomial of Y_{G(1,1,n)} read off psi.
QPolynomial poincare_from_psi(unsigned n);

/// Weak-support series: e^t prod_{i>=3} exp((z/r) q [i-2]_q (rt)^i / i!).
TruncatedSeries k_series(unsigned r, unsigned trunc);

TruncatedSeries gamma_series(unsigned r, unsigned trunc, GammaReading reading = GammaReading::Standard);

/// Integral of gamma with z -> d/dt.
TruncatedSeries big_gamma(unsigned r, unsigned trunc, GammaReading reading = GammaReading::Standard);

/// 1 + integral of K with z -> d/dt.
TruncatedSeries cal_k(unsigned r, unsigned trunc);

/// Poincare series of Y_{G(r,1,n)}: cal_k / (1 - big_gamma).
TruncatedSeries phi_full_monomial(unsigned r, unsigned trunc,
                                  GammaReading reading = GammaReading::Standard);

/// Poincare series of Y_{G(r,r,n)}, r >= 2.
TruncatedSeries phi_rr(unsigned r, unsigned trunc);

/// n! [t^n] of the Poincare series matching g's variant (psi for type A).
QPolynomial poincare_from_series(const GroupId& g);

/// Plane-tree face series exp(z t^2 / (1 - t)) - 1.
TruncatedSeries f_type_a(unsigned trunc);

/// Face counts of Stasheff's associahedra, (1/s) C(n-2, s-1) C(n+s-1, s-1).
BigInt kirkman_cayley(unsigned n, unsigned s);

/// Euler-characteristic series of the real type-A models: z -> d/dt applied
/// to exp((z/2) t^2 / (1 + t)) - 1. [t^{n-1}] * (n-1)! is chi.
TruncatedSeries x_type_a(unsigned trunc);

TruncatedSeries tilde_gamma(unsigned trunc);
TruncatedSeries tilde_big_gamma(unsigned trunc);

/// Face series of CY for B_n: 1 / (1 - w Gamma~).
TruncatedSeries f_cy_b(unsigned trunc);

/// Face series of CY for D_n.
TruncatedSeries f_cy_d(unsigned trunc);

/// Series by short name: psi, K, gamma, Gamma, calK, phiFull, phiRR, F, X,
/// tildeGamma, FcyB, FcyD. Throws std::invalid_argument on anything else.
TruncatedSeries named_series(const std::string& name, unsigned r, unsigned trunc,
                             GammaReading reading = GammaReading::Standard);

enum class FaceFamily { A, B, D };

FaceFamily parse_family(const std::string& name);
std::string to_string(FaceFamily family);

struct FVector {
  std::vector<BigInt> entries;  // entry s-1 counts faces of codimension s-1
  bool degenerate = false;      // D_3 answered as A_3
};

/// Per-polytope f-vector from the face series: [w^s t^n] divided by the
/// number of chambers' sign patterns (2^n for B, 2^(n-1) for D).
FVector fvector_from_fcy(FaceFamily family, unsigned n);

/// Type A f-vector read off f_type_a, s = 1..n-1 (the Kirkman-Cayley numbers).
FVector fvector_type_a(unsigned n);

/// F_CY(w, -t) at w = -1/2; [t^n] * n! is chi of the real compact model.
TruncatedSeries euler_bd(FaceFamily family, unsigned trunc);

/// chi of the real compact model read off the series (A: x_type_a; B/D: euler_bd).
BigInt euler_from_series(FaceFamily family, unsigned n);

}  // namespace wonderful
