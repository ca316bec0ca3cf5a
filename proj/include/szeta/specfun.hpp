#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "szeta/quadrature.hpp"

// Special functions used throughout: complex Gamma, Hurwitz/Riemann zeta by
// Euler-Maclaurin, the logarithmic derivative of zeta, log|zeta| on the real
// axis and a von Mangoldt sieve.
namespace szeta::specfun {

// Bernoulli numbers B_2, B_4, ..., B_16.
inline constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0,      -1.0 / 30.0,   1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0};

// log Gamma(z) on the branch continuous in z off the negative real axis and
// real on the positive axis (so Im log_gamma(1/4 + it/2) is continuous in t).
// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

// Gamma(s); PoleError at s = 0, -1, -2, ...
Complex gamma_fn(Complex s);

// 1/Gamma(s), entire; exactly zero at the non-positive integers.
Complex rgamma(Complex s);

// Hurwitz zeta(s, q) = sum_{n >= 0} (n + q)^{-s}, q > 0.
Complex hurwitz_zeta(Complex s, double q);

// d/ds zeta(s, q).
Complex hurwitz_zeta_deriv(Complex s, double q);

// Riemann zeta(s) = zeta(s, 1).
Complex zeta_em(Complex s);

// zeta'(s).
Complex zeta_deriv(Complex s);

// zeta'(s)/zeta(s) from the Euler-Maclaurin values of zeta and zeta'.
// NearSingularityError within 1e-6 of the pole or of a zero.
Complex log_deriv_zeta(Complex s);

class VonMangoldtTable;

// -zeta'/zeta as the truncated Dirichlet series over the table, with the
// prime-number-theorem tail N^{1-s}/(s-1) - N^{-s}(psi(N) - N) added back.
// The error bound uses |psi(x) - x| <= sqrt(x) log^2 x / (8 pi) (valid on RH
// for x >= 73.2). Requires Re s > 1.
struct DirichletLogDeriv {
  Complex value;  // zeta'/zeta(s)
  double error = 0.0;
};
DirichletLogDeriv log_deriv_zeta_dirichlet(Complex s, const VonMangoldtTable& table);

// (sigma - 1) zeta(sigma) for real sigma; smooth and positive for sigma > 0.
double zeta_times_pole_factor(double sigma);

// log|zeta(sigma)| for real sigma > 1/2, sigma != 1.
double log_abs_zeta_real(double sigma);

// Prime powers up to a limit, stored as the prime list. Lambda(n) = log p for
// n = p^k and zero otherwise.
class VonMangoldtTable {
 public:
  explicit VonMangoldtTable(std::int64_t limit);

  std::int64_t limit() const noexcept { return limit_; }
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }

  double lambda(std::int64_t n) const;

  // Chebyshev psi(limit) = sum_{n <= limit} Lambda(n).
  double chebyshev_psi() const noexcept { return psi_; }

  // Visits every prime power n = p^k <= limit with Lambda(n) = log p, in
  // order of increasing p, then k.
  void for_each_prime_power(const std::function<void(std::int64_t, double)>& visit) const;

 private:
  std::int64_t limit_;
  std::vector<std::int64_t> primes_;
  std::vector<bool> composite_;
  double psi_ = 0.0;
};

// 2 <= limit <= 1e8.
VonMangoldtTable von_mangoldt_upto(std::int64_t limit);

}  // namespace szeta::specfun
