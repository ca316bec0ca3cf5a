#include "szeta/specfun.hpp"

#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"

namespace szeta::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// n!
double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

// Stirling series for log Gamma, valid for |w| >= 15 away from the negative axis.
Complex stirling(Complex w) {
  Complex acc = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
  const Complex w2 = w * w;
  Complex wp = w;
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    const double b = kBernoulliEven[k - 1];
    acc += b / (2.0 * k * (2.0 * k - 1.0)) / wp;
    wp *= w2;
  }
  return acc;
}


// Direct-sum length for Euler-Maclaurin at (s, q): large enough that the first
// omitted Bernoulli term is negligible against the partial sum.
int em_terms(Complex s, double q) {
  const double sa = std::abs(s);
  int m = static_cast<int>(std::ceil(std::max({10.0, 2.0 * std::abs(s.imag()), sa})));
  // first omitted term ~ |B_18/18! * (s)_17| a^{-Re s - 17}
  constexpr double kB18 = 43867.0 / 798.0;
  for (;; m += 8) {
    const double a = m + q;
    double poch = 1.0;
    for (int i = 0; i <= 16; ++i) poch *= std::abs(s + static_cast<double>(i));
    const double omitted = kB18 / factorial(18) * poch * std::pow(a, -s.real() - 17.0);
    const double scale = std::pow(a, -s.real());
    if (omitted <= 1e-18 * std::max(scale, 1e-300) || m > 100000) break;
  }
  return m;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
  // Upward recurrence with principal logs keeps the branch continuous off the
  // negative real axis (the analytic continuation from z > 0).
  Complex w = z;
  Complex shift{};
  while (std::abs(w) < 15.0 || w.real() < 0.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

Complex gamma_fn(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at " + std::to_string(s.real()));
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
  return std::exp(log_gamma(s));
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return std::sin(kPi * s) * gamma_fn(1.0 - s) / kPi;
  return std::exp(-log_gamma(s));
}

Complex hurwitz_zeta(Complex s, double q) {
  if (!(q > 0.0)) throw DomainError("Hurwitz zeta needs q > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta(s, q) has a simple pole at s = 1");
  const int m = em_terms(s, q);
  Complex acc{};
  for (int n = m - 1; n >= 0; --n) acc += std::exp(-s * std::log(n + q));
  const double a = m + q;
  const Complex a_s = std::exp(-s * std::log(a));  // a^{-s}
  acc += a * a_s / (s - 1.0) + 0.5 * a_s;
  Complex poch = s;  // (s)(s+1)...(s+2k-2)
  Complex apow = a_s / a;
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    acc += kBernoulliEven[k - 1] / factorial(2 * static_cast<int>(k)) * poch * apow;
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    apow /= a * a;
  }
  return acc;
}

Complex hurwitz_zeta_deriv(Complex s, double q) {
  if (!(q > 0.0)) throw DomainError("Hurwitz zeta needs q > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta(s, q) has a simple pole at s = 1");
  const int m = em_terms(s, q);
  Complex acc{};
  for (int n = m - 1; n >= 0; --n) {
    const double l = std::log(n + q);
    acc -= l * std::exp(-s * l);
  }
  const double a = m + q;
  const double la = std::log(a);
  const Complex a_s = std::exp(-s * la);
  const Complex head = a * a_s / (s - 1.0);
  acc += -la * head - a * a_s / ((s - 1.0) * (s - 1.0));
  acc += -la * 0.5 * a_s;
  Complex poch = s;
  Complex dpoch = 1.0;
  Complex apow = a_s / a;
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    acc += kBernoulliEven[k - 1] / factorial(2 * static_cast<int>(k)) * (dpoch - la * poch) * apow;
    for (const double i : {2.0 * k - 1.0, 2.0 * k}) {
      dpoch = dpoch * (s + i) + poch;
      poch *= s + i;
    }
    apow /= a * a;
  }
  return acc;
}

Complex zeta_em(Complex s) { return hurwitz_zeta(s, 1.0); }

Complex zeta_deriv(Complex s) { return hurwitz_zeta_deriv(s, 1.0); }

Complex log_deriv_zeta(Complex s) {
  if (std::abs(s - 1.0) < 1e-6) throw NearSingularityError("too close to the pole of zeta at s = 1");
  const Complex z = zeta_em(s);
  const Complex dz = zeta_deriv(s);
  if (std::abs(z) < 1e-6 * std::abs(dz)) {
    throw NearSingularityError("too close to a zero of zeta");
  }
  return dz / z;
}

DirichletLogDeriv log_deriv_zeta_dirichlet(Complex s, const VonMangoldtTable& table) {
  const double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("Dirichlet series for zeta'/zeta needs Re s > 1");
  const auto n_max = table.limit();
  const double big_n = static_cast<double>(n_max);
  Complex acc{};
  double sum_abs = 0.0;
  std::size_t count = 0;
  table.for_each_prime_power([&](std::int64_t n, double lam) {
    const Complex term = lam * std::exp(-s * std::log(static_cast<double>(n)));
    acc += term;
    sum_abs += std::abs(term);
    ++count;
  });
  const Complex n_s = std::exp(-s * std::log(big_n));
  acc += big_n * n_s / (s - 1.0) - n_s * (table.chebyshev_psi() - big_n);
  const double beta = sigma - 0.5;
  const double l = std::log(big_n);
  const double tail_integral = std::pow(big_n, -beta) * (l * l / beta + 2.0 * l / (beta * beta) + 2.0 / (beta * beta * beta));
  DirichletLogDeriv out;
  out.value = -acc;
  out.error = std::abs(s) * tail_integral / (8.0 * kPi) + rounding_budget(sum_abs, static_cast<double>(count));
  return out;
}

double zeta_times_pole_factor(double sigma) {
  // Euler-Maclaurin with the pole term multiplied through by (sigma - 1).
  const double d = sigma - 1.0;
  const int m = em_terms(Complex(sigma, 0.0), 1.0);
  double acc = 0.0;
  for (int n = m - 1; n >= 1; --n) acc += std::pow(static_cast<double>(n), -sigma);
  const double a = m;
  const double a_s = std::pow(a, -sigma);
  double tail = 0.5 * a_s;
  double poch = sigma;
  double apow = a_s / a;
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    tail += kBernoulliEven[k - 1] / factorial(2 * static_cast<int>(k)) * poch * apow;
    poch *= (sigma + 2.0 * k - 1.0) * (sigma + 2.0 * k);
    apow /= a * a;
  }
  return d * (acc + tail) + a * a_s;
}

double log_abs_zeta_real(double sigma) {
  if (!(sigma > 0.5)) throw DomainError("log|zeta(sigma)| is only provided for sigma > 1/2");
  if (sigma == 1.0) throw PoleError("zeta has a pole at 1");
  return std::log(zeta_times_pole_factor(sigma)) - std::log(std::abs(sigma - 1.0));
}

VonMangoldtTable::VonMangoldtTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("von Mangoldt table needs limit >= 2");
  if (limit > 100'000'000) throw DomainError("von Mangoldt table limit capped at 1e8");
  composite_.assign(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite_[p]) continue;
    for (std::int64_t k = p * p; k <= limit; k += p) composite_[k] = true;
  }
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (!composite_[p]) primes_.push_back(p);
  }
  for_each_prime_power([this](std::int64_t, double lam) { psi_ += lam; });
}

double VonMangoldtTable::lambda(std::int64_t n) const {
  if (n < 2 || n > limit_) {
    if (n > limit_) throw DomainError("n beyond the von Mangoldt table");
    return 0.0;
  }
  if (!composite_[n]) return std::log(static_cast<double>(n));
  for (const std::int64_t p : primes_) {
    if (n % p != 0) continue;
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return 0.0;
}

void VonMangoldtTable::for_each_prime_power(
    const std::function<void(std::int64_t, double)>& visit) const {
  for (const std::int64_t p : primes_) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t n = p;; n *= p) {
      visit(n, lp);
      if (n > limit_ / p) break;
    }
  }
}

VonMangoldtTable von_mangoldt_upto(std::int64_t limit) { return VonMangoldtTable(limit); }

}  // namespace szeta::specfun
