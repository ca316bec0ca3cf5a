#include "szeta/superzeta.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "szeta/errors.hpp"
#include "szeta/specfun.hpp"

namespace szeta {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kContourZetaFloor = 1e-4;
constexpr double kChebyshevSlope = 1.04;  // psi(x) < 1.04 x for all x > 0

Complex cpow_neg(Complex base, Complex s) { return std::exp(-s * std::log(base)); }

// |(alpha - w)^{-s}| for w = x +- i eps, x > alpha.
double kernel_majorant(double x, Complex s, const SuperZetaParams& p) {
  const double near = x - p.alpha;
  const double far = near + p.epsilon;
  const double mag = s.real() >= 0.0 ? std::pow(near, -s.real()) : std::pow(far, -s.real());
  return mag * std::exp(kPi * std::abs(s.imag()));
}

// (1/2 pi i) over the Hankel contour: in from +inf below the axis, clockwise
// around c on the left, back out above the axis.
EvalResult hankel_integral(const std::function<Complex(Complex)>& f,
                           const std::function<double(double)>& tail_majorant,
                           const SuperZetaParams& p, const ContourSpec& spec) {
  p.validate();
  if (!(spec.w_max > p.alpha + 1.0) || !(spec.panel_width > 0.0)) {
    throw DomainError("contour legs must extend past alpha + 1");
  }
  const double c = p.c();
  const double eps = p.epsilon;
  auto legs = [&](double x) { return f(Complex(x, eps)) - f(Complex(x, -eps)); };
  // w = c + eps e^{i phi}, phi from 3pi/2 down to pi/2.
  auto arc = [&](double phi) {
    const Complex e = std::polar(1.0, phi);
    return -f(c + eps * e) * (Complex(0.0, 1.0) * eps * e);
  };
  const int low_order = std::max(4, spec.order / 2);
  const Complex leg_hi = composite_gauss(legs, c, spec.w_max, spec.panel_width, spec.order);
  const Complex leg_lo = composite_gauss(legs, c, spec.w_max, spec.panel_width, low_order);
  const double arc_width = spec.panel_width / eps;
  const Complex arc_hi = composite_gauss(arc, 0.5 * kPi, 1.5 * kPi, arc_width, spec.order);
  const Complex arc_lo = composite_gauss(arc, 0.5 * kPi, 1.5 * kPi, arc_width, low_order);

  // Beyond w_max both legs are dominated by the majorant.
  const double tail = composite_gauss(tail_majorant, spec.w_max, spec.w_max + 200.0, 1.0, 16);

  const Complex factor(0.0, -1.0 / (2.0 * kPi));  // 1/(2 pi i)
  EvalResult out;
  out.value = factor * (leg_hi + arc_hi);
  out.method = Method::contour;
  out.abs_error = (std::abs(leg_hi - leg_lo) + std::abs(arc_hi - arc_lo) + 2.0 * tail) / (2.0 * kPi) +
                  rounding_budget(std::abs(leg_hi) + std::abs(arc_hi), 4000.0) * 100.0;
  return out;
}

}  // namespace

void SuperZetaParams::validate() const {
  if (!(alpha > -2.0)) throw DomainError("super zeta needs alpha > -2");
  if (!(epsilon > 0.0 && epsilon < 2.0 + c())) {
    throw DomainError("contour radius must satisfy 0 < epsilon < 2 + min(1, alpha)");
  }
}

EvalResult m_alpha_direct(const ZeroTable& table, Complex s, const SuperZetaParams& params) {
  if (!(s.real() > 1.0)) throw DomainError("direct super zeta sum needs Re s > 1");
  if (!(params.alpha > -2.0)) throw DomainError("super zeta needs alpha > -2");
  const double a = params.alpha - 0.5;
  ZeroKernel kernel;
  kernel.value = [a, s](double x) { return cpow_neg(Complex(a, -x), s) + cpow_neg(Complex(a, x), s); };
  kernel.derivative = [a, s](double x) {
    const Complex i(0.0, 1.0);
    return i * s * (cpow_neg(Complex(a, -x), s + 1.0) - cpow_neg(Complex(a, x), s + 1.0));
  };
  kernel.second_derivative = [a, s](double x) {
    return -s * (s + 1.0) * (cpow_neg(Complex(a, -x), s + 2.0) + cpow_neg(Complex(a, x), s + 2.0));
  };
  kernel.decay = s.real();
  EvalResult out = sum_over_zeros(table, kernel);
  const double g1 = table.ordinates().front();
  if (std::abs(std::arg(Complex(a, -g1))) > kPi - 0.01) {
    out.warnings.push_back("BranchWarning: alpha - rho lies close to the branch cut");
  }
  return out;
}

EvalResult zeta_alpha_explicit(Complex s, double alpha, std::int64_t prime_limit) {
  if (!(alpha > 1.0)) throw DomainError("explicit formula needs alpha > 1");
  if (prime_limit < 10000) throw DomainError("prime limit must be at least 1e4");
  const auto vm = specfun::von_mangoldt_upto(prime_limit);
  const double L = std::log(static_cast<double>(prime_limit));
  const double sigma = s.real();
  if (!(sigma - 1.0 < alpha * L)) throw DomainError("prime limit too small for this Re s");

  const Complex rg = specfun::rgamma(s);
  Complex lambda_sum = 0.0;
  double lambda_abs = 0.0;
  if (rg != Complex(0.0, 0.0)) {
    vm.for_each_prime_power([&](std::int64_t n, double lp) {
      const double ln = std::log(static_cast<double>(n));
      const Complex term = lp * std::exp((s - 1.0) * std::log(ln) - alpha * ln);
      lambda_sum += term;
      lambda_abs += std::abs(term);
    });
  }
  // Sum over n > N of Lambda(n) g(n), g(x) = (log x)^{sigma-1} x^{-alpha}
  // decreasing: at most (1.04 N - psi(N)) g(N) + 1.04 int_N^inf g.
  const double N = static_cast<double>(prime_limit);
  const double gN = std::pow(L, sigma - 1.0) * std::pow(N, -alpha);
  const double span = 60.0 / (alpha - 1.0) + 10.0 * std::abs(sigma);
  const double g_int = composite_gauss(
      [&](double u) { return std::pow(u, sigma - 1.0) * std::exp(-(alpha - 1.0) * u); }, L, L + span, 1.0, 16);
  const double tail = std::abs(rg) * (std::max(0.0, kChebyshevSlope * N - vm.chebyshev_psi()) * gN +
                                      kChebyshevSlope * g_int);

  const Complex lead = cpow_neg(Complex(alpha - 1.0, 0.0), s);
  const Complex hurwitz = std::exp(-s * std::log(2.0)) * specfun::hurwitz_zeta(s, 0.5 * alpha + 1.0);
  EvalResult out;
  out.value = lead - rg * lambda_sum - hurwitz;
  out.method = Method::explicit_formula;
  out.abs_error = tail + 1e-12 * std::abs(hurwitz) +
                  rounding_budget(std::abs(lead) + std::abs(rg) * lambda_abs + std::abs(hurwitz),
                                  static_cast<double>(vm.primes().size()));
  return out;
}

EvalResult e_alpha_contour(Complex s, const SuperZetaParams& params, const ContourSpec& spec) {
  const double alpha = params.alpha;
  auto f = [&](Complex w) {
    const Complex z = specfun::zeta_em(w);
    if (std::abs(z) < kContourZetaFloor) {
      throw ContourError("contour passes within reach of a zeta zero; shift epsilon");
    }
    return specfun::zeta_deriv(w) / z * cpow_neg(alpha - w, s);
  };
  // |zeta'/zeta(x +- i eps)| <= -zeta'/zeta(x) <= 1.01 log 2 * 2^{-x} for x >= 40.
  auto majorant = [&](double x) {
    return 1.01 * std::log(2.0) * std::exp2(-x) * kernel_majorant(x, s, params);
  };
  return hankel_integral(f, majorant, params, spec);
}

EvalResult zeta_alpha_contour(Complex s, const SuperZetaParams& params, const ContourSpec& spec) {
  EvalResult out = e_alpha_contour(s, params, spec);
  const Complex hurwitz = std::exp(-s * std::log(2.0)) * specfun::hurwitz_zeta(s, 0.5 * params.alpha + 1.0);
  out.value -= hurwitz;
  out.abs_error += 1e-12 * std::abs(hurwitz);
  return out;
}

KernelCheck kernel_integral_check(std::int64_t n, Complex s, const SuperZetaParams& params,
                                  const ContourSpec& spec) {
  if (n < 2) throw DomainError("kernel check needs n >= 2");
  if (!(params.alpha > 1.0)) throw DomainError("kernel check needs alpha > 1");
  if (!(s.real() > 0.0)) throw DomainError("kernel check needs Re s > 0");
  const double ln = std::log(static_cast<double>(n));
  auto f = [&](Complex w) { return std::exp(-w * ln) * cpow_neg(params.alpha - w, s); };
  auto majorant = [&](double x) { return std::exp(-x * ln) * kernel_majorant(x, s, params); };
  const EvalResult lhs = hankel_integral(f, majorant, params, spec);
  KernelCheck out;
  out.lhs = lhs.value;
  out.lhs_error = lhs.abs_error;
  // Collapsing the contour onto [alpha, inf) for 0 < s < 1 gives
  // 2i sin(pi s) n^{-alpha} (log n)^{s-1} Gamma(1-s), hence a positive sign here.
  out.rhs = std::exp((s - 1.0) * std::log(ln) - params.alpha * ln) * specfun::rgamma(s);
  return out;
}

HalfIdentity half_identity_residual(const ZeroTable& table, Complex s) {
  if (!(s.real() > 1.0)) throw DomainError("half identity needs Re s > 1");
  const EvalResult m = m_alpha_direct(table, s, SuperZetaParams{0.5, 0.5});
  const EvalResult g = g_eval(table, s);
  const Complex factor = 2.0 * std::cos(0.5 * kPi * s);
  HalfIdentity out;
  out.residual = std::abs(m.value - factor * g.value);
  out.combined_error = m.abs_error + std::abs(factor) * g.abs_error;
  return out;
}

}  // namespace szeta
