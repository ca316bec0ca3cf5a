#include "szeta/g_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"
#include "szeta/smooth_terms.hpp"

namespace szeta {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleRadius = 1e-3;
const double kLogTwoPi = std::log(kTwoPi);

struct PowerSum {
  Complex sum;
  double abs_sum = 0.0;
  std::size_t terms = 0;
};

// sum of gamma^{-s} over ordinates with index in [i0, i1).
PowerSum power_sum(std::span<const double> ord, std::size_t i0, std::size_t i1, Complex s) {
  PowerSum out;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = i0; i < i1; ++i) {
    const double lg = std::log(ord[i]);
    const double mag = std::exp(-s.real() * lg);
    const double ph = -s.imag() * lg;
    re += mag * std::cos(ph);
    im += mag * std::sin(ph);
    out.abs_sum += mag;
  }
  out.sum = Complex(re, im);
  out.terms = i1 - i0;
  return out;
}

std::size_t index_above(const ZeroTable& table, double x) {
  const auto ord = table.ordinates();
  return static_cast<std::size_t>(std::upper_bound(ord.begin(), ord.end(), x) - ord.begin());
}

Complex cpow_real(double x, Complex e) { return std::exp(e * std::log(x)); }

// s * int^u x^{-s-1} (main(x) + 7/8) dx as an antiderivative in u.
Complex smooth_antiderivative(double u, Complex s) {
  const Complex one_minus = 1.0 - s;
  const Complex up = cpow_real(u, one_minus);
  return s * up / (kTwoPi * one_minus) * (std::log(u) - 1.0 / one_minus - (kLogTwoPi + 1.0)) -
         0.875 * cpow_real(u, -s);
}

// s * int_B^inf x^{-s-1} f(x) dx, term by term.
Complex f_tail(double B, Complex s, double& truncation) {
  Complex acc = 0.0;
  for (int j = 1; j <= kMaxThetaTerms; ++j) {
    const Complex term = s * f_coefficient(j) * cpow_real(B, 1.0 - s - 2.0 * j) / (s + 2.0 * j - 1.0);
    acc += term;
    if (j == kMaxThetaTerms) truncation = std::abs(term);
  }
  return acc;
}

// |s(s+1) int_H^inf x^{-s-2} (S1(x) - S1(H)) dx| using |S1(x)| <= k log x.
double s_tail_bound(Complex s, double H, double s1_at_h) {
  const double sp = s.real() + 1.0;
  const double lh = std::log(H);
  const double weight = std::pow(H, -sp);
  return std::abs(s * (s + 1.0)) * weight *
         (kArgumentEnvelope * (lh / sp + 1.0 / (sp * sp)) + std::abs(s1_at_h) / sp);
}

EvalResult remainder_core(const ZeroTable& table, Complex s, double X) {
  const double H = table.height_ceiling();
  const auto ord = table.ordinates();
  const std::size_t ix = index_above(table, X);
  const double nx = static_cast<double>(ix);
  const double nh = static_cast<double>(table.size());
  const Complex sm1 = s - 1.0;
  const Complex x1 = cpow_real(X, 1.0 - s);
  const Complex xs = cpow_real(X, -s);
  const Complex hs = cpow_real(H, -s);
  const double fx = nx - main_term(X) - 0.875;

  const Complex closed = x1 * std::log(X / kTwoPi) / (kTwoPi * sm1) + x1 / (kTwoPi * sm1 * sm1) - xs * fx;
  const PowerSum between = power_sum(ord, ix, ord.size(), s);
  const Complex mh = smooth_antiderivative(H, s);
  const Complex mx = smooth_antiderivative(X, s);
  const Complex middle = between.sum + nx * xs - nh * hs - (mh - mx);
  double truncation = 0.0;
  const Complex tail = f_tail(H, s, truncation);
  const double s1h = argument_integral(table).s1(H);

  EvalResult out;
  out.value = closed + middle + tail;
  out.method = Method::remainder_formula;
  const double magnitude = std::abs(closed) + between.abs_sum + std::abs(nx * xs) +
                           std::abs(nh * hs) + std::abs(mh) + std::abs(mx) + std::abs(tail);
  out.abs_error = s_tail_bound(s, H, s1h) + truncation +
                  rounding_budget(magnitude, static_cast<double>(between.terms) + 8.0);
  return out;
}

void check_pole(Complex s) {
  if (std::abs(s - 1.0) < kPoleRadius) throw PoleError("G(s) has a double pole at s = 1");
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::remainder_formula: return "remainder_formula";
    case Method::continuation: return "continuation";
    case Method::explicit_formula: return "explicit_formula";
    case Method::contour: return "contour";
  }
  return "unknown";
}

Complex g_partial(const ZeroTable& table, Complex s, double X) {
  if (!(X > 0.0)) throw DomainError("partial sum needs X > 0");
  if (X > table.height_ceiling()) throw IncompleteTableError("partial sum cut above table height");
  return power_sum(table.ordinates(), 0, index_above(table, X), s).sum;
}

EvalResult r_remainder(const ZeroTable& table, Complex s, double X) {
  if (!(s.real() > 0.0)) throw DomainError("R(s) needs Re s > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("R(s) has a pole at s = 1");
  if (!(X >= 100.0)) throw DomainError("R(s) needs X >= 100");
  if (X > table.height_ceiling()) throw IncompleteTableError("cut point above table height");
  return remainder_core(table, s, X);
}

EvalResult g_eval(const ZeroTable& table, Complex s) {
  check_pole(s);
  if (!(s.real() > -1.0)) throw DomainError("G(s) is evaluated only for Re s > -1");
  const double H = table.height_ceiling();
  if (s.real() > 1.0) {
    EvalResult out = remainder_core(table, s, H);
    const PowerSum all = power_sum(table.ordinates(), 0, table.size(), s);
    out.value += all.sum;
    out.abs_error += rounding_budget(all.abs_sum, static_cast<double>(all.terms));
    out.method = Method::direct;
    return out;
  }
  if (s.real() > 0.0) {
    const double X = std::min(0.5 * H, std::max(100.0, std::abs(s.imag())));
    EvalResult out = remainder_core(table, s, X);
    const PowerSum head = power_sum(table.ordinates(), 0, index_above(table, X), s);
    out.value += head.sum;
    out.abs_error += rounding_budget(head.abs_sum, static_cast<double>(head.terms));
    return out;
  }
  return g_continuation(table, s);
}

EvalResult g_continuation(const ZeroTable& table, Complex s) {
  check_pole(s);
  if (!(s.real() > -1.0)) throw DomainError("continuation is valid only for Re s > -1");
  constexpr double kBase = 10.0;
  const double H = table.height_ceiling();
  const auto& arg = argument_integral(table);
  const double s1_base = arg.s1(kBase);
  const double s1_h = arg.s1(H);
  const Complex sm1 = s - 1.0;

  const Complex principal = 1.0 / (kTwoPi * sm1 * sm1) - kLogTwoPi / (kTwoPi * sm1);
  const double c1 = 0.875 - (1.0 + kLogTwoPi) / kTwoPi;
  // On [1, 10] there are no zeros: F = -main - 7/8.
  const Complex low = -(smooth_antiderivative(kBase, s) - smooth_antiderivative(1.0, s));
  double truncation = 0.0;
  const Complex ftail = f_tail(kBase, s, truncation);

  // s(s+1) int_10^H x^{-s-2} (S1(x) - S1(10)) dx, panel by panel.
  const double width = std::clamp(30.0 / (std::abs(s.imag()) + 1.0), 0.05, 2.0);
  const GaussRule& fine = gauss_rule(16);
  const GaussRule& coarse = gauss_rule(8);
  Complex q_fine = 0.0;
  Complex q_coarse = 0.0;
  double magnitude = 0.0;
  auto integrand = [&](double x) { return cpow_real(x, -s - 2.0) * (arg.s1(x) - s1_base); };
  table.for_each_piece(kBase, H, width, [&](double a, double b, std::int64_t) {
    const Complex qf = fine.integrate(integrand, a, b);
    q_fine += qf;
    q_coarse += coarse.integrate(integrand, a, b);
    magnitude += std::abs(qf);
  });
  const Complex ss1 = s * (s + 1.0);
  const Complex mid = ss1 * q_fine;
  const Complex edge = s * (s1_h - s1_base) * cpow_real(H, -s - 1.0);

  EvalResult out;
  out.value = principal + c1 + low + ftail + mid + edge;
  out.method = Method::continuation;
  out.abs_error = std::abs(ss1) * (std::abs(q_fine - q_coarse) + rounding_budget(magnitude, 1e5)) +
                  s_tail_bound(s, H, s1_h) + truncation +
                  rounding_budget(std::abs(principal) + std::abs(low) + std::abs(ftail) + std::abs(edge), 8.0);
  return out;
}

double critical_cut(double t) {
  const double a = std::abs(t);
  if (a <= std::exp(std::numbers::e)) return 100.0;
  return std::max(100.0, a * std::sqrt(std::log(std::log(a))) / std::log(a));
}

EvalResult g_critical_line(const ZeroTable& table, double t) {
  if (!(std::abs(t) >= 1.0)) throw DomainError("critical-line evaluation needs |t| >= 1");
  const double X = critical_cut(t);
  if (X > 0.5 * table.height_ceiling()) {
    throw IncompleteTableError("cut point exceeds half the table height");
  }
  const Complex s(0.5, t);
  EvalResult out = remainder_core(table, s, X);
  const PowerSum head = power_sum(table.ordinates(), 0, index_above(table, X), s);
  out.value += head.sum;
  out.abs_error += rounding_budget(head.abs_sum, static_cast<double>(head.terms));
  return out;
}

std::vector<EvalResult> g_critical_line_grid(const ZeroTable& table, double t0, double step,
                                             std::size_t count) {
  constexpr std::size_t kReseed = 256;
  const auto ord = table.ordinates();
  const std::size_t n = ord.size();
  const std::size_t padded = (n + 3) / 4 * 4;  // zero-amplitude padding lanes
  std::vector<double> lg(padded, 0.0), amp(padded, 0.0), zr(padded, 0.0), zi(padded, 0.0);
  std::vector<double> wr(padded, 1.0), wi(padded, 0.0);
  double amp_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lg[i] = std::log(ord[i]);
    amp[i] = 1.0 / std::sqrt(ord[i]);
    wr[i] = std::cos(step * lg[i]);
    wi[i] = -std::sin(step * lg[i]);
    amp_sum += amp[i];
  }
  const double drift = 4.0 * kReseed * 2.220446049250313e-16 * amp_sum;
  std::vector<EvalResult> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = t0 + step * static_cast<double>(k);
    if (k % kReseed == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        zr[i] = amp[i] * std::cos(t * lg[i]);
        zi[i] = -amp[i] * std::sin(t * lg[i]);
      }
    }
    // Lane-wise accumulators keep the fused sum-and-rotate loop vectorizable
    // while fixing the summation order.
    double re[4] = {0.0, 0.0, 0.0, 0.0};
    double im[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t base = 0; base < padded; base += 4) {
      for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t i = base + j;
        const double a = zr[i];
        const double b = zi[i];
        re[j] += a;
        im[j] += b;
        zr[i] = a * wr[i] - b * wi[i];
        zi[i] = a * wi[i] + b * wr[i];
      }
    }
    const Complex sum((re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3]));
    EvalResult r = remainder_core(table, Complex(0.5, t), table.height_ceiling());
    r.value += sum;
    r.abs_error += drift + rounding_budget(amp_sum, static_cast<double>(n));
    out.push_back(std::move(r));
  }
  return out;
}

EvalResult sum_over_zeros(const ZeroTable& table, const ZeroKernel& kernel) {
  if (!(kernel.decay > 1.0)) throw DomainError("zero sums need a kernel decaying faster than 1/x");
  const auto ord = table.ordinates();
  Complex head = 0.0;
  double head_abs = 0.0;
  for (const double g : ord) {
    const Complex v = kernel.value(g);
    head += v;
    head_abs += std::abs(v);
  }
  const double H = table.height_ceiling();
  const double fh = counting_residual(table, H);
  const double s1h = argument_integral(table).s1(H);

  // x = H e^v maps [H, inf) to [0, inf); the integrands decay like e^{-(decay-1) v}.
  const double v_max = std::min(std::log(1e300 / H), 40.0 / (kernel.decay - 1.0));
  auto dense = [&](double v) {
    const double x = H * std::exp(v);
    return x * (kernel.value(x) * std::log(x / kTwoPi) / kTwoPi - kernel.derivative(x) * f_term(x));
  };
  auto bound = [&](double v) {
    const double x = H * std::exp(v);
    return x * std::abs(kernel.second_derivative(x)) * (kArgumentEnvelope * std::log(x) + std::abs(s1h));
  };
  const Complex q16 = composite_gauss(dense, 0.0, v_max, 0.5, 16);
  const Complex q8 = composite_gauss(dense, 0.0, v_max, 0.5, 8);
  const double s_bound = composite_gauss(bound, 0.0, v_max, 0.5, 16);
  const double cutoff = 2.0 * (std::abs(dense(v_max)) + bound(v_max)) / (kernel.decay - 1.0);

  EvalResult out;
  const Complex edge = kernel.value(H) * fh;
  out.value = head + q16 - edge;
  out.method = Method::direct;
  out.abs_error = s_bound + std::abs(q16 - q8) + cutoff +
                  rounding_budget(head_abs + std::abs(q16) + std::abs(edge), static_cast<double>(ord.size()));
  return out;
}

}  // namespace szeta
