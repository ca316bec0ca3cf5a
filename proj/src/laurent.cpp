#include "szeta/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"
#include "szeta/g_function.hpp"
#include "szeta/smooth_terms.hpp"

namespace szeta {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinHeight = 1e4;

void require_height(const ZeroTable& table) {
  if (table.height_ceiling() < kMinHeight) {
    throw DomainError("Laurent data needs a table of height >= 1e4");
  }
}

// int_L^inf u^m e^{-k u} du for integer m >= 0, k > 0.
double upper_gamma_moment(int m, double k, double L) {
  double term = 1.0;  // (kL)^i / i!, built upward
  double acc = 0.0;
  for (int i = 0; i <= m; ++i) {
    if (i > 0) term *= k * L / i;
    acc += term;
  }
  return std::exp(-k * L) * std::tgamma(m + 1.0) * acc / std::pow(k, m + 1);
}

struct PiecewiseIntegral {
  double value = 0.0;
  double error = 0.0;
};

// int_1^H F(x) w(x) dx with F = N - main - 7/8, exact between ordinates.
template <class W>
PiecewiseIntegral integrate_residual(const ZeroTable& table, W&& weight, double max_width) {
  const GaussRule& fine = gauss_rule(16);
  const GaussRule& coarse = gauss_rule(8);
  long double q16 = 0.0L;
  long double q8 = 0.0L;
  double magnitude = 0.0;
  std::size_t pieces = 0;
  table.for_each_piece(1.0, table.height_ceiling(), max_width, [&](double a, double b, std::int64_t n) {
    auto f = [&](double x) { return (static_cast<double>(n) - main_term(x) - 0.875) * weight(x); };
    const double v = fine.integrate(f, a, b);
    q16 += v;
    q8 += coarse.integrate(f, a, b);
    magnitude += std::abs(v);
    ++pieces;
  });
  PiecewiseIntegral out;
  out.value = static_cast<double>(q16);
  out.error = std::abs(static_cast<double>(q16 - q8)) + rounding_budget(magnitude, static_cast<double>(pieces));
  return out;
}

}  // namespace

Complex LaurentCoeffs::evaluate(Complex s) const {
  const Complex d = s - 1.0;
  Complex acc = 0.0;
  for (std::size_t j = b.size(); j-- > 0;) acc = acc * d + b[j].value;
  return principal_2 / (d * d) + principal_1 / d + acc;
}

Estimate c_coeff(const ZeroTable& table, int j, double max_width) {
  if (j < 0 || j > kMaxLaurentOrder) throw DomainError("c_j is provided for 0 <= j <= 12");
  require_height(table);
  const double H = table.height_ceiling();
  const double L = std::log(H);
  const auto body = integrate_residual(
      table, [j](double x) { return std::pow(std::log(x), j) / (x * x); }, max_width);

  // f-part beyond H in closed form: a_k int_L^inf u^j e^{-2k u} du.
  double ftail = 0.0;
  double truncation = 0.0;
  for (int k = 1; k <= kMaxThetaTerms; ++k) {
    const double term = f_coefficient(k) * upper_gamma_moment(j, 2.0 * k, L);
    ftail += term;
    truncation = std::abs(term);
  }
  // S-part beyond H: -int S1_H g' with |g'| <= x^{-3}(j log^{j-1} x + 2 log^j x).
  const double s1h = std::abs(argument_integral(table).s1(H));
  auto e3 = [&](int m) { return m < 0 ? 0.0 : upper_gamma_moment(m, 2.0, L); };
  const double s_bound = kArgumentEnvelope * (j * e3(j) + 2.0 * e3(j + 1)) + s1h * (j * e3(j - 1) + 2.0 * e3(j));

  const double scale = std::tgamma(j + 1.0);
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return {sign * (body.value + ftail) / scale, (body.error + s_bound + truncation) / scale};
}

double c1_closed_form() { return 0.875 - (1.0 + std::log(kTwoPi)) / kTwoPi; }

Estimate estimate_C1(const ZeroTable& table) {
  require_height(table);
  const double H = table.height_ceiling();
  const double s1h = argument_integral(table).s1(H);
  std::vector<Estimate> values;
  for (const double s0 : {2.0, 2.5, 3.0}) {
    const EvalResult g = g_eval(table, s0);
    const auto body = integrate_residual(table, [s0](double x) { return s0 * std::pow(x, -s0 - 1.0); }, 1.0);
    double ftail = 0.0;
    for (int k = 1; k <= kMaxThetaTerms; ++k) {
      ftail += s0 * f_coefficient(k) * std::pow(H, 1.0 - s0 - 2.0 * k) / (s0 + 2.0 * k - 1.0);
    }
    const double sp = s0 + 1.0;
    const double s_bound = s0 * sp * std::pow(H, -sp) *
                           (kArgumentEnvelope * (std::log(H) / sp + 1.0 / (sp * sp)) + std::abs(s1h) / sp);
    const double principal = 1.0 / (kTwoPi * (s0 - 1.0) * (s0 - 1.0)) - std::log(kTwoPi) / (kTwoPi * (s0 - 1.0));
    const double c1 = g.value.real() - principal - body.value - ftail;
    const double err = g.abs_error + body.error + s_bound +
                       rounding_budget(std::abs(g.value) + std::abs(principal) + std::abs(body.value), 4.0);
    values.push_back({c1, err});
  }
  double lo = values.front().value;
  double hi = lo;
  double mean = 0.0;
  double worst = 0.0;
  for (const auto& v : values) {
    lo = std::min(lo, v.value);
    hi = std::max(hi, v.value);
    mean += v.value / static_cast<double>(values.size());
    worst = std::max(worst, v.error);
  }
  const double spread = hi - lo;
  if (spread > 10.0 * worst) {
    throw InconsistencyError("C1 estimates disagree across s0 by " + std::to_string(spread));
  }
  return {mean, worst + spread};
}

LaurentCoeffs laurent_expansion(const ZeroTable& table, int J) {
  if (J < 0 || J > kMaxLaurentOrder) throw DomainError("Laurent order must be in 0..12");
  LaurentCoeffs out;
  out.principal_2 = 1.0 / kTwoPi;
  out.principal_1 = -std::log(kTwoPi) / kTwoPi;
  out.C1 = estimate_C1(table);
  for (int j = 0; j <= J; ++j) out.c.push_back(c_coeff(table, j));
  out.b.push_back({out.C1.value + out.c[0].value, out.C1.error + out.c[0].error});
  for (int j = 1; j <= J; ++j) {
    out.b.push_back({out.c[j].value + out.c[j - 1].value, out.c[j].error + out.c[j - 1].error});
  }
  return out;
}

}  // namespace szeta
