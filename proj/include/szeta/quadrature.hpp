#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace szeta {

using Complex = std::complex<double>;

// Fixed-order Gauss-Legendre rule on [-1, 1], expanded to the full node set.
class GaussRule {
 public:
  explicit GaussRule(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }

  // Integrates f over [a, b]. f may return double or Complex.
  template <class F>
  auto integrate(F&& f, double a, double b) const {
    using R = std::decay_t<decltype(f(a))>;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    R acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += weights_[i] * f(mid + half * nodes_[i]);
    }
    return acc * half;
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Shared rules; supported orders are 4, 8, 16 and 32.
const GaussRule& gauss_rule(int order);

// Composite Gauss-Legendre over [a, b] with panels no wider than max_width.
template <class F>
auto composite_gauss(F&& f, double a, double b, double max_width, int order = 16) {
  using R = std::decay_t<decltype(f(a))>;
  const GaussRule& rule = gauss_rule(order);
  if (!(b > a)) return R{};
  const auto panels = static_cast<long>(std::ceil((b - a) / max_width));
  const double h = (b - a) / static_cast<double>(panels);
  R acc{};
  for (long k = 0; k < panels; ++k) {
    const double lo = a + h * static_cast<double>(k);
    const double hi = (k + 1 == panels) ? b : lo + h;
    acc += rule.integrate(f, lo, hi);
  }
  return acc;
}

// Value together with a nonnegative error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Floating-point noise allowance for a sum of n terms with total magnitude
// sum_abs (random-walk model, padded by a factor 8).
inline double rounding_budget(double sum_abs, double n_terms) {
  constexpr double kEps = 2.220446049250313e-16;
  return 8.0 * kEps * sum_abs * std::sqrt(n_terms + 1.0);
}

}  // namespace szeta
