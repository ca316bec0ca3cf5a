#include "szeta/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"
#include "szeta/g_function.hpp"
#include "szeta/smooth_terms.hpp"
#include "szeta/specfun.hpp"

namespace szeta {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double band(double T) {
  const double l = std::log(T);
  return T * l * l;
}

std::span<const double> select(const ZeroTable& table, double lo, double hi) {
  const auto ord = table.ordinates();
  const auto first = std::upper_bound(ord.begin(), ord.end(), lo);
  const auto last = std::upper_bound(ord.begin(), ord.end(), hi);
  return {first, last};
}

// |sum gamma^{-1/2-it}|^2 at one t.
struct PolyEval {
  std::vector<double> lg;
  std::vector<double> amp;
  explicit PolyEval(std::span<const double> gammas) {
    for (const double g : gammas) {
      lg.push_back(std::log(g));
      amp.push_back(1.0 / std::sqrt(g));
    }
  }
  double operator()(double t) const {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < lg.size(); ++i) {
      const double ph = t * lg[i];
      re += amp[i] * std::cos(ph);
      im -= amp[i] * std::sin(ph);
    }
    return re * re + im * im;
  }
  double frequency_span() const {
    if (lg.empty()) return 0.0;
    return *std::max_element(lg.begin(), lg.end()) - *std::min_element(lg.begin(), lg.end());
  }
};

template <class F>
Estimate panel_integral(F&& f, double a, double b, double width) {
  const GaussRule& fine = gauss_rule(16);
  const GaussRule& coarse = gauss_rule(8);
  if (!(b > a)) return {};
  const auto panels = static_cast<long>(std::ceil((b - a) / width));
  const double h = (b - a) / static_cast<double>(panels);
  double q16 = 0.0;
  double q8 = 0.0;
  double magnitude = 0.0;
  for (long k = 0; k < panels; ++k) {
    const double lo = a + h * static_cast<double>(k);
    const double hi = (k + 1 == panels) ? b : lo + h;
    const double v = fine.integrate(f, lo, hi);
    q16 += v;
    q8 += coarse.integrate(f, lo, hi);
    magnitude += std::abs(v);
  }
  return {q16, std::abs(q16 - q8) + rounding_budget(magnitude, static_cast<double>(panels))};
}

double panel_width(double frequency) { return 2.0 / std::max(frequency, 0.5); }

}  // namespace

double WindowKernel::psi(double x) const {
  const double u = 1.0 - std::abs(x / scale);
  return u > 0.0 ? u * u : 0.0;
}

double WindowKernel::psi_hat(double xi) const {
  const double w = kTwoPi * scale * xi;
  double r;
  if (std::abs(w) < 0.1) {
    const double w2 = w * w;
    r = 1.0 / 6.0 - w2 * (1.0 / 120.0 - w2 * (1.0 / 5040.0 - w2 * (1.0 / 362880.0 - w2 / 39916800.0)));
  } else {
    r = (w - std::sin(w)) / (w * w * w);
  }
  return 4.0 * scale * r;
}

PairIdentity smoothed_pair_identity(const ZeroTable& table, OrdinateRange set, double T,
                                    const WindowKernel& kernel) {
  return smoothed_pair_identity(select(table, set.lo, set.hi), T, kernel);
}

PairIdentity smoothed_pair_identity(std::span<const double> gammas, double T, const WindowKernel& kernel) {
  if (!(T > 0.0)) throw DomainError("pair identity needs T > 0");
  if (gammas.size() > kMaxPairSet) {
    throw ComplexityError("pair sum over " + std::to_string(gammas.size()) +
                          " ordinates; use dyadic_D for large sets");
  }
  PairIdentity out;
  out.size = gammas.size();
  if (gammas.empty()) return out;
  const PolyEval poly(gammas);
  const double support = kernel.scale * T;
  // |P(-t)|^2 = |P(t)|^2 and psi is even.
  const auto lhs = panel_integral([&](double t) { return poly(t) * kernel.psi(t / T); }, 0.0, support,
                                  panel_width(poly.frequency_span()));
  out.lhs = 2.0 * lhs.value;
  out.lhs_error = 2.0 * lhs.error;
  double diag = 0.0;
  double off = 0.0;
  const double h0 = kernel.psi_hat(0.0);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    diag += h0 / gammas[i];
    for (std::size_t j = i + 1; j < gammas.size(); ++j) {
      off += poly.amp[i] * poly.amp[j] * kernel.psi_hat(T * (poly.lg[i] - poly.lg[j]) / kTwoPi);
    }
  }
  out.rhs = T * (diag + 2.0 * off);
  return out;
}

Estimate mean_square(std::span<const double> gammas, double t0, double t1) {
  if (gammas.empty() || !(t1 > t0)) return {};
  const PolyEval poly(gammas);
  return panel_integral(poly, t0, t1, panel_width(poly.frequency_span()));
}

DyadicMethod parse_dyadic_method(const std::string& tag) {
  if (tag == "quadrature") return DyadicMethod::quadrature;
  if (tag == "pair_count") return DyadicMethod::pair_count;
  if (tag == "weighted_pairs") return DyadicMethod::weighted_pairs;
  throw DomainError("unknown dyadic method '" + tag + "'");
}

std::string to_string(DyadicMethod m) {
  switch (m) {
    case DyadicMethod::quadrature: return "quadrature";
    case DyadicMethod::pair_count: return "pair_count";
    case DyadicMethod::weighted_pairs: return "weighted_pairs";
  }
  return "unknown";
}

double weighted_pair_sum(std::span<const double> a, std::span<const double> b, double T, double scale) {
  const double aT = scale * T;
  double acc = 0.0;
  for (const double g : a) {
    const double lg = std::log(g);
    double row = 0.0;
    for (const double h : b) {
      const double d = aT * (std::log(h) - lg);
      row += 1.0 / (std::sqrt(h) * (1.0 + d * d));
    }
    acc += row / std::sqrt(g);
  }
  return aT * acc;
}

MomentReport dyadic_D(const ZeroTable& table, double x, double T, DyadicMethod method, double scale) {
  if (!(x >= 100.0)) throw DomainError("dyadic blocks start at x >= 100");
  if (!(T > 1.0)) throw DomainError("dyadic mean square needs T > 1");
  if (2.0 * x > table.height_ceiling()) throw IncompleteTableError("dyadic block exceeds table height");
  MomentReport out;
  out.T = T;
  out.x = x;
  out.method = to_string(method);
  const auto block = select(table, x, 2.0 * x);
  switch (method) {
    case DyadicMethod::quadrature: {
      const auto e = mean_square(block, 1.0, T);
      out.value = e.value;
      out.error = e.error;
      break;
    }
    case DyadicMethod::pair_count: {
      const double window = x / T;
      if (2.0 * x + window > table.height_ceiling()) {
        throw IncompleteTableError("pair window exceeds table height");
      }
      const auto ord = table.ordinates();
      const auto first = std::lower_bound(ord.begin(), ord.end(), x);
      const auto last = std::lower_bound(ord.begin(), ord.end(), 2.0 * x);
      double pairs = 0.0;
      for (auto it = first; it != last; ++it) {
        const auto lo = std::lower_bound(ord.begin(), ord.end(), *it - window);
        const auto hi = std::upper_bound(ord.begin(), ord.end(), *it + window);
        pairs += static_cast<double>(hi - lo);
      }
      out.value = T / x * pairs;
      break;
    }
    case DyadicMethod::weighted_pairs: {
      if (block.size() > 2 * kMaxPairSet) throw ComplexityError("dyadic block too large for a pair sum");
      out.value = weighted_pair_sum(block, block, T, scale);
      out.error = rounding_budget(out.value, static_cast<double>(block.size()) * block.size());
      break;
    }
  }
  out.band_ratio = out.value / band(T);
  return out;
}

MomentReport second_moment(const ZeroTable& table, double T, int grid_density) {
  if (!(T > 1.0)) throw DomainError("second moment needs T > 1");
  if (grid_density < 1) throw DomainError("grid density must be positive");
  if (critical_cut(T) > 0.5 * table.height_ceiling()) {
    throw IncompleteTableError("table too short for the critical-line cut at this T");
  }
  auto n = static_cast<std::size_t>(std::ceil((T - 1.0) * grid_density));
  n = (n + 3) / 4 * 4;  // Simpson on both h and 2h
  const double h = (T - 1.0) / static_cast<double>(n);
  const auto values = g_critical_line_grid(table, 1.0, h, n + 1);
  double fine = 0.0;
  double coarse = 0.0;
  double budget = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double v = std::norm(values[k].value);
    const double wf = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    fine += wf * v;
    if (k % 2 == 0) {
      const std::size_t m = k / 2;
      const double wc = (k == 0 || k == n) ? 1.0 : (m % 2 == 1 ? 4.0 : 2.0);
      coarse += wc * v;
    }
    const double e = values[k].abs_error;
    budget += wf * (2.0 * std::abs(values[k].value) * e + e * e);
  }
  fine *= h / 3.0;
  coarse *= 2.0 * h / 3.0;
  budget *= h / 3.0;
  MomentReport out;
  out.T = T;
  out.value = fine;
  out.error = std::abs(fine - coarse) / 15.0 + budget;
  out.method = "simpson";
  out.band_ratio = fine / band(T);
  return out;
}

double diagonal_lower_bound(const ZeroTable& table, double T, double kappa) {
  const auto gammas = select(table, 0.0, std::pow(T, 0.9));
  double acc = 0.0;
  for (const double g : gammas) acc += 1.0 / g;
  return kappa * T / kTwoPi * acc;
}

double n_diff_functional(const ZeroTable& table, double X, double T, DiffVariant variant) {
  if (!(X >= 100.0) || X > T) throw DomainError("difference functional needs 100 <= X <= T");
  const double stretch = 1.0 + 1.0 / T;
  if (X * stretch > table.height_ceiling()) throw IncompleteTableError("X(1+1/T) exceeds table height");
  std::vector<double> cuts{1.0, X};
  for (const double g : select(table, 1.0, X * stretch)) {
    if (g <= X) cuts.push_back(g);
    const double back = g / stretch;
    if (back > 1.0 && back < X) cuts.push_back(back);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  long double acc = 0.0L;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double mid = 0.5 * (a + b);
    const auto d = static_cast<double>(table.count_upto(mid * stretch) - table.count_upto(mid));
    if (variant == DiffVariant::N) {
      acc += d * d * T * T * (1.0 / a - 1.0 / b);
      continue;
    }
    auto integrand = [&](double t) {
      const double e = d - (theta(t * stretch) - theta(t)) / kPi;
      const double r = e * T / t;
      return r * r;
    };
    acc += composite_gauss(integrand, a, b, 1.0, 8);
  }
  return static_cast<double>(acc);
}

Estimate s_tilde_constant() {
  static const Estimate value = [] {
    constexpr double kTop = 40.0;
    // log|zeta| = log((s-1) zeta(s)) - log|s-1|; the first part is smooth.
    auto smooth = [](double s) { return std::log(specfun::zeta_times_pole_factor(s)); };
    const double q16 = composite_gauss(smooth, 0.5, kTop, 0.5, 16);
    const double q8 = composite_gauss(smooth, 0.5, kTop, 0.5, 8);
    const double log_part = -((0.5 * std::log(0.5) - 0.5) + ((kTop - 1.0) * std::log(kTop - 1.0) - (kTop - 1.0)));
    // int_40^inf log zeta = sum_n Lambda(n)/log n * n^{-40}/log n.
    double tail = 0.0;
    const auto vm = specfun::von_mangoldt_upto(64);
    vm.for_each_prime_power([&](std::int64_t n, double lp) {
      const double ln = std::log(static_cast<double>(n));
      tail += lp / ln * std::pow(static_cast<double>(n), -kTop) / ln;
    });
    const double total = q16 + log_part + tail;
    const double err = std::abs(q16 - q8) + std::pow(65.0, -kTop + 1.0) + rounding_budget(std::abs(q16) + std::abs(log_part), 1300.0);
    return Estimate{total / kPi, err / kPi};
  }();
  return value;
}

double s_tilde(const ZeroTable& table, int m, double T) {
  if (m != 1 && m != 2) throw DomainError("S~_m is implemented for m = 1, 2");
  if (!(T >= 0.0)) throw DomainError("S~_m needs T >= 0");
  const auto& arg = argument_integral(table);
  const double c1 = s_tilde_constant().value;
  if (m == 1) return arg.s1(T) + c1;
  return arg.s2(T) + c1 * T + 0.125;
}

MomentReport restricted_range_moment(const ZeroTable& table, double T) {
  if (!(T > 1.0)) throw DomainError("restricted range needs T > 1");
  if (T > table.height_ceiling()) throw IncompleteTableError("T exceeds table height");
  const auto ord = table.ordinates();
  const auto first = std::lower_bound(ord.begin(), ord.end(), T / std::log(T));
  const auto last = std::upper_bound(ord.begin(), ord.end(), T);
  const auto e = mean_square(std::span<const double>(first, last), 1.0, T);
  MomentReport out;
  out.T = T;
  out.value = e.value;
  out.error = e.error;
  out.method = "quadrature";
  out.band_ratio = e.value / band(T);
  return out;
}

}  // namespace szeta
