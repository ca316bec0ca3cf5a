#include "szeta/smooth_terms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/roots.hpp>

#include "szeta/detail/rs_coeffs.hpp"
#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/specfun.hpp"

namespace szeta {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAsymptoticFloor = 10.0;

const std::array<double, kMaxThetaTerms>& theta_table() {
  static const std::array<double, kMaxThetaTerms> table = [] {
    std::array<double, kMaxThetaTerms> out{};
    for (int j = 1; j <= kMaxThetaTerms; ++j) {
      const double b = std::abs(specfun::kBernoulliEven[j - 1]);
      out[j - 1] = (1.0 - std::ldexp(1.0, 1 - 2 * j)) * b / (4.0 * j * (2.0 * j - 1.0));
    }
    return out;
  }();
  return table;
}

double theta_series(double t, int terms) {
  const auto& c = theta_table();
  const double inv2 = 1.0 / (t * t);
  double tail = 0.0;
  for (int j = terms; j >= 1; --j) tail = tail * inv2 + c[j - 1];
  tail /= t;
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + tail;
}

// log n and n^{-1/2} for the Riemann-Siegel main sum.
struct RsTables {
  std::vector<double> log_n;
  std::vector<double> inv_sqrt_n;
  explicit RsTables(std::size_t n) : log_n(n + 1), inv_sqrt_n(n + 1) {
    for (std::size_t k = 1; k <= n; ++k) {
      log_n[k] = std::log(static_cast<double>(k));
      inv_sqrt_n[k] = 1.0 / std::sqrt(static_cast<double>(k));
    }
  }
};

const RsTables& rs_tables() {
  static const RsTables tables(4096);
  return tables;
}

double horner(std::span<const double> c, double u) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

}  // namespace

double theta_coefficient(int j) {
  if (j < 1 || j > kMaxThetaTerms) throw DomainError("theta coefficient index must be in 1..8");
  return theta_table()[j - 1];
}

double f_coefficient(int j) { return theta_coefficient(j) / kPi; }

ThetaExpansion::ThetaExpansion(int term_count) {
  if (term_count < 0 || term_count > kMaxThetaTerms) {
    throw DomainError("theta expansion supports 0..8 terms");
  }
  coefficients_.assign(theta_table().begin(), theta_table().begin() + term_count);
}

double ThetaExpansion::operator()(double t) const {
  if (!(t >= kAsymptoticFloor)) throw DomainError("theta series needs t >= 10");
  return theta_series(t, term_count());
}

double ThetaExpansion::derivative(double t) const {
  if (!(t >= kAsymptoticFloor)) throw DomainError("theta series needs t >= 10");
  double tail = 0.0;
  for (int j = 1; j <= term_count(); ++j) {
    tail += coefficients_[j - 1] * (1.0 - 2.0 * j) * std::pow(t, -2.0 * j);
  }
  return 0.5 * std::log(t / kTwoPi) + tail;
}

double rs_theta(double t, int term_count) { return ThetaExpansion(term_count)(t); }

double theta_exact(double t) {
  if (!(t >= 0.0)) throw DomainError("theta needs t >= 0");
  const Complex lg = specfun::log_gamma(Complex(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

double theta(double t) {
  return t >= kAsymptoticFloor ? theta_series(t, kMaxThetaTerms) : theta_exact(t);
}

double theta_integral(double a, double b) {
  if (!(a >= 0.0) || b < a) throw DomainError("theta_integral needs 0 <= a <= b");
  double low = 0.0;
  if (a < kAsymptoticFloor) {
    const double stop = std::min(b, kAsymptoticFloor);
    low = composite_gauss([](double u) { return theta_exact(u); }, a, stop, 1.0, 16);
    if (b <= kAsymptoticFloor) return low;
    a = kAsymptoticFloor;
  }
  const double h = b - a;
  const double p = h * (2.0 * a + h);  // b^2 - a^2
  const double l = std::log1p(h / a);  // log(b/a)
  const auto& c = theta_table();
  double value = 0.25 * (p * std::log(b / kTwoPi) + a * a * l) - 0.125 * p - 0.25 * p - kPi * h / 8.0;
  value += c[0] * l;
  for (int j = 2; j <= kMaxThetaTerms; ++j) {
    const double e = 2.0 - 2.0 * j;
    value += c[j - 1] * (std::pow(b, e) - std::pow(a, e)) / e;
  }
  return low + value;
}

double main_term(double t) {
  const double u = t / kTwoPi;
  return u * (std::log(u) - 1.0);
}

double f_term(double T, int term_count) {
  if (!(T >= kAsymptoticFloor)) throw DomainError("f(T) needs T >= 10");
  if (term_count < 0 || term_count > kMaxThetaTerms) throw DomainError("f(T) supports 0..8 terms");
  const auto& c = theta_table();
  const double inv2 = 1.0 / (T * T);
  double acc = 0.0;
  for (int j = term_count; j >= 1; --j) acc = acc * inv2 + c[j - 1];
  return acc / (T * kPi);
}

double counting_residual(const ZeroTable& table, double t) {
  if (!(t > 0.0)) throw DomainError("F(t) needs t > 0");
  return static_cast<double>(table.count_upto(t)) - main_term(t) - 0.875;
}

SArgument s_of_t(const ZeroTable& table, double t) {
  if (!(t >= kAsymptoticFloor)) throw DomainError("S(t) is provided for t >= 10");
  const auto n = table.count_upto(t);
  const auto ord = table.ordinates();
  SArgument out;
  out.value = static_cast<double>(n) - theta(t) / kPi - 1.0;
  out.at_ordinate = std::binary_search(ord.begin(), ord.end(), t);
  return out;
}

double rs_z(double t, int corrections) {
  if (!(t >= kAsymptoticFloor)) throw DomainError("Z(t) needs t >= 10");
  if (corrections < 0 || corrections > static_cast<int>(detail::kRsCorrections.size())) {
    throw DomainError("Riemann-Siegel Z supports 0..5 correction terms");
  }
  const double a = std::sqrt(t / kTwoPi);
  const auto n_terms = static_cast<std::size_t>(a);
  const RsTables* tables = &rs_tables();
  std::unique_ptr<RsTables> local;
  if (n_terms >= tables->log_n.size()) {
    local = std::make_unique<RsTables>(n_terms);
    tables = local.get();
  }
  const double th = theta_series(t, kMaxThetaTerms);
  double sum = 0.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    sum += tables->inv_sqrt_n[n] * std::cos(th - t * tables->log_n[n]);
  }
  const double u = a - static_cast<double>(n_terms) - 0.5;
  double rem = 0.0;
  double scale = 1.0;
  for (int k = 0; k < corrections; ++k) {
    rem += scale * horner(detail::kRsCorrections[k], u);
    scale /= a;
  }
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return 2.0 * sum + sign * rem / std::sqrt(a);
}

double z_exact(double t) {
  const Complex z = specfun::zeta_em(Complex(0.5, t));
  const double th = theta(t);
  return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

double gram_point(std::int64_t n) {
  if (n < 0) throw DomainError("Gram points are provided for n >= 0");
  const double target = kPi * static_cast<double>(n);
  const double w = boost::math::lambert_w0((8.0 * static_cast<double>(n) + 1.0) / (8.0 * std::numbers::e));
  double g = kTwoPi * std::exp(1.0 + w);
  const ThetaExpansion th;
  for (int it = 0; it < 6; ++it) {
    const double step = (th(g) - target) / th.derivative(g);
    g -= step;
    if (std::abs(step) < 1e-13 * g) break;
  }
  return g;
}

namespace {

struct Bracket {
  double lo, hi, zlo, zhi;
};

// Sign changes of z on [a, b] sampled at `sub` equal steps.
template <class Z>
void collect_brackets(const Z& z, double a, double za, double b, double zb, int sub,
                      std::vector<Bracket>& out) {
  double x0 = a;
  double z0 = za;
  for (int k = 1; k <= sub; ++k) {
    const double x1 = (k == sub) ? b : a + (b - a) * k / sub;
    const double z1 = (k == sub) ? zb : z(x1);
    if ((z0 < 0.0) != (z1 < 0.0)) out.push_back({x0, x1, z0, z1});
    x0 = x1;
    z0 = z1;
  }
}

template <class Z>
double refine(const Z& z, Bracket br, double tol) {
  auto done = [tol](double l, double r) { return std::abs(r - l) <= tol; };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(z, br.lo, br.hi, br.zlo, br.zhi, done, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

ZeroScan scan_zeros(double lo, double hi, double tol, double polish_below) {
  if (!(lo >= kAsymptoticFloor) || !(hi > lo)) throw DomainError("zero scan needs 10 <= lo < hi");
  if (!(tol >= 1e-10)) throw DomainError("zero scan tolerance must be >= 1e-10");
  auto z = [](double t) { return rs_z(t, 5); };

  std::int64_t n0 = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(theta(lo) / kPi)));
  while (n0 > 0 && gram_point(n0 - 1) >= lo) --n0;
  while (gram_point(n0) < lo) ++n0;

  struct Node {
    double x, z;
    std::int64_t gram;  // -1 for interval ends
  };
  std::vector<Node> nodes{{lo, z(lo), -1}};
  for (std::int64_t n = n0;; ++n) {
    const double g = gram_point(n);
    if (g > hi) break;
    if (g > nodes.back().x) nodes.push_back({g, z(g), n});
  }
  if (hi > nodes.back().x) nodes.push_back({hi, z(hi), -1});

  auto good = [](const Node& nd) {
    if (nd.gram < 0) return false;
    return (nd.gram % 2 == 0) ? nd.z > 0.0 : nd.z < 0.0;
  };

  ZeroScan out;
  std::vector<Bracket> brackets;
  auto scan_range = [&](std::size_t i0, std::size_t i1, int sub) {
    std::vector<Bracket> found;
    for (std::size_t i = i0; i < i1; ++i) {
      collect_brackets(z, nodes[i].x, nodes[i].z, nodes[i + 1].x, nodes[i + 1].z, sub, found);
    }
    return found;
  };
  auto verified_range = [&](std::size_t i0, std::size_t i1, std::int64_t expected) {
    std::vector<Bracket> found;
    for (int sub : {2, 8, 32, 128}) {
      found = scan_range(i0, i1, sub);
      if (static_cast<std::int64_t>(found.size()) == expected) break;
    }
    if (static_cast<std::int64_t>(found.size()) != expected) {
      out.missed_zero_warning = true;
      out.warnings.push_back("MissedZeroWarning: found " + std::to_string(found.size()) +
                             " zeros between " + std::to_string(nodes[i0].x) + " and " +
                             std::to_string(nodes[i1].x) + ", expected " + std::to_string(expected));
    }
    brackets.insert(brackets.end(), found.begin(), found.end());
  };

  std::vector<std::size_t> good_idx;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (good(nodes[i])) good_idx.push_back(i);
  }
  if (good_idx.empty()) {
    auto found = scan_range(0, nodes.size() - 1, 32);
    const double expected = (theta(hi) - theta(lo)) / kPi;
    if (std::abs(static_cast<double>(found.size()) - expected) > 3.0) {
      out.missed_zero_warning = true;
      out.warnings.push_back("MissedZeroWarning: zero count far from the theta-based expectation");
    }
    brackets = std::move(found);
  } else {
    // Below the first zero the count up to a good Gram point g_n is n + 1.
    if (lo < 14.0) {
      verified_range(0, good_idx.front(), nodes[good_idx.front()].gram + 1);
    } else {
      auto head = scan_range(0, good_idx.front(), 32);
      brackets.insert(brackets.end(), head.begin(), head.end());
    }
    for (std::size_t k = 0; k + 1 < good_idx.size(); ++k) {
      const auto i0 = good_idx[k];
      const auto i1 = good_idx[k + 1];
      verified_range(i0, i1, nodes[i1].gram - nodes[i0].gram);
    }
    auto tail = scan_range(good_idx.back(), nodes.size() - 1, 32);
    brackets.insert(brackets.end(), tail.begin(), tail.end());
  }

  out.ordinates.reserve(brackets.size());
  for (const auto& br : brackets) {
    double root = refine(z, br, tol);
    if (root < polish_below) {
      const double d = std::max(1e-7, 4.0 * tol);
      Bracket pb{root - d, root + d, z_exact(root - d), z_exact(root + d)};
      if ((pb.zlo < 0.0) == (pb.zhi < 0.0)) {
        pb = {br.lo, br.hi, z_exact(br.lo), z_exact(br.hi)};
      }
      if ((pb.zlo < 0.0) != (pb.zhi < 0.0)) root = refine(z_exact, pb, tol);
    }
    out.ordinates.push_back(root);
  }
  std::sort(out.ordinates.begin(), out.ordinates.end());
  return out;
}

ZeroScan find_zeros(double lo, double hi, double tol) {
  if (!(lo >= kAsymptoticFloor) || !(hi > lo) || hi > 1000.0) {
    throw DomainError("find_zeros needs 10 <= lo < hi <= 1000");
  }
  return scan_zeros(lo, hi, tol, hi + 1.0);
}

ArgumentIntegral::ArgumentIntegral(const ZeroTable& table) : height_(table.height_ceiling()) {
  const auto ord = table.ordinates();
  // No zero lies below 14, so on [0, 10] S = -theta/pi - 1.
  const double x0 = kAsymptoticFloor;
  Knot first{x0, static_cast<long double>(s1(x0)), static_cast<long double>(s2(x0)), 0};
  knots_.push_back(first);
  const GaussRule& rule = gauss_rule(8);
  auto extend = [&](double x, std::int64_t count_after) {
    const Knot& k = knots_.back();
    const double h = x - k.x;
    const double local = local_s1(k, x);
    const double area = rule.integrate([&](double u) { return local_s1(k, u); }, k.x, x);
    Knot next{x, k.s1 + local, k.s2 + static_cast<long double>(h) * k.s1 + area, count_after};
    knots_.push_back(next);
  };
  std::size_t i = 0;
  while (i < ord.size()) {
    const double g = ord[i];
    std::size_t j = i;
    while (j < ord.size() && ord[j] == g) ++j;
    extend(g, static_cast<std::int64_t>(j));
    i = j;
  }
  if (height_ > knots_.back().x) extend(height_, knots_.back().count);
}

double ArgumentIntegral::local_s1(const Knot& k, double x) const {
  return static_cast<double>(k.count - 1) * (x - k.x) - theta_integral(k.x, x) / kPi;
}

std::size_t ArgumentIntegral::locate(double x) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](double v, const Knot& k) { return v < k.x; });
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

double ArgumentIntegral::s1(double x) const {
  if (!(x >= 0.0)) throw DomainError("S1 needs x >= 0");
  if (x > height_) throw IncompleteTableError("S1 requested above table height");
  if (knots_.empty() || x < knots_.front().x) {
    return -composite_gauss([](double u) { return theta_exact(u) / kPi + 1.0; }, 0.0, x, 1.0, 16);
  }
  const Knot& k = knots_[locate(x)];
  return static_cast<double>(k.s1 + local_s1(k, x));
}

double ArgumentIntegral::s2(double x) const {
  if (!(x >= 0.0)) throw DomainError("S2 needs x >= 0");
  if (x > height_) throw IncompleteTableError("S2 requested above table height");
  if (knots_.empty() || x < knots_.front().x) {
    return -composite_gauss([x](double u) { return (x - u) * (theta_exact(u) / kPi + 1.0); }, 0.0, x,
                            1.0, 16);
  }
  const Knot& k = knots_[locate(x)];
  const double area = gauss_rule(8).integrate([&](double u) { return local_s1(k, u); }, k.x, x);
  return static_cast<double>(k.s2 + static_cast<long double>(x - k.x) * k.s1 + area);
}

const ArgumentIntegral& argument_integral(const ZeroTable& table) {
  const auto& data = table.data();
  std::call_once(data.argument_once,
                 [&] { data.argument = std::make_shared<const ArgumentIntegral>(table); });
  return *data.argument;
}

}  // namespace szeta
