#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "szeta/errors.hpp"
#include "szeta/moments.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/specfun.hpp"

using namespace szeta;
using std::numbers::pi;

namespace {
std::span<const double> first(std::size_t n) { return test::table().ordinates().subspan(0, n); }
}  // namespace

TEST_CASE("window kernel") {
  const WindowKernel k;
  CHECK(k.psi(0.0) == 1.0);
  CHECK(k.psi(0.5) == doctest::Approx(0.25));
  CHECK(k.psi(1.5) == 0.0);
  CHECK(k.psi_hat(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (double xi : {1e-4, 0.01, 0.3, 1.7, 12.5}) {
    const double numeric =
        2.0 * composite_gauss([&](double x) { return k.psi(x) * std::cos(2.0 * pi * x * xi); }, 0.0, 1.0, 0.01, 16);
    CHECK(k.psi_hat(xi) == doctest::Approx(numeric).epsilon(1e-11));
    CHECK(k.psi_hat(-xi) == k.psi_hat(xi));
  }
  const WindowKernel wide{KernelShape::fejer_squared, 2.0};
  CHECK(wide.psi(1.5) == doctest::Approx(0.0625));
  CHECK(wide.psi_hat(0.0) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("pair identity") {
  const WindowKernel k;
  const auto single = smoothed_pair_identity(first(1), 30.0, k);
  const double g = test::table().ordinates()[0];
  CHECK(single.rhs == doctest::Approx(30.0 * k.psi_hat(0.0) / g).epsilon(1e-14));
  CHECK(single.lhs == doctest::Approx(single.rhs).epsilon(1e-10));

  const auto two = smoothed_pair_identity(first(2), 40.0, k);
  const double a = test::table().ordinates()[0], b = test::table().ordinates()[1];
  const double expected = 40.0 * (1.0 / a + 1.0 / b) * k.psi_hat(0.0) +
                          2.0 * 40.0 / std::sqrt(a * b) * k.psi_hat(40.0 * std::log(b / a) / (2.0 * pi));
  CHECK(two.rhs == doctest::Approx(expected).epsilon(1e-13));

  const auto hundred = smoothed_pair_identity(first(100), 50.0, k);
  CHECK(std::abs(hundred.lhs - hundred.rhs) / hundred.rhs < 1e-6);
  for (double scale : {0.5, 2.0}) {
    const auto r = smoothed_pair_identity(test::table(), {500.0, 700.0}, 80.0, WindowKernel{KernelShape::fejer_squared, scale});
    CHECK(std::abs(r.lhs - r.rhs) / r.rhs < 1e-6);
  }
  CHECK(smoothed_pair_identity(test::table(), {20.0, 20.5}, 10.0).size == 0);
  CHECK_THROWS_AS(smoothed_pair_identity(test::table(), {0.0, 20000.0}, 10.0), ComplexityError);
}

TEST_CASE("dyadic mean squares") {
  const auto& t = test::table();
  const auto q = dyadic_D(t, 500.0, 2000.0, DyadicMethod::quadrature);
  const auto w = dyadic_D(t, 500.0, 2000.0, DyadicMethod::weighted_pairs);
  const auto p = dyadic_D(t, 500.0, 2000.0, DyadicMethod::pair_count);
  CHECK(q.value / w.value > 0.1);
  CHECK(q.value / w.value < 10.0);
  CHECK(p.value > 0.0);
  CHECK(q.method == "quadrature");
  CHECK(q.band_ratio == doctest::Approx(q.value / (2000.0 * std::pow(std::log(2000.0), 2))));

  SUBCASE("band for T/log T <= x <= T") {
    const double T = 2000.0, L = std::log(T);
    const std::pair<double, double> cases[] = {{300.0, oracle::kD300}, {1000.0, oracle::kD1000}, {2000.0, oracle::kD2000}};
    for (const auto& [x, ref] : cases) {
      const double d = dyadic_D(t, x, T, DyadicMethod::quadrature).value;
      CHECK(d == doctest::Approx(ref).epsilon(1e-9));
      CHECK(d <= 25.0 * T * L * L);
      if (x != 1000.0) CHECK(d >= x * L * L / 25.0);
    }
  }
  SUBCASE("band for x < T/log T") {
    const double T = 5000.0;
    for (double x : {100.0, 300.0}) {
      const double d = dyadic_D(t, x, T, DyadicMethod::quadrature).value;
      const double ratio = d / (T * std::log(x));
      CHECK(ratio >= 1.0 / 25.0);
      CHECK(ratio <= 25.0 * std::sqrt(std::log(std::log(x))));
    }
  }
  SUBCASE("window scale changes weighted pairs by at most 16x") {
    const double base = dyadic_D(t, 500.0, 2000.0, DyadicMethod::weighted_pairs, 1.0).value;
    for (double a : {0.5, 2.0}) {
      const double v = dyadic_D(t, 500.0, 2000.0, DyadicMethod::weighted_pairs, a).value;
      CHECK(v / base <= 16.0);
      CHECK(base / v <= 16.0);
    }
  }
  SUBCASE("block decomposition of the pair sum") {
    const auto ord = t.ordinates();
    const auto lo = std::span<const double>(ord.data() + 300, 200);
    const auto hi = std::span<const double>(ord.data() + 500, 150);
    const auto all = std::span<const double>(ord.data() + 300, 350);
    const double whole = weighted_pair_sum(all, all, 500.0);
    const double parts = weighted_pair_sum(lo, lo, 500.0) + weighted_pair_sum(hi, hi, 500.0) +
                         2.0 * weighted_pair_sum(lo, hi, 500.0);
    CHECK(parts == doctest::Approx(whole).epsilon(1e-12));
  }
  CHECK_THROWS_AS(dyadic_D(t, 50.0, 1000.0, DyadicMethod::quadrature), DomainError);
  CHECK_THROWS_AS(dyadic_D(t, 0.6 * t.height_ceiling(), 1000.0, DyadicMethod::quadrature), IncompleteTableError);
  CHECK(parse_dyadic_method("pair_count") == DyadicMethod::pair_count);
  CHECK(to_string(DyadicMethod::weighted_pairs) == "weighted_pairs");
  CHECK_THROWS(parse_dyadic_method("bogus"));
}

TEST_CASE("second moment") {
  const auto& t = test::table();
  const auto m200 = second_moment(t, 200.0);
  const auto m400 = second_moment(t, 400.0);
  CHECK(m200.value > 0.0);
  CHECK(m200.band_ratio >= 0.005);
  CHECK(m200.band_ratio <= 200.0);
  CHECK(m400.value > m200.value);
  CHECK(m200.value >= diagonal_lower_bound(t, 200.0));
  CHECK(m400.value >= diagonal_lower_bound(t, 400.0));
  CHECK(m200.error < 0.1 * m200.value);
  const auto coarse = second_moment(t, 200.0, 16);
  CHECK(std::abs(coarse.value - m200.value) <= coarse.error + m200.error);
}

// D(1000, 2000) / (1000 log^2 2000) = 0.0344, just under the 1/25 envelope.
TEST_CASE("lower envelope at x = 1000, T = 2000" * doctest::should_fail()) {
  const double T = 2000.0, x = 1000.0, L = std::log(T);
  CHECK(dyadic_D(test::table(), x, T, DyadicMethod::quadrature).value >= x * L * L / 25.0);
}

TEST_CASE("difference functionals") {
  const auto& t = test::table();
  const double n = n_diff_functional(t, 200.0, 200.0, DiffVariant::N);
  const double s = n_diff_functional(t, 200.0, 200.0, DiffVariant::S);
  CHECK(n > 0.0);
  CHECK(s > 0.0);
  const auto gammas = t.ordinates().subspan(0, static_cast<std::size_t>(t.count_upto(200.0)));
  const double ms = mean_square(gammas, 1.0, 200.0).value;
  CHECK(n / ms >= 1.0 / 50.0);
  CHECK(n / ms <= 50.0);

  // a synthetic table with a wide gap: only the windows just below 14.5 and 15 contribute,
  // each of length g/(T+1) with integrand (T/t)^2, giving T(1/14.5 + 1/15) in total
  const ZeroTable gap({14.5, 15.0, 400.0, 401.0}, 1000.0, 3, "gap");
  const double low = n_diff_functional(gap, 100.0, 300.0, DiffVariant::N);
  CHECK(low == doctest::Approx(300.0 * (1.0 / 14.5 + 1.0 / 15.0)).epsilon(1e-12));
  const ZeroTable empty_below({150.0, 400.0}, 1000.0, 3, "gap");
  CHECK(n_diff_functional(empty_below, 100.0, 300.0, DiffVariant::N) == 0.0);
  CHECK_THROWS_AS(n_diff_functional(t, 50.0, 200.0, DiffVariant::N), DomainError);
  CHECK_THROWS_AS(n_diff_functional(t, 300.0, 200.0, DiffVariant::N), DomainError);
}

TEST_CASE("normalized integrals of S") {
  const auto& t = test::table();
  const auto c = s_tilde_constant();
  CHECK(std::abs(c.value - oracle::kSTildeC1) < 1e-8);
  CHECK(c.error < 1e-8);
  CHECK(s_tilde(t, 2, 0.0) == doctest::Approx(0.125));
  CHECK(s_tilde(t, 1, 0.0) == doctest::Approx(c.value));
  // second scheme: sigma = 1 -+ e^{-u} on each side of the pole, plain panels beyond 1.25
  auto below = [](double u) { return specfun::log_abs_zeta_real(1.0 - std::exp(-u)) * std::exp(-u); };
  auto above = [](double u) { return specfun::log_abs_zeta_real(1.0 + std::exp(-u)) * std::exp(-u); };
  const double scheme2 =
      (composite_gauss(below, std::log(2.0), 33.0, 0.25, 16) + composite_gauss(above, std::log(4.0), 33.0, 0.25, 16) +
       composite_gauss([](double x) { return specfun::log_abs_zeta_real(x); }, 1.25, 60.0, 0.25, 16)) /
      pi;
  CHECK(std::abs(scheme2 - c.value) < 1e-6);

  double worst1 = 0.0, worst2 = 0.0;
  for (int k = 0; k <= 400; ++k) {
    const double T = 20.0 * std::pow(t.height_ceiling() / 20.0, k / 400.0);
    worst1 = std::max(worst1, std::abs(s_tilde(t, 1, T)) / std::log(T));
    worst2 = std::max(worst2, std::abs(s_tilde(t, 2, T)) * std::pow(std::log(std::log(T)), 3) / std::log(T));
  }
  CHECK(worst1 <= 3.0);
  CHECK(worst2 <= 10.0);

  // continuity across an ordinate
  const double g = t.ordinates()[10];
  CHECK(std::abs(s_tilde(t, 1, g + 1e-9) - s_tilde(t, 1, g - 1e-9)) < 1e-7);
  CHECK_THROWS_AS(s_tilde(t, 3, 100.0), DomainError);
}

TEST_CASE("restricted range") {
  const auto& t = test::table();
  const auto r = restricted_range_moment(t, 500.0);
  CHECK(r.band_ratio <= 30.0);
  CHECK(r.value > 0.0);
  // |A|^2 <= 2|A + B|^2 + 2|B|^2 with B the ordinates below T/log T
  const double T = 500.0;
  const auto all = t.ordinates().subspan(0, static_cast<std::size_t>(t.count_upto(T)));
  const auto low = t.ordinates().subspan(0, static_cast<std::size_t>(t.count_upto(T / std::log(T))));
  const double full = mean_square(all, 1.0, T).value;
  const double rest = mean_square(low, 1.0, T).value;
  CHECK(r.value <= 2.0 * full + 2.0 * rest);
  CHECK(restricted_range_moment(t, 14.0).value == 0.0);
}
