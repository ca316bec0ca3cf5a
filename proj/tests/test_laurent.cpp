#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "szeta/errors.hpp"
#include "szeta/g_function.hpp"
#include "szeta/laurent.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/smooth_terms.hpp"

using namespace szeta;
using std::numbers::pi;

TEST_CASE("constant of the remainder formula") {
  CHECK(c1_closed_form() == doctest::Approx(oracle::kC1).epsilon(1e-15));
  const auto& t = test::table();
  const auto c1 = estimate_C1(t);
  CHECK(std::abs(c1.value - oracle::kC1) <= c1.error);
  CHECK(c1.error < 1e-6);
  // dropping the top 10% of the table moves the estimate by less than its error
  const auto shorter = estimate_C1(t.truncated(0.9 * t.height_ceiling()));
  CHECK(std::abs(shorter.value - c1.value) <= std::max(shorter.error, c1.error));
}

TEST_CASE("coefficients c_j") {
  const auto& t = test::table();
  const auto c0 = c_coeff(t, 0);
  CHECK(std::abs(c0.value) < 1.0);
  CHECK(c0.error < 1e-3);
  const auto c0_short = c_coeff(t.truncated(0.5 * t.height_ceiling()), 0);
  CHECK(std::abs(c0.value - c0_short.value) <= c0.error + c0_short.error);

  const auto c3 = c_coeff(t, 3), c3_fine = c_coeff(t, 3, 0.5);
  CHECK(std::abs(c3.value - c3_fine.value) <= c3.error);

  CHECK_THROWS_AS(c_coeff(t, 13), DomainError);
  CHECK_THROWS_AS(c_coeff(t, -1), DomainError);
  CHECK_THROWS_AS(c_coeff(t.truncated(5000.0), 0), DomainError);
}

TEST_CASE("c_1 by Monte Carlo") {
  // -c_1 = int F(x) log x x^{-2} dx = int F(e^u) u e^{-u} du: sample u ~ Exp(1) truncated to [0, log H].
  const auto& t = test::table();
  const double L = std::log(t.height_ceiling());
  std::mt19937_64 rng(7);
  std::exponential_distribution<double> expo(1.0);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < n; ++k) {
    double u = expo(rng);
    while (u > L) u = expo(rng);
    const double v = counting_residual(t, std::exp(u)) * u;
    sum += v;
    sq += v * v;
  }
  const double mass = 1.0 - std::exp(-L);
  const double mean = sum / n * mass;
  const double sigma = std::sqrt((sq / n * mass * mass - mean * mean) / n);
  const auto c1 = c_coeff(t, 1);
  // the part beyond H is below 1e-4 and is included in c1 only
  CHECK(std::abs(-c1.value - mean) < 3.0 * sigma + 1e-4);
}

TEST_CASE("f-only toy coefficient") {
  // int_10^inf f(x) x^{-2} dx = sum a_j 10^{-2j} / (2j); numerically with x = 10/v.
  double closed = 0.0;
  for (int j = 1; j <= kMaxThetaTerms; ++j) closed += f_coefficient(j) * std::pow(10.0, -2.0 * j) / (2.0 * j);
  const double numeric =
      composite_gauss([](double v) { return v > 0.0 ? f_term(10.0 / v) / 10.0 : 0.0; }, 0.0, 1.0, 0.125, 16);
  CHECK(std::abs(numeric - closed) < 1e-10 * closed);
}

TEST_CASE("Laurent expansion") {
  const auto& t = test::table();
  const auto lc = laurent_expansion(t, 8);
  CHECK(lc.principal_2 == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-15));
  CHECK(lc.principal_1 == doctest::Approx(-std::log(2.0 * pi) / (2.0 * pi)).epsilon(1e-15));
  REQUIRE(lc.c.size() == 9);
  REQUIRE(lc.b.size() == 9);
  CHECK(lc.b[0].value == doctest::Approx(lc.C1.value + lc.c[0].value).epsilon(1e-15));
  for (std::size_t j = 1; j < lc.b.size(); ++j) {
    CHECK(lc.b[j].value == doctest::Approx(lc.c[j].value + lc.c[j - 1].value).epsilon(1e-14));
  }

  const Complex s11(1.1, 0.0);
  CHECK(std::abs(lc.evaluate(s11) - g_eval(t, s11).value) < 1e-3);
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const Complex s = 1.0 + std::polar(0.1, 2.0 * pi * k / 8.0 + 0.1);
    worst = std::max(worst, std::abs(lc.evaluate(s) - g_eval(t, s).value));
  }
  CHECK(worst < 1e-3);

  double bmax = 0.0;
  for (const auto& b : lc.b) bmax = std::max(bmax, std::abs(b.value));
  for (const Complex s : {Complex(1.1, 0.0), Complex(0.9, 0.0), Complex(1.0, 0.1), Complex(1.0, -0.1)}) {
    const auto g = g_eval(t, s);
    double err = g.abs_error + lc.C1.error;
    for (std::size_t j = 0; j < lc.b.size(); ++j) err += lc.b[j].error * std::pow(0.1, static_cast<double>(j));
    CHECK(std::abs(g.value - lc.evaluate(s)) <= err + std::pow(0.1, 9) * bmax);
  }
  CHECK_THROWS_AS(laurent_expansion(t, 13), DomainError);
}
