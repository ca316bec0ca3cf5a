#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szeta/zero_data.hpp"

// Smooth parts of the zero-counting formula: the Riemann-Siegel theta
// function, the correction f(T), the argument S(t) recovered from a table,
// and a Riemann-Siegel zero finder for small heights.
namespace szeta {

inline constexpr int kMaxThetaTerms = 8;

// theta_j = (1 - 2^{1-2j}) |B_{2j}| / (4j(2j-1)), j = 1..8.
double theta_coefficient(int j);

// a_j = theta_j / pi, the coefficients of f(T) = sum a_j T^{1-2j}.
double f_coefficient(int j);

// Asymptotic series of theta(t) truncated after term_count corrections.
class ThetaExpansion {
 public:
  explicit ThetaExpansion(int term_count = kMaxThetaTerms);

  int term_count() const noexcept { return static_cast<int>(coefficients_.size()); }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  double operator()(double t) const;
  double derivative(double t) const;

 private:
  std::vector<double> coefficients_;
};

// Series value; DomainError for t < 10 or term_count outside [0, 8].
double rs_theta(double t, int term_count = kMaxThetaTerms);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, for t >= 0.
double theta_exact(double t);

// Full-accuracy theta for t >= 0: exact below 10, eight-term series above.
double theta(double t);

// Integral of theta over [a, b], 0 <= a <= b, without cancellation at large
// heights (the antiderivative itself is O(b^2 log b)).
double theta_integral(double a, double b);

// (t/2pi) log(t/2pi) - t/2pi.
double main_term(double t);

// sum_{j <= term_count} a_j T^{1-2j}; DomainError for T < 10.
double f_term(double T, int term_count = kMaxThetaTerms);

// F(t) = N(t) - main(t) - 7/8 = S(t) + f(t), exact for 0 < t <= H.
double counting_residual(const ZeroTable& table, double t);

struct SArgument {
  double value = 0.0;
  bool at_ordinate = false;
};

// S(t) = N(t) - theta(t)/pi - 1 with the right-limit value at ordinates.
// Requires 10 <= t <= H.
SArgument s_of_t(const ZeroTable& table, double t);

// Riemann-Siegel Z(t) with the correction terms C_0 .. C_{corrections-1}
// (at most 5). t >= 10.
double rs_z(double t, int corrections = 5);

// Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)) from the Euler-Maclaurin zeta.
// Slow but free of Riemann-Siegel truncation; used to polish low zeros.
double z_exact(double t);

// n-th Gram point: theta(g_n) = n pi, n >= 0.
double gram_point(std::int64_t n);

struct ZeroScan {
  std::vector<double> ordinates;
  bool missed_zero_warning = false;
  std::vector<std::string> warnings;
};

// Sign changes of Z on [lo, hi], 10 <= lo < hi <= 1000, each refined to
// a bracket of width <= tol (tol >= 1e-10). Gram intervals set the scan step;
// Gram blocks whose zero count disagrees with Rosser's rule are refined and,
// failing that, flagged.
ZeroScan find_zeros(double lo, double hi, double tol);

// Same scan without the height cap, for building tables. Zeros below
// polish_below are refined with z_exact after the Riemann-Siegel bracket.
ZeroScan scan_zeros(double lo, double hi, double tol, double polish_below = 0.0);

// Cumulative integrals of S: S1(x) = int_0^x S and S2(x) = int_0^x S1,
// built once per table by exact piecewise integration between ordinates.
class ArgumentIntegral {
 public:
  explicit ArgumentIntegral(const ZeroTable& table);

  double height() const noexcept { return height_; }

  // 0 <= x <= H.
  double s1(double x) const;
  double s2(double x) const;

 private:
  struct Knot {
    double x;
    long double s1;
    long double s2;
    std::int64_t count;  // N on (x, next knot)
  };
  std::size_t locate(double x) const;
  double local_s1(const Knot& k, double x) const;

  std::vector<Knot> knots_;
  double height_;
};

// Shared per-table instance, built on first use.
const ArgumentIntegral& argument_integral(const ZeroTable& table);

}  // namespace szeta
