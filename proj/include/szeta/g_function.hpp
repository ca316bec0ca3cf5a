#pragma once

#include <functional>
#include <string>
#include <vector>

#include "szeta/quadrature.hpp"
#include "szeta/zero_data.hpp"

// G(s) = sum over zero ordinates of gamma^{-s}, with its continuation to
// Re s > -1 and explicit error budgets.
namespace szeta {

enum class Method {
  direct,             // full table sum plus analytic tail
  remainder_formula,  // partial sum to X plus the remainder R(s)
  continuation,       // integrated-by-parts form valid for Re s > -1
  explicit_formula,   // prime-sum representation (super zeta)
  contour,            // Hankel contour quadrature (super zeta)
};

std::string to_string(Method m);

struct EvalResult {
  Complex value;
  double abs_error = 0.0;
  Method method = Method::direct;
  std::vector<std::string> warnings;
};

// Constant in |int_0^x S| <= kArgumentEnvelope * log x, used to bound the
// unknown part of every tail beyond the table height.
inline constexpr double kArgumentEnvelope = 2.0;

// sum_{0 < gamma <= X} gamma^{-s}; 0 < X <= H.
Complex g_partial(const ZeroTable& table, Complex s, double X);

// R(s) = G(s) - g_partial(s, X) for Re s > 0, 100 <= X <= H.
EvalResult r_remainder(const ZeroTable& table, Complex s, double X);

// G(s) for Re s > -1, |s - 1| >= 1e-3, with the method picked by Re s.
EvalResult g_eval(const ZeroTable& table, Complex s);

// The integrated-by-parts representation on its own (Re s > -1, s != 1);
// g_eval uses it for Re s <= 0.
EvalResult g_continuation(const ZeroTable& table, Complex s);

// Cut point X = max(100, t sqrt(log log t)/log t) used on the critical line.
double critical_cut(double t);

// G(1/2 + it) for |t| >= 1 via the cut point above (must be <= H/2).
EvalResult g_critical_line(const ZeroTable& table, double t);

// G(1/2 + i(t0 + k step)) for k = 0..count-1, summing the whole table with a
// phase recurrence. Equal to g_critical_line point by point.
std::vector<EvalResult> g_critical_line_grid(const ZeroTable& table, double t0, double step,
                                             std::size_t count);

// A smooth weight phi on [H, inf) with |phi(x)| = O(x^{-decay}), decay > 1.
struct ZeroKernel {
  std::function<Complex(double)> value;
  std::function<Complex(double)> derivative;
  std::function<Complex(double)> second_derivative;
  double decay = 2.0;
};

// sum over all ordinates of phi(gamma): the table sum plus the tail beyond H
// from the density of zeros, with the S-part of the tail bounded.
EvalResult sum_over_zeros(const ZeroTable& table, const ZeroKernel& kernel);

}  // namespace szeta
