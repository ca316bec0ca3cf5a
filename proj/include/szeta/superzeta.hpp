#pragma once

#include <cstdint>
#include <utility>

#include "szeta/g_function.hpp"
#include "szeta/zero_data.hpp"

// Super zeta functions M_alpha(s) = sum over nontrivial zeros rho of
// (alpha - rho)^{-s}, with log(alpha - w) real for real w < alpha.
namespace szeta {

struct SuperZetaParams {
  double alpha = 3.0;
  double epsilon = 0.5;  // radius of the contour around c = min(1, alpha)

  double c() const { return alpha < 1.0 ? alpha : 1.0; }
  void validate() const;  // alpha > -2 and 0 < epsilon < 2 + c
};

struct ContourSpec {
  double panel_width = 0.5;
  int order = 16;
  double w_max = 40.0;
};

// Direct sum over the table, zeros taken as 1/2 +- i gamma; Re s > 1.
EvalResult m_alpha_direct(const ZeroTable& table, Complex s, const SuperZetaParams& params);

// (alpha-1)^{-s} - (1/Gamma(s)) sum Lambda(n) (log n)^{s-1} n^{-alpha}
// - 2^{-s} zeta(s, alpha/2 + 1) for alpha > 1, primes up to prime_limit >= 1e4.
EvalResult zeta_alpha_explicit(Complex s, double alpha, std::int64_t prime_limit = 1000000);

// E_alpha(s) = (1/2 pi i) int over the Hankel contour of
// zeta'/zeta(w) (alpha - w)^{-s} dw. ContourError when |zeta| < 1e-4 at a node.
EvalResult e_alpha_contour(Complex s, const SuperZetaParams& params, const ContourSpec& spec = {});

// E_alpha(s) - 2^{-s} zeta(s, alpha/2 + 1), the contour route to M_alpha.
EvalResult zeta_alpha_contour(Complex s, const SuperZetaParams& params, const ContourSpec& spec = {});

struct KernelCheck {
  Complex lhs;
  Complex rhs;
  double lhs_error = 0.0;
};

// (1/2 pi i) int n^{-w} (alpha - w)^{-s} dw against (log n)^{s-1} n^{-alpha} / Gamma(s);
// n >= 2, alpha > 1, Re s > 0.
KernelCheck kernel_integral_check(std::int64_t n, Complex s, const SuperZetaParams& params,
                                  const ContourSpec& spec = {});

struct HalfIdentity {
  double residual = 0.0;        // |M_{1/2}(s) - 2 cos(pi s/2) G(s)|
  double combined_error = 0.0;  // sum of the two quoted errors
};

HalfIdentity half_identity_residual(const ZeroTable& table, Complex s);

}  // namespace szeta
