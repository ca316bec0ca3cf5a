#pragma once

#include <span>
#include <string>
#include <vector>

#include "szeta/quadrature.hpp"
#include "szeta/zero_data.hpp"

// Mean values of Dirichlet polynomials over zero ordinates and of G on the
// critical line, plus iterated integrals of S.
namespace szeta {

enum class KernelShape { fejer_squared };

// psi(x) = max(1 - |x|, 0)^2 dilated by `scale`, with its Fourier transform
// psi_hat(xi) = int psi(x) e^{-2 pi i x xi} dx.
struct WindowKernel {
  KernelShape shape = KernelShape::fejer_squared;
  double scale = 1.0;

  double psi(double x) const;
  double psi_hat(double xi) const;
};

struct MomentReport {
  double T = 0.0;
  double x = 0.0;  // dyadic block start (dyadic_D only)
  double value = 0.0;
  double error = 0.0;
  std::string method;
  double band_ratio = 0.0;  // value / (T log^2 T)
};

// Ordinates in (lo, hi].
struct OrdinateRange {
  double lo = 0.0;
  double hi = 0.0;
};

inline constexpr std::size_t kMaxPairSet = 10000;

struct PairIdentity {
  double lhs = 0.0;        // int |sum_A gamma^{-1/2-it}|^2 psi(t/T) dt
  double lhs_error = 0.0;  // quadrature error estimate
  double rhs = 0.0;        // T sum (gamma gamma')^{-1/2} psi_hat(T log(gamma/gamma')/2pi)
  std::size_t size = 0;
};

// ComplexityError when more than 1e4 ordinates are selected.
PairIdentity smoothed_pair_identity(const ZeroTable& table, OrdinateRange set, double T,
                                    const WindowKernel& kernel = {});
PairIdentity smoothed_pair_identity(std::span<const double> gammas, double T,
                                    const WindowKernel& kernel = {});

// int_{t0}^{t1} |sum gamma^{-1/2-it}|^2 dt by panel Gauss-Legendre sized to
// the largest frequency log(max/min).
Estimate mean_square(std::span<const double> gammas, double t0, double t1);

enum class DyadicMethod { quadrature, pair_count, weighted_pairs };
DyadicMethod parse_dyadic_method(const std::string& tag);
std::string to_string(DyadicMethod m);

// a T sum_{gamma in A, gamma' in B} (gamma gamma')^{-1/2} / (1 + (a T log(gamma'/gamma))^2).
double weighted_pair_sum(std::span<const double> a, std::span<const double> b, double T, double scale = 1.0);

// D(x) over the block x < gamma <= 2x; 100 <= x, 2x <= H.
MomentReport dyadic_D(const ZeroTable& table, double x, double T, DyadicMethod method,
                      double scale = 1.0);

// int_1^T |G(1/2+it)|^2 dt by composite Simpson on a grid of
// grid_density points per unit t; error from the half-density rule.
MomentReport second_moment(const ZeroTable& table, double T, int grid_density = 32);

// kappa (T/2pi) sum_{gamma <= T^0.9} 1/gamma, the diagonal lower bound.
inline constexpr double kDiagonalKappa = 0.1;
double diagonal_lower_bound(const ZeroTable& table, double T, double kappa = kDiagonalKappa);

enum class DiffVariant { N, S };

// int_1^X ((D(t(1+1/T)) - D(t)) / (t/T))^2 dt with D = N or S, evaluated
// piecewise between the breakpoints of both counts.
double n_diff_functional(const ZeroTable& table, double X, double T, DiffVariant variant);

// (1/pi) int_{1/2}^inf log|zeta(sigma)| d sigma.
Estimate s_tilde_constant();

// S~_1(T) = int_0^T S + C~_1 and S~_2(T) = int_0^T S~_1 + 1/8; 0 <= T <= H.
double s_tilde(const ZeroTable& table, int m, double T);

// int_1^T |sum_{T/log T <= gamma <= T} gamma^{-1/2-it}|^2 dt, T <= H.
MomentReport restricted_range_moment(const ZeroTable& table, double T);

}  // namespace szeta
