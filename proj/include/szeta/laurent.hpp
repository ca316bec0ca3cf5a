#pragma once

#include <vector>

#include "szeta/quadrature.hpp"
#include "szeta/zero_data.hpp"

// Laurent expansion of G at its double pole s = 1.
namespace szeta {

inline constexpr int kMaxLaurentOrder = 12;

struct LaurentCoeffs {
  double principal_2 = 0.0;  // coefficient of (s-1)^{-2}
  double principal_1 = 0.0;  // coefficient of (s-1)^{-1}
  Estimate C1;
  std::vector<Estimate> c;
  std::vector<Estimate> b;

  // Principal part plus sum_{j <= J} b_j (s-1)^j.
  Complex evaluate(Complex s) const;
};

// c_j = (-1)^j / j! int_1^inf F(x) log^j x x^{-2} dx with F = N - main - 7/8.
// max_width bounds the quadrature panels between ordinates.
// Requires 0 <= j <= 12 and H >= 1e4.
Estimate c_coeff(const ZeroTable& table, int j, double max_width = 1.0);

// 7/8 - (1 + log 2 pi)/(2 pi), obtained by letting the cut point of the
// remainder formula go to 1 where N vanishes.
double c1_closed_form();

// C_1 measured at s0 = 2, 2.5, 3; InconsistencyError when the spread exceeds
// ten times the individual errors.
Estimate estimate_C1(const ZeroTable& table);

// Principal part, C_1, c_0..c_J and b_0 = C_1 + c_0, b_j = c_j + c_{j-1}.
LaurentCoeffs laurent_expansion(const ZeroTable& table, int J);

}  // namespace szeta
