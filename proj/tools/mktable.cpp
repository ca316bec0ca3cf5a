// Builds a plain_ascending zero table by Riemann-Siegel scanning. The table
// ends at a good Gram point so that Rosser-rule block checks cover it.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "szeta/smooth_terms.hpp"
#include "szeta/zero_data.hpp"

int main(int argc, char** argv) {
  CLI::App app{"szeta-mktable: generate zeta zero ordinates"};
  double height = 75000.0;
  double tol = 1e-10;
  double polish_below = 1000.0;
  int decimals = 12;
  std::string out_path;
  app.add_option("--to", height, "target height (rounded down to a good Gram point)");
  app.add_option("--tol", tol, "bracket width for each root");
  app.add_option("--polish-below", polish_below, "refine zeros below this height with exact Z");
  app.add_option("--decimals", decimals, "decimals written per ordinate");
  app.add_option("--out", out_path, "output file")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    auto n = static_cast<std::int64_t>(std::floor(szeta::theta(height) / std::numbers::pi));
    double g = szeta::gram_point(n);
    while (g > height || (n % 2 == 0 ? szeta::rs_z(g) <= 0.0 : szeta::rs_z(g) >= 0.0)) {
      g = szeta::gram_point(--n);
    }
    const auto scan = szeta::scan_zeros(10.0, g, tol, polish_below);
    for (const auto& w : scan.warnings) std::cerr << w << '\n';
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return 1;
    }
    szeta::write_zero_file(out, scan.ordinates, g, decimals, "riemann-siegel scan to gram point " + std::to_string(n));
    std::cerr << scan.ordinates.size() << " zeros up to " << g << '\n';
    return scan.missed_zero_warning ? 3 : 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
