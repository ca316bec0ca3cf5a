#include "szeta/quadrature.hpp"

#include <stdexcept>

namespace szeta {
namespace {

template <int N>
void expand(std::vector<double>& nodes, std::vector<double>& weights) {
  using Rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  // boost stores the nonnegative half; for even N there is no zero node.
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      nodes.push_back(0.0);
      weights.push_back(w[i]);
      continue;
    }
    nodes.push_back(-x[i]);
    weights.push_back(w[i]);
    nodes.push_back(x[i]);
    weights.push_back(w[i]);
  }
}

}  // namespace

GaussRule::GaussRule(int order) {
  switch (order) {
    case 4: expand<4>(nodes_, weights_); break;
    case 8: expand<8>(nodes_, weights_); break;
    case 16: expand<16>(nodes_, weights_); break;
    case 32: expand<32>(nodes_, weights_); break;
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

const GaussRule& gauss_rule(int order) {
  static const GaussRule g4(4), g8(8), g16(16), g32(32);
  switch (order) {
    case 4: return g4;
    case 8: return g8;
    case 16: return g16;
    case 32: return g32;
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

}  // namespace szeta
