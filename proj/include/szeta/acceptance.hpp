#pragma once

#include <string>
#include <vector>

#include "szeta/zero_data.hpp"

// Numerical acceptance suite. Each criterion is deterministic and reports a
// one-line summary of the quantity it compared.
namespace szeta::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kTableCriteria = 13;

// Criteria 1..13; id outside that range throws DomainError.
CriterionResult run_criterion(const ZeroTable& table, int id);

std::vector<CriterionResult> run_all(const ZeroTable& table);

// "PASS  3 laurent round-trip: max deviation 1.2e-13"
std::string format_line(const CriterionResult& r);

}  // namespace szeta::acceptance
