#pragma once

#include <functional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev::cli {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct PaperCheck {
  std::string name;
  std::string anchor;  // which worked example the check replays
  std::function<CheckResult()> run;
};

// Replays the worked examples. `a` stands in for the 4-element groupoid so a
// modified table can be used as a negative control.
std::vector<PaperCheck> paper_checks(const FiniteAlgebra& a);

}  // namespace malcev::cli
