#pragma once

// Solves for the diagram reduction scalars.  The plain loop is delta; the
// edge relation (alpha, beta) and the circled loop value are found by an
// exact search so that the images of the generators satisfy every defining
// relation of TL(X); in type B the square decoration (sigma, tau) is then
// fixed by requiring the canonical basis to map onto single elements of the
// B-canonical set.  Solutions are re-checked at a larger rank.

#include "tlcb/diagram.hpp"

#include <string>
#include <vector>

namespace tlcb {

struct RelationCheck {
  std::string relation;  // e.g. "b1 b2 b1 b2 = 2 b1 b2"
  int rank = 0;
  bool holds = false;
  std::string residual;  // lhs - rhs, empty when it holds
};

/// Every defining relation of TL(X) for X = family of the rules at `rank`,
/// evaluated on the diagram images.
std::vector<RelationCheck> check_relations(const RuleSet& rules, int rank);

struct Calibration {
  RuleSet rules;
  std::vector<RuleSet> solutions;  // all exact solutions before the sign choice
  std::vector<RelationCheck> checks;
  std::vector<std::string> notes;
};

/// Throws CalibrationError when no or several admissible solutions remain,
/// or when the solved rules fail at verify_rank.
Calibration calibrate_ruleset(Family family, int solve_rank = 3, int verify_rank = 4);

/// Calibrated rules, computed once per family.
const RuleSet& calibrated_rules(Family family);

}  // namespace tlcb
