#pragma once

// Recognizers and enumerators for the diagram bases: H-admissible diagrams,
// B-admissible diagrams, and B-canonical diagrams (square decorations, with
// the C2 class carrying a factor 2).  Also coordinates with respect to the
// B-canonical set, the map iota from type B to type H, and the closure of
// the identity under the basis-building procedures.

#include "tlcb/diagram.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace tlcb {

enum class CanonicalClass { none, C1, C1prime, C2 };
std::string to_string(CanonicalClass c);

struct DiagramClass {
  bool h_admissible = false;
  bool b_admissible = false;
  CanonicalClass b_canonical = CanonicalClass::none;
  std::vector<EdgeType> edge_types;  // parallel to Tangle::edges()
};

DiagramClass classify_diagram(const Tangle& t);

/// Every non-crossing matching on n + n nodes with at most one decoration of
/// either kind on each exposed edge.
std::vector<Tangle> decorated_tangles(int strands);
std::vector<Tangle> h_admissible_diagrams(int strands);
std::vector<Tangle> b_admissible_diagrams(int strands);
std::vector<Tangle> b_canonical_diagrams(int strands);

/// 2 for class C2, else 1.
int canonical_scale(const Tangle& canonical);
/// The B-canonical diagram whose top term (all squares read as circles) is
/// the given B-admissible diagram.
Tangle canonical_counterpart(const Tangle& b_admissible);
/// lambda D with its squares expanded by the rules.
DiagramElement expand_canonical(const Tangle& canonical, const RuleSet& rules);
/// Coordinates of a type-B element with respect to {lambda D}.
std::map<Tangle, RationalLaurent> canonical_coordinates(const DiagramElement& e, const RuleSet& rules);

/// lambda D -> D with all decorations made circles, extended linearly.
DiagramElement iota(const DiagramElement& b_element, const RuleSet& b_rules);

/// The basis diagram e equals, if any: a single H-admissible diagram with
/// coefficient 1 (H), or a single lambda D with coefficient 1 (B, returned
/// with its squares).
std::optional<Tangle> as_basis_element(const DiagramElement& e, const RuleSet& rules);

struct ProcedureClosure {
  std::vector<Tangle> diagrams;  // basis diagrams reached, sorted
  std::size_t products = 0;      // multiplications performed
};

/// Closure of the identity under left/right multiplication by b_i and by the
/// two-generator polynomials gated on the delta-eigenvector condition,
/// keeping only results that are single basis elements.
ProcedureClosure generate_by_procedures(DiagramAlgebra& D, std::size_t cap = 100000);

}  // namespace tlcb
