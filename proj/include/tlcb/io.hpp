#pragma once

// JSON and CSV forms of the computed objects.  Polynomials use the canonical
// text form, words the comma form "1,2,1".  All orderings are stable.

#include "tlcb/calibrate.hpp"
#include "tlcb/gram.hpp"
#include "tlcb/tl_algebra.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tlcb {

using Json = nlohmann::ordered_json;

Json to_json(const FcElement& e);
Json to_json(const DiagramElement& d);
Json to_json(const RuleSet& r);
Json to_json(const Calibration& c);
Json to_json(const GramReport& r);
Json to_json(const GramCandidate& g);
GramCandidate gram_candidate_from_json(const Json& j);

/// {graph, basis, entries: [{index_word, coords: [{word, poly}]}]} with
/// coordinates in the monomial basis.
Json basis_dump(TLAlgebra& A, Basis b);
/// Images of the canonical basis as diagrams: {graph, basis: "diagram",
/// entries: [{index_word, diagram, scale}]}.  Families H and B only.
Json diagram_basis_dump(TLAlgebra& A);

std::string enumerate_csv(const std::vector<FcElement>& elems);
/// index_word,word,poly
std::string basis_csv(TLAlgebra& A, Basis b);
/// x,y,z,poly: B_x B_y = sum_z poly B_z.
std::string structure_csv(TLAlgebra& A, Basis b);

}  // namespace tlcb
