#include "tlcb/io.hpp"

#include "tlcb/admissible.hpp"
#include "tlcb/errors.hpp"

namespace tlcb {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) out += (out.empty() ? "" : ",") + csv_field(f);
  return out + "\n";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
  return s;
}

Json coords_json(const TLAlgebra& A, const AlgebraElement& a) {
  Json out = Json::array();
  for (const auto& [x, c] : a.coords) out.push_back({{"word", word_to_string(A.elements()[x].word)}, {"poly", c.to_string()}});
  return out;
}

}  // namespace

Json to_json(const FcElement& e) {
  return {{"word", word_to_string(e.word)},
          {"length", e.length},
          {"content", e.content},
          {"descents", {{"left", e.left_descents}, {"right", e.right_descents}}}};
}

Json to_json(const DiagramElement& d) {
  Json terms = Json::array();
  for (const auto& [t, c] : d.terms) terms.push_back({{"tangle", t.to_string()}, {"coeff", c.to_string()}});
  return {{"strands", d.strands}, {"terms", terms}};
}

Json to_json(const RuleSet& r) {
  Json j = {{"family", family_name(r.family)},
            {"plain_loop", r.plain_loop.to_string()},
            {"circle_loop", r.circle_loop.to_string()},
            {"alpha", r.alpha.to_string()},
            {"beta", r.beta.to_string()}};
  if (r.has_square) {
    j["sigma"] = r.sigma.to_string();
    j["tau"] = r.tau.to_string();
  }
  return j;
}

Json to_json(const Calibration& c) {
  Json checks = Json::array();
  for (const auto& k : c.checks)
    checks.push_back({{"relation", k.relation}, {"rank", k.rank}, {"holds", k.holds}, {"residual", k.residual}});
  Json sols = Json::array();
  for (const auto& s : c.solutions) sols.push_back(to_json(s));
  return {{"rules", to_json(c.rules)}, {"solutions", sols}, {"checks", checks}, {"notes", c.notes}};
}

Json to_json(const GramReport& r) {
  return {{"symmetric", r.symmetric},
          {"anti_associative", r.anti_associative},
          {"nondegenerate", r.nondegenerate},
          {"unitriangular_mod_vinv", r.unitriangular_mod_vinv},
          {"determinant", r.determinant.to_string()},
          {"counterexamples", r.counterexamples}};
}

Json to_json(const GramCandidate& g) {
  Json rows = Json::array();
  for (const auto& row : g.matrix) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return {{"graph", g.graph.name()}, {"matrix", rows}};
}

GramCandidate gram_candidate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("matrix"))
    throw DomainError("Gram candidate JSON needs \"graph\" and \"matrix\"");
  const std::string name = j.at("graph").get<std::string>();
  if (name.size() < 2) throw DomainError("bad graph name '" + name + "'");
  GramCandidate g;
  try {
    g.graph = CoxeterGraph(parse_family(name.substr(0, 1)), std::stoi(name.substr(1)));
  } catch (const std::logic_error&) {
    throw DomainError("bad graph name '" + name + "'");
  }
  for (const auto& row : j.at("matrix")) {
    std::vector<LaurentPoly> r;
    for (const auto& e : row) r.push_back(LaurentPoly::parse(e.get<std::string>()));
    g.matrix.push_back(std::move(r));
  }
  return g;
}

Json basis_dump(TLAlgebra& A, Basis b) {
  Json entries = Json::array();
  for (std::size_t w = 0; w < A.size(); ++w)
    entries.push_back({{"index_word", word_to_string(A.elements()[w].word)},
                       {"coords", coords_json(A, A.basis_element(b, w))}});
  return {{"graph", A.graph().name()}, {"basis", to_string(b)}, {"entries", entries}};
}

Json diagram_basis_dump(TLAlgebra& A) {
  const Family f = A.graph().family;
  if (f == Family::A) throw DomainError("diagram basis is available for families H and B");
  const RuleSet& rules = calibrated_rules(f);
  DiagramAlgebra D(rules, A.graph().rank + 1);
  Json entries = Json::array();
  for (std::size_t w = 0; w < A.size(); ++w) {
    const DiagramElement img = D.transport(A, A.canonical_basis()[w]);
    Json e = {{"index_word", word_to_string(A.elements()[w].word)}};
    if (auto t = as_basis_element(img, rules)) {
      e["diagram"] = t->to_string();
      e["scale"] = f == Family::B ? canonical_scale(*t) : 1;
    } else {
      e["image"] = to_json(img);
    }
    entries.push_back(e);
  }
  return {{"graph", A.graph().name()}, {"basis", "diagram"}, {"rules", to_json(rules)}, {"entries", entries}};
}

std::string enumerate_csv(const std::vector<FcElement>& elems) {
  std::string out = csv_row({"word", "length", "content", "left_descents", "right_descents"});
  for (const auto& e : elems)
    out += csv_row({word_to_string(e.word), std::to_string(e.length), join(e.content, " "), join(e.left_descents, " "),
                    join(e.right_descents, " ")});
  return out;
}

std::string basis_csv(TLAlgebra& A, Basis b) {
  std::string out = csv_row({"index_word", "word", "poly"});
  for (std::size_t w = 0; w < A.size(); ++w)
    for (const auto& [x, c] : A.basis_element(b, w).coords)
      out += csv_row({word_to_string(A.elements()[w].word), word_to_string(A.elements()[x].word), c.to_string()});
  return out;
}

std::string structure_csv(TLAlgebra& A, Basis b) {
  std::string out = csv_row({"x", "y", "z", "poly"});
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < A.size(); ++y)
      for (const auto& [z, c] : A.structure_constants(b, x, y).coords)
        out += csv_row({word_to_string(A.elements()[x].word), word_to_string(A.elements()[y].word),
                        word_to_string(A.elements()[z].word), c.to_string()});
  return out;
}

}  // namespace tlcb
