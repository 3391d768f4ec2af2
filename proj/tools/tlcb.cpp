// tlcb: command-line front end.  Exit codes: 0 all checks pass, 2 a check
// failed, 3 a resource cap was hit, 4 bad configuration.

#include "tlcb/admissible.hpp"
#include "tlcb/errors.hpp"
#include "tlcb/render.hpp"
#include "tlcb/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace tlcb;

namespace {

enum Exit { kPass = 0, kInternal = 1, kFail = 2, kCap = 3, kConfig = 4 };

struct Config {
  std::string command;
  std::string family = "H";
  int rank = 3;
  std::string format = "json";
  std::string out;
  std::vector<std::string> suites;
  std::string basis = "canonical";
  bool structure = false;
  std::string tangle;
  std::string word;
  std::string matrix;
  bool solve = false;
  std::size_t cap_class_size = 1000000;
  std::size_t cap_closure = 100000;
  std::uint32_t seed = 1;
  std::size_t words = 10000;

  CoxeterGraph graph() const { return CoxeterGraph(parse_family(family), rank); }
  Json to_json() const {
    Json j = {{"command", command}, {"family", family}, {"rank", rank}, {"format", format}};
    if (!suites.empty()) j["suites"] = suites;
    if (command == "basis") j["basis"] = basis;
    if (!tangle.empty()) j["tangle"] = tangle;
    if (!word.empty()) j["word"] = word;
    if (!matrix.empty()) j["matrix"] = matrix;
    j["cap_class_size"] = cap_class_size;
    j["cap_closure"] = cap_closure;
    return j;
  }
};

struct Outcome {
  bool passed = true;
  Json result;
  std::string text;  // what goes to stdout
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw ConfigError("format " + c.format + " is not available for " + c.command);
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

Outcome enumerate(const Config& c) {
  require_format(c, {"json", "csv", "text"});
  const auto elems = enumerate_fc(c.graph(), c.cap_class_size);
  Json list = Json::array();
  for (const auto& e : elems) list.push_back(to_json(e));
  Outcome o;
  o.result = {{"graph", c.graph().name()}, {"count", elems.size()}, {"elements", list}};
  if (c.format == "csv") {
    o.text = enumerate_csv(elems);
  } else if (c.format == "text") {
    for (const auto& e : elems) o.text += (e.word.empty() ? std::string("e") : word_to_string(e.word)) + "\n";
    o.text += std::to_string(elems.size()) + " elements\n";
  } else {
    o.text = dumped(o.result);
  }
  return o;
}

Outcome basis(const Config& c) {
  require_format(c, {"json", "csv", "text"});
  TLAlgebra A(c.graph(), c.cap_class_size);
  Outcome o;
  if (c.basis == "diagram") {
    if (c.structure) throw ConfigError("--structure is not available for the diagram basis");
    o.result = diagram_basis_dump(A);
    if (c.format == "csv") {
      o.text = "index_word,diagram,scale\n";
      for (const auto& e : o.result["entries"])
        o.text += "\"" + e["index_word"].get<std::string>() + "\",\"" + e.value("diagram", std::string()) + "\"," +
                  std::to_string(e.value("scale", 0)) + "\n";
    } else if (c.format == "text") {
      for (const auto& e : o.result["entries"])
        o.text += "[" + e["index_word"].get<std::string>() + "]\n" + render_ascii(Tangle::parse(e["diagram"].get<std::string>()));
    } else {
      o.text = dumped(o.result);
    }
    return o;
  }
  const Basis b = parse_basis(c.basis);
  o.result = basis_dump(A, b);
  if (c.format == "csv") {
    o.text = c.structure ? structure_csv(A, b) : basis_csv(A, b);
  } else if (c.format == "text") {
    for (const auto& e : o.result["entries"]) {
      std::string line = "[" + e["index_word"].get<std::string>() + "] =";
      for (const auto& t : e["coords"]) line += " (" + t["poly"].get<std::string>() + ")*b[" + t["word"].get<std::string>() + "]";
      o.text += line + "\n";
    }
  } else {
    o.text = dumped(o.result);
  }
  return o;
}

Outcome verify(const Config& c) {
  require_format(c, {"json", "text"});
  const CoxeterGraph g = c.graph();
  std::vector<std::string> suites = c.suites;
  if (suites.empty()) {
    if (g.family == Family::H)
      suites = {"diagram-basis-h", "f-basis-h", "positivity-h", "t-tilde-identities", "deletion", "confluence"};
    else if (g.family == Family::B)
      suites = {"diagram-basis-b", "f-basis-b", "positivity-b", "deletion", "confluence"};
    else
      suites = {"confluence"};
  }
  SuiteOptions opt;
  opt.class_cap = c.cap_class_size;
  opt.closure_cap = c.cap_closure;
  opt.seed = c.seed;
  opt.random_words = c.words;
  Outcome o;
  Json results = Json::array();
  for (const auto& s : suites) {
    const SuiteResult r = run_suite(s, g, opt);
    o.passed = o.passed && r.passed;
    results.push_back(to_json(r));
    o.text += s + " " + r.graph + " " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.checks) + " checks)\n";
    for (const auto& ce : r.counterexamples) o.text += "  counterexample: " + ce.dump() + "\n";
  }
  o.result = {{"graph", g.name()}, {"suites", results}};
  if (c.format == "json") o.text = dumped(o.result);
  return o;
}

Outcome calibrate(const Config& c) {
  require_format(c, {"json", "text"});
  const Calibration cal = calibrate_ruleset(parse_family(c.family), c.rank, c.rank + 1);
  Outcome o;
  o.result = to_json(cal);
  for (const auto& k : cal.checks) o.passed = o.passed && k.holds;
  if (c.format == "json") {
    o.text = dumped(o.result);
  } else {
    o.text = cal.rules.to_string() + "\n";
    for (const auto& n : cal.notes) o.text += "note: " + n + "\n";
    for (const auto& k : cal.checks)
      o.text += std::string(k.holds ? "ok   " : "FAIL ") + "rank " + std::to_string(k.rank) + ": " + k.relation + "\n";
  }
  return o;
}

Outcome render(const Config& c) {
  require_format(c, {"json", "svg", "text"});
  if (c.tangle.empty() == c.word.empty()) throw ConfigError("render needs exactly one of --tangle or --word");
  DiagramElement d;
  if (!c.tangle.empty()) {
    const Tangle t = Tangle::parse(c.tangle);
    d = DiagramElement{t.n_north(), {{t, RationalLaurent(1)}}};
  } else {
    const CoxeterGraph g = c.graph();
    if (g.family == Family::A) throw ConfigError("render --word needs family H or B");
    const Word w = parse_word(c.word);
    check_word(g, w);
    DiagramAlgebra D(calibrated_rules(g.family), g.rank + 1);
    d = D.evaluate_word(w);
  }
  Outcome o;
  Json terms = Json::array();
  for (const auto& [t, coeff] : d.terms)
    terms.push_back({{"tangle", t.to_string()}, {"coeff", coeff.to_string()}, {"ascii", render_ascii(t)}, {"svg", render_svg(t)}});
  o.result = {{"terms", terms}};
  if (c.format == "svg") {
    if (d.terms.size() != 1) throw ConfigError("svg output needs a single diagram; this element has " + std::to_string(d.terms.size()) + " terms");
    o.text = render_svg(d.terms.begin()->first);
  } else if (c.format == "text") {
    for (const auto& [t, coeff] : d.terms) o.text += "(" + coeff.to_string() + ") " + t.to_string() + "\n" + render_ascii(t);
  } else {
    o.text = dumped(o.result);
  }
  return o;
}

Outcome gram_check_cmd(const Config& c) {
  require_format(c, {"json", "text"});
  TLAlgebra A(c.graph(), c.cap_class_size);
  GramCandidate G = GramCandidate::identity(A);
  if (!c.matrix.empty()) {
    std::ifstream in(c.matrix);
    if (!in) throw ConfigError("cannot read " + c.matrix);
    try {
      G = gram_candidate_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("bad candidate JSON: ") + e.what());
    }
  }
  Outcome o;
  const GramReport rep = gram_check(A, G);
  o.result = {{"graph", A.graph().name()}, {"candidate", c.matrix.empty() ? "identity" : c.matrix}, {"report", to_json(rep)}};
  o.text = "candidate " + std::string(c.matrix.empty() ? "identity" : c.matrix) + ": symmetric " +
           (rep.symmetric ? "yes" : "no") + ", anti-associative " + (rep.anti_associative ? "yes" : "no") +
           ", nondegenerate " + (rep.nondegenerate ? "yes" : "no") + ", unitriangular mod v^-1 " +
           (rep.unitriangular_mod_vinv ? "yes" : "no") + "\n";
  if (c.solve || c.rank <= 2) {
    const AntiAssociativeSolve s = solve_anti_associative(A);
    Json sols = Json::array();
    for (std::size_t k = 0; k < s.solutions.size(); ++k)
      sols.push_back({{"form", to_json(s.solutions[k])}, {"report", to_json(s.reports[k])}});
    o.result["anti_associative_solve"] = {{"unknowns", s.unknowns},
                                          {"equations", s.equations},
                                          {"rank", s.rank},
                                          {"solution_dimension", s.solutions.size()},
                                          {"nonzero_solution_exists", !s.solutions.empty()},
                                          {"basis", sols}};
    o.text += "anti-associativity: " + std::to_string(s.unknowns) + " unknowns, " + std::to_string(s.equations) +
              " equations, rank " + std::to_string(s.rank) + ", solution space of dimension " +
              std::to_string(s.solutions.size()) + "\n";
  }
  if (c.format == "json") o.text = dumped(o.result);
  return o;
}

std::filesystem::path report_path(const Config& c) {
  if (!c.out.empty()) return c.out;
  const char* dir = std::getenv("TLCB_REPORT_DIR");
  std::filesystem::path base = dir && *dir ? dir : "tlcb-reports";
  std::string name = c.command.empty() ? "run" : c.command;
  if (c.command != "render") name += "-" + c.family + std::to_string(c.rank);
  return base / (name + ".json");
}

void write_report(const Config& c, const std::string& status, const Json& result) {
  const auto path = report_path(c);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << Json{{"config", c.to_json()}, {"status", status}, {"result", result}}.dump(2) << "\n";
  if (!out) std::cerr << "tlcb: could not write report " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Temperley-Lieb canonical basis workbench"};
  app.add_option("command,--command", c.command, "enumerate | basis | verify | calibrate | render | gram-check")
      ->required()
      ->check(CLI::IsMember({"enumerate", "basis", "verify", "calibrate", "render", "gram-check"}));
  app.add_option("--family", c.family, "A, B or H")->check(CLI::IsMember({"A", "B", "H"}));
  app.add_option("--rank", c.rank, "rank of the Coxeter graph (>= 2)")->check(CLI::Range(2, 64));
  app.add_option("--format", c.format, "json | csv | svg | text")->check(CLI::IsMember({"json", "csv", "svg", "text"}));
  app.add_option("--out", c.out, "report path (default $TLCB_REPORT_DIR/<command>-<graph>.json)");
  app.add_option("--suite", c.suites, "verification suite (repeatable)")->check(CLI::IsMember(suite_names()));
  app.add_option("--basis", c.basis, "monomial | ttilde | f | canonical | diagram")
      ->check(CLI::IsMember({"monomial", "ttilde", "f", "canonical", "diagram"}));
  app.add_flag("--structure", c.structure, "basis: emit structure constants (csv)");
  app.add_option("--tangle", c.tangle, "render: serialized tangle, e.g. \"n=3; N1-N2[c]; S1-S2[c]; N3-S3\"");
  app.add_option("--word", c.word, "render: word whose diagram image is drawn, e.g. 1,2,1");
  app.add_option("--matrix", c.matrix, "gram-check: JSON candidate {graph, matrix}");
  app.add_flag("--solve", c.solve, "gram-check: solve the anti-associativity system above rank 2");
  app.add_option("--cap-class-size", c.cap_class_size, "largest length stratum to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--cap-closure", c.cap_closure, "largest procedure closure")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "seed for random words");
  app.add_option("--words", c.words, "number of random words for the confluence suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    write_report(c, "config_error", {{"message", e.what()}});
    return kConfig;
  }

  try {
    Outcome o;
    if (c.command == "enumerate") o = enumerate(c);
    else if (c.command == "basis") o = basis(c);
    else if (c.command == "verify") o = verify(c);
    else if (c.command == "calibrate") o = calibrate(c);
    else if (c.command == "render") o = render(c);
    else o = gram_check_cmd(c);
    write_report(c, o.passed ? "pass" : "fail", o.result);
    std::cout << o.text;
    return o.passed ? kPass : kFail;
  } catch (const ConfigError& e) {
    std::cerr << "tlcb: " << e.what() << "\n";
    write_report(c, "config_error", {{"message", e.what()}});
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "tlcb: " << e.what() << "\n";
    write_report(c, "config_error", {{"message", e.what()}});
    return kConfig;
  } catch (const ResourceLimitError& e) {
    std::cerr << "tlcb: " << e.what() << "\n";
    write_report(c, "resource_cap", {{"message", e.what()}});
    return kCap;
  } catch (const CalibrationError& e) {
    std::cerr << "tlcb: " << e.what() << "\n";
    write_report(c, "fail", {{"message", e.what()}});
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "tlcb: internal error: " << e.what() << "\n";
    write_report(c, "internal_error", {{"message", e.what()}});
    return kInternal;
  }
}
