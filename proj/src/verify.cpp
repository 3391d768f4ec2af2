#include "tlcb/verify.hpp"

#include "tlcb/admissible.hpp"
#include "tlcb/errors.hpp"
#include "tlcb/letters.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tlcb {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<Json()>& witness) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.push_back(witness());
  }

 private:
  SuiteResult& r_;
};

bool nonneg(const LaurentPoly& p) {
  for (const auto& t : p.terms())
    if (t.coeff < 0) return false;
  return true;
}

bool nonneg(const RationalLaurent& r) { return nonneg(r.numerator()); }

void require_family(const std::string& suite, const CoxeterGraph& g, Family f) {
  if (g.family != f) throw DomainError("suite " + suite + " applies to family " + family_name(f) + ", not " + g.name());
}

std::string word(const TLAlgebra& A, std::size_t i) { return word_to_string(A.elements()[i].word); }

// "t1 t2 t1 + v^-1 t2 - 2 b1 b2": signed sums of products of b_i, t_i, v^k.
MixedExpr parse_sum(const std::string& text) {
  MixedSum sum;
  std::istringstream in(text);
  std::string tok;
  Integer coeff = 1;
  MixedWord cur;
  auto flush = [&] {
    sum.terms.emplace_back(coeff, cur);
    cur.clear();
    coeff = 1;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      coeff = tok == "+" ? 1 : -1;
    } else if (tok[0] == 'b') {
      cur.push_back(MixedSymbol::B(std::stoi(tok.substr(1))));
    } else if (tok[0] == 't') {
      cur.push_back(MixedSymbol::T(std::stoi(tok.substr(1))));
    } else if (tok[0] == 'v') {
      cur.push_back(MixedSymbol::V(tok.size() == 1 ? 1 : std::stoi(tok.substr(2))));
    } else {
      coeff *= Integer(tok);
    }
  }
  flush();
  return MixedExpr{{sum}};
}

void diagram_basis(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  TLAlgebra A(g, opt.class_cap);
  const RuleSet& rules = calibrated_rules(g.family);
  DiagramAlgebra D(rules, g.rank + 1);
  std::set<Tangle> images;
  Json entries = Json::array();
  for (std::size_t w = 0; w < A.size(); ++w) {
    const DiagramElement img = D.transport(A, A.canonical_basis()[w]);
    const auto t = as_basis_element(img, rules);
    rec.check(t.has_value(), [&] { return Json{{"index_word", word(A, w)}, {"image", to_json(img)}}; });
    if (!t) continue;
    images.insert(*t);
    entries.push_back({{"index_word", word(A, w)}, {"diagram", t->to_string()}});
    if (g.family == Family::B)
      for (const auto& [d, c] : canonical_coordinates(img, rules))
        rec.check(c.is_integral(), [&] { return Json{{"index_word", word(A, w)}, {"non_integral", c.to_string()}}; });
  }
  const auto all = g.family == Family::H ? h_admissible_diagrams(g.rank + 1) : b_canonical_diagrams(g.rank + 1);
  const std::set<Tangle> expect(all.begin(), all.end());
  rec.check(images == expect, [&] {
    Json missing = Json::array(), extra = Json::array();
    for (const auto& t : expect)
      if (!images.count(t)) missing.push_back(t.to_string());
    for (const auto& t : images)
      if (!expect.count(t)) extra.push_back(t.to_string());
    return Json{{"missing", missing}, {"unexpected", extra}};
  });
  rec.check(all.size() == A.size(), [&] { return Json{{"diagrams", all.size()}, {"fully_commutative", A.size()}}; });
  const auto closure = generate_by_procedures(D, opt.closure_cap);
  rec.check(closure.diagrams == all, [&] { return Json{{"closure_size", closure.diagrams.size()}, {"expected", all.size()}}; });
  r.details = {{"fully_commutative", A.size()},
               {"diagrams", all.size()},
               {"closure", closure.diagrams.size()},
               {"rules", to_json(rules)},
               {"entries", entries}};
}

void f_basis(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  TLAlgebra A(g, opt.class_cap);
  Json identities = Json::array();
  for (std::size_t w = 0; w < A.size(); ++w) {
    const bool eq = A.f_element(w) == A.canonical_basis()[w];
    rec.check(eq, [&] {
      return Json{{"index_word", word(A, w)},
                  {"f", basis_dump(A, Basis::f)["entries"][w]["coords"]},
                  {"c", basis_dump(A, Basis::canonical)["entries"][w]["coords"]}};
    });
    if (eq) identities.push_back(word(A, w));
  }
  r.details = {{"fully_commutative", A.size()}, {"identities", identities}};
}

void positivity(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  TLAlgebra A(g, opt.class_cap);
  std::size_t constants = 0;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < A.size(); ++y)
      for (const auto& [z, c] : A.structure_constants(Basis::canonical, x, y).coords) {
        ++constants;
        rec.check(nonneg(c), [&] { return Json{{"x", word(A, x)}, {"y", word(A, y)}, {"z", word(A, z)}, {"poly", c.to_string()}}; });
      }
  for (std::size_t w = 0; w < A.size(); ++w) {
    const auto& e = A.elements()[w];
    for (int i = 1; i <= g.rank; ++i) {
      const bool descent = std::count(e.right_descents.begin(), e.right_descents.end(), i) > 0;
      Word top = e.word;
      if (!descent) top.push_back(i);
      const auto prod = A.to_basis(A.times_generator(A.f_element(w), i), Basis::f);
      for (const auto& [x, c] : prod.coords) {
        const auto& ex = A.elements()[x];
        auto witness = [&] { return Json{{"w", word(A, w)}, {"i", i}, {"x", word(A, x)}, {"poly", c.to_string()}}; };
        rec.check(nonneg(c), witness);
        rec.check(bruhat_leq(g, ex.word, top), witness);
        rec.check(std::count(ex.right_descents.begin(), ex.right_descents.end(), i) > 0, witness);
      }
      AlgebraElement scaled = A.zero(Basis::f);
      scaled.add(w, delta());
      rec.check((prod == scaled) == descent, [&] { return Json{{"w", word(A, w)}, {"i", i}, {"descent", descent}}; });
    }
  }
  std::size_t diagram_constants = 0;
  if (g.family == Family::B) {
    const RuleSet& rules = calibrated_rules(Family::B);
    DiagramAlgebra D(rules, g.rank + 1);
    const auto cn = b_canonical_diagrams(g.rank + 1);
    std::vector<DiagramElement> lam;
    for (const auto& d : cn) lam.push_back(expand_canonical(d, rules));
    for (std::size_t x = 0; x < cn.size(); ++x)
      for (std::size_t y = 0; y < cn.size(); ++y)
        for (const auto& [t, c] : canonical_coordinates(D.multiply(lam[x], lam[y]), rules)) {
          ++diagram_constants;
          rec.check(nonneg(c) && c.is_integral(), [&] {
            return Json{{"x", cn[x].to_string()}, {"y", cn[y].to_string()}, {"z", t.to_string()}, {"coeff", c.to_string()}};
          });
        }
  }
  r.details = {{"fully_commutative", A.size()}, {"structure_constants", constants}};
  if (g.family == Family::B) r.details["diagram_structure_constants"] = diagram_constants;
}

void ttilde_identities(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  TLAlgebra A(g, opt.class_cap);
  const std::vector<std::pair<std::string, std::string>> ids = {
      {"b1 b2 b1 - b1", "t1 t2 t1 + v^-1 t2 t1 + v^-1 v^-1 t1 + t1 t2 v^-1 + v^-1 t2 v^-1 + v^-1 v^-1 v^-1"},
      {"b2 b1 b2 - b2", "t2 t1 t2 + v^-1 t1 t2 + v^-1 v^-1 t2 + t2 t1 v^-1 + v^-1 t1 v^-1 + v^-1 v^-1 v^-1"},
      {"b1 b2 b1 b2 - 2 b1 b2",
       "t1 t2 t1 t2 + t1 t2 t1 v^-1 + v^-1 t2 t1 t2 + v^-1 v^-1 t1 t2 + v^-1 v^-1 v^-1 t2"
       " + v^-1 t2 t1 v^-1 + v^-1 v^-1 t1 v^-1 + v^-1 v^-1 v^-1 v^-1"},
      {"b2 b1 b2 b1 - 2 b2 b1",
       "t2 t1 t2 t1 + t2 t1 t2 v^-1 + v^-1 t1 t2 t1 + v^-1 v^-1 t2 t1 + v^-1 v^-1 v^-1 t1"
       " + v^-1 t1 t2 v^-1 + v^-1 v^-1 t2 v^-1 + v^-1 v^-1 v^-1 v^-1"}};
  Json checked = Json::array();
  for (const auto& [lhs, rhs] : ids) {
    const AlgebraElement a = A.evaluate(parse_sum(lhs)), b = A.evaluate(parse_sum(rhs));
    rec.check(a == b, [&] { return Json{{"lhs", lhs}, {"rhs", rhs}}; });
    checked.push_back({{"lhs", lhs}, {"rhs", rhs}, {"holds", a == b}});
  }
  r.details = {{"identities", checked}};
}

void deletion(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  TLAlgebra A(g, opt.class_cap);
  std::size_t rises = 0;
  for (std::size_t w = 0; w < A.size(); ++w) {
    const Word& full = A.elements()[w].word;
    const auto cls = classify_letters(g, full);
    for (std::size_t p = 0; p < full.size(); ++p) {
      Word del = full;
      del.erase(del.begin() + static_cast<std::ptrdiff_t>(p));
      auto witness = [&] { return Json{{"word", word_to_string(full)}, {"position", p + 1}}; };
      rec.check(std::abs(loop_count(g.rank + 1, full) - loop_count(g.rank + 1, del)) <= 1, witness);
      const auto d = A.lattice_degree(A.word(del), Lattice::L_H);
      const bool special = cls.letters[p].is_internal() || cls.letters[p].critical != CriticalType::none;
      rec.check(d.has_value() && *d <= 1 && (*d == 1) == special, [&] {
        Json j = witness();
        j["degree"] = d ? Json(*d) : Json(nullptr);
        j["internal_or_critical"] = special;
        return j;
      });
      if (d && *d == 1) ++rises;
    }
  }
  r.details = {{"fully_commutative", A.size()}, {"degree_rises", rises}};
}

void confluence(const CoxeterGraph& g, const SuiteOptions& opt, SuiteResult& r) {
  Recorder rec(r);
  std::mt19937 rng(opt.seed);
  Rewriter left(g, Strategy::leftmost), right(g, Strategy::rightmost), rnd(g, Strategy::random, opt.seed + 1);
  std::uniform_int_distribution<int> len(0, opt.max_word_length), letter(1, g.rank);
  for (std::size_t k = 0; k < opt.random_words; ++k) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = letter(rng);
    const Combination& a = left.reduce(w);
    rec.check(a == right.reduce(w) && a == rnd.reduce(w), [&] { return Json{{"word", word_to_string(w)}}; });
  }
  r.details = {{"words", opt.random_words}, {"max_length", opt.max_word_length}, {"seed", opt.seed}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"diagram-basis-h", "diagram-basis-b",    "f-basis-h",
                                                 "f-basis-b",       "positivity-h",       "positivity-b",
                                                 "t-tilde-identities", "deletion",        "confluence"};
  return names;
}

SuiteResult run_suite(const std::string& suite, const CoxeterGraph& g, const SuiteOptions& opt) {
  SuiteResult r;
  r.suite = suite;
  r.graph = g.name();
  if (suite == "diagram-basis-h" || suite == "diagram-basis-b") {
    require_family(suite, g, suite.back() == 'h' ? Family::H : Family::B);
    diagram_basis(g, opt, r);
  } else if (suite == "f-basis-h" || suite == "f-basis-b") {
    require_family(suite, g, suite.back() == 'h' ? Family::H : Family::B);
    f_basis(g, opt, r);
  } else if (suite == "positivity-h" || suite == "positivity-b") {
    require_family(suite, g, suite.back() == 'h' ? Family::H : Family::B);
    positivity(g, opt, r);
  } else if (suite == "t-tilde-identities") {
    require_family(suite, g, Family::H);
    if (g.rank < 2) throw DomainError("suite t-tilde-identities needs rank at least 2");
    ttilde_identities(g, opt, r);
  } else if (suite == "deletion") {
    if (g.family == Family::A) throw DomainError("suite deletion applies to families H and B");
    deletion(g, opt, r);
  } else if (suite == "confluence") {
    confluence(g, opt, r);
  } else {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw DomainError("unknown suite '" + suite + "'; known:" + known);
  }
  return r;
}

Json to_json(const SuiteResult& r) {
  return {{"suite", r.suite},
          {"graph", r.graph},
          {"passed", r.passed},
          {"checks", r.checks},
          {"details", r.details},
          {"counterexamples", r.counterexamples}};
}

}  // namespace tlcb
