#include "tlcb/admissible.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tlcb {

std::string to_string(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::none: return "none";
    case CanonicalClass::C1: return "C1";
    case CanonicalClass::C1prime: return "C1'";
    case CanonicalClass::C2: return "C2";
  }
  return "?";
}

namespace {

bool face_condition(const Tangle& t, Face f) {
  for (const auto& e : t.edges()) {
    if (e.a.face != f || e.b.face != f || e.b.index != e.a.index + 1) continue;
    if (e.a.index == 1 && !e.decos.empty()) return true;
    if (e.a.index > 1 && e.decos.empty()) return true;
  }
  return false;
}

}  // namespace

DiagramClass classify_diagram(const Tangle& t) {
  DiagramClass c;
  for (const auto& e : t.edges()) c.edge_types.push_back(t.edge_type(e));
  if (t.n_north() != t.n_south()) return c;

  bool single = true, circles_only = true;
  for (const auto& e : t.edges()) {
    single = single && e.decos.size() <= 1;
    circles_only = circles_only && e.count(Deco::square) == 0;
  }
  const bool all_propagating = t.propagating_count() == static_cast<int>(t.edges().size());
  const int decorations = t.decoration_count();

  c.h_admissible = single && circles_only && !(all_propagating && decorations > 0) &&
                   (all_propagating || (face_condition(t, Face::north) && face_condition(t, Face::south)));

  const Edge* p1 = nullptr;
  int p2_circled = 0, p2_count = 0;
  for (std::size_t k = 0; k < t.edges().size(); ++k) {
    const auto& e = t.edges()[k];
    if (c.edge_types[k] == EdgeType::p1) p1 = &e;
    if (c.edge_types[k] == EdgeType::p2) {
      ++p2_count;
      if (e.decos == std::vector<Deco>{Deco::circle}) ++p2_circled;
    }
  }
  if (!single) return c;
  if (circles_only) {
    const bool b1 = p1 && p1->decos.empty() && decorations == 0;
    const bool b1p = p1 && !p1->decos.empty() && !all_propagating;
    const bool b2 = p2_count == 2 && p2_circled == 2;
    c.b_admissible = b1 || b1p || b2;
  }
  if (p1) {
    if (decorations == 0)
      c.b_canonical = CanonicalClass::C1;
    else if (p1->decos == std::vector<Deco>{Deco::square} && !all_propagating)
      c.b_canonical = CanonicalClass::C1prime;
  } else if (p2_circled == 2) {
    bool others_square = true;
    for (std::size_t k = 0; k < t.edges().size(); ++k)
      if (c.edge_types[k] != EdgeType::p2 && !t.edges()[k].decos.empty())
        others_square = others_square && t.edges()[k].decos[0] == Deco::square;
    if (others_square) c.b_canonical = CanonicalClass::C2;
  }
  return c;
}

std::vector<Tangle> decorated_tangles(int strands) {
  std::vector<Tangle> out;
  for (const auto& m : noncrossing_matchings(strands)) {
    std::vector<std::size_t> exposed;
    for (std::size_t k = 0; k < m.edges().size(); ++k)
      if (m.exposed(m.edges()[k])) exposed.push_back(k);
    std::size_t combos = 1;
    for (std::size_t k = 0; k < exposed.size(); ++k) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      auto edges = m.edges();
      std::size_t c = code;
      for (std::size_t k : exposed) {
        if (c % 3 == 1) edges[k].decos = {Deco::circle};
        if (c % 3 == 2) edges[k].decos = {Deco::square};
        c /= 3;
      }
      out.emplace_back(strands, strands, std::move(edges));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Pred>
std::vector<Tangle> filter_tangles(int strands, Pred p) {
  std::vector<Tangle> out;
  for (auto& t : decorated_tangles(strands))
    if (p(classify_diagram(t))) out.push_back(std::move(t));
  return out;
}

}  // namespace

std::vector<Tangle> h_admissible_diagrams(int strands) {
  return filter_tangles(strands, [](const DiagramClass& c) { return c.h_admissible; });
}

std::vector<Tangle> b_admissible_diagrams(int strands) {
  return filter_tangles(strands, [](const DiagramClass& c) { return c.b_admissible; });
}

std::vector<Tangle> b_canonical_diagrams(int strands) {
  return filter_tangles(strands, [](const DiagramClass& c) { return c.b_canonical != CanonicalClass::none; });
}

int canonical_scale(const Tangle& canonical) {
  const auto c = classify_diagram(canonical).b_canonical;
  if (c == CanonicalClass::none) throw DomainError(canonical.to_string() + " is not B-canonical");
  return c == CanonicalClass::C2 ? 2 : 1;
}

Tangle canonical_counterpart(const Tangle& t) {
  const auto cls = classify_diagram(t);
  if (!cls.b_admissible) throw DomainError(t.to_string() + " is not B-admissible");
  std::vector<Edge> edges = t.edges();
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (!edges[k].decos.empty() && cls.edge_types[k] != EdgeType::p2) edges[k].decos = {Deco::square};
  return Tangle(t.n_north(), t.n_south(), std::move(edges));
}

DiagramElement expand_canonical(const Tangle& canonical, const RuleSet& rules) {
  return RationalLaurent(canonical_scale(canonical)) * reduce(RawComposite{canonical, {}}, rules);
}

std::map<Tangle, RationalLaurent> canonical_coordinates(const DiagramElement& e, const RuleSet& rules) {
  std::map<Tangle, RationalLaurent> out;
  DiagramElement rem = e;
  while (!rem.is_zero()) {
    auto top = rem.terms.begin();
    for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
      if (it->first.decoration_count() > top->first.decoration_count()) top = it;
    const Tangle t = top->first;
    const RationalLaurent c = top->second;
    const Tangle d = canonical_counterpart(t);
    const DiagramElement ex = expand_canonical(d, rules);
    const RationalLaurent lead = ex.coeff(t);
    const auto& terms = lead.numerator().terms();
    if (terms.size() != 1 || terms[0].exp != 0)
      throw CalibrationError("square rule gives leading coefficient " + lead.to_string() + " on " + t.to_string());
    const RationalLaurent a = c.divided_by(terms[0].coeff) * RationalLaurent(LaurentPoly(Integer(1) << lead.twos()));
    out[d] += a;
    if (out[d].is_zero()) out.erase(d);
    rem -= a * ex;
    if (rem.terms.count(t)) throw InternalConsistencyError("canonical coordinate elimination stalled");
  }
  return out;
}

DiagramElement iota(const DiagramElement& b_element, const RuleSet& b_rules) {
  DiagramElement out{b_element.strands, {}};
  for (const auto& [d, a] : canonical_coordinates(b_element, b_rules)) out.add(d.with_decorations(Deco::circle), a);
  return out;
}

std::optional<Tangle> as_basis_element(const DiagramElement& e, const RuleSet& rules) {
  if (rules.family == Family::H) {
    if (e.terms.size() != 1 || !(e.terms.begin()->second == RationalLaurent(1))) return std::nullopt;
    const Tangle& t = e.terms.begin()->first;
    if (!classify_diagram(t).h_admissible) return std::nullopt;
    return t;
  }
  try {
    const auto coords = canonical_coordinates(e, rules);
    if (coords.size() != 1 || !(coords.begin()->second == RationalLaurent(1))) return std::nullopt;
    return coords.begin()->first;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

ProcedureClosure generate_by_procedures(DiagramAlgebra& D, std::size_t cap) {
  const int n = D.strands();
  const RuleSet& rules = D.rules();
  const RationalLaurent dl(delta());
  ProcedureClosure out;
  std::map<Tangle, DiagramElement> found;
  std::deque<DiagramElement> todo;

  auto visit = [&](const DiagramElement& e) {
    auto t = as_basis_element(e, rules);
    if (!t || found.count(*t)) return;
    if (found.size() >= cap) throw ResourceLimitError("procedure closure exceeded " + std::to_string(cap) + " elements");
    found.emplace(*t, e);
    todo.push_back(e);
  };
  auto mul = [&](const DiagramElement& a, const DiagramElement& b) {
    ++out.products;
    return D.multiply(a, b);
  };

  visit(D.identity());
  while (!todo.empty()) {
    const DiagramElement cur = todo.front();
    todo.pop_front();
    for (int i = 1; i < n; ++i) {
      visit(mul(D.generator(i), cur));
      visit(mul(cur, D.generator(i)));
    }
    if (n < 3) continue;
    for (int s : {1, 2}) {
      const int sp = 3 - s;
      const auto bs = D.generator(s), bsp = D.generator(sp);
      if (mul(bsp, cur) == dl * cur) {
        visit(mul(mul(bsp, bs) - D.identity(), cur));
        if (rules.family == Family::H) visit(mul(mul(mul(bs, bsp), bs) - RationalLaurent(2) * bs, cur));
      }
      if (mul(cur, bsp) == dl * cur) {
        visit(mul(cur, mul(bs, bsp) - D.identity()));
        if (rules.family == Family::H) visit(mul(cur, mul(mul(bs, bsp), bs) - RationalLaurent(2) * bs));
      }
    }
  }
  for (const auto& [t, e] : found) out.diagrams.push_back(t);
  return out;
}

}  // namespace tlcb
