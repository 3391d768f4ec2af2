#include "tlcb/diagram.hpp"

#include "tlcb/errors.hpp"
#include "tlcb/tl_algebra.hpp"

namespace tlcb {

std::string RuleSet::to_string() const {
  std::string s = std::string("family=") + family_name(family) + "; plain_loop=" + plain_loop.to_string() +
                  "; circle_loop=" + circle_loop.to_string() + "; alpha=" + alpha.to_string() +
                  "; beta=" + beta.to_string();
  if (has_square) s += "; sigma=" + sigma.to_string() + "; tau=" + tau.to_string();
  return s;
}

RationalLaurent DiagramElement::coeff(const Tangle& t) const {
  auto it = terms.find(t);
  return it == terms.end() ? RationalLaurent() : it->second;
}

void DiagramElement::add(const Tangle& t, const RationalLaurent& c) {
  if (c.is_zero()) return;
  auto& slot = terms[t];
  slot += c;
  if (slot.is_zero()) terms.erase(t);
}

DiagramElement& DiagramElement::operator+=(const DiagramElement& o) {
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

DiagramElement& DiagramElement::operator-=(const DiagramElement& o) {
  for (const auto& [t, c] : o.terms) add(t, -c);
  return *this;
}

DiagramElement operator*(const RationalLaurent& c, DiagramElement a) {
  if (c.is_zero()) {
    a.terms.clear();
    return a;
  }
  for (auto& [t, x] : a.terms) x = c * x;
  return a;
}

std::string DiagramElement::to_string() const {
  if (terms.empty()) return "0\n";
  std::string s;
  for (const auto& [t, c] : terms) s += "(" + c.to_string() + ") * " + t.to_string() + "\n";
  return s;
}

std::pair<RationalLaurent, RationalLaurent> fold_decorations(const std::vector<Deco>& decos, const RuleSet& r) {
  RationalLaurent a = 0, b = 1;
  for (Deco d : decos) {
    RationalLaurent c = 1, e = 0;
    if (d == Deco::square) {
      if (!r.has_square) throw DomainError("square decoration without a square rule");
      c = r.sigma;
      e = r.tau;
    }
    // (a x + b)(c x + e) with x^2 = alpha x + beta
    const RationalLaurent ac = a * c;
    RationalLaurent na = ac * r.alpha + a * e + b * c;
    RationalLaurent nb = ac * r.beta + b * e;
    a = std::move(na);
    b = std::move(nb);
  }
  return {a, b};
}

DiagramElement reduce(const RawComposite& raw, const RuleSet& rules) {
  RationalLaurent scalar = 1;
  for (const auto& loop : raw.loops) {
    auto [a, b] = fold_decorations(loop, rules);
    scalar *= a * rules.circle_loop + b * rules.plain_loop;
  }
  const Tangle& t = raw.tangle;
  DiagramElement out{t.n_north(), {}};
  if (scalar.is_zero()) return out;
  // Expand edge by edge; each edge keeps one circle or none.
  std::vector<std::pair<std::vector<Edge>, RationalLaurent>> partial{{{}, scalar}};
  for (const auto& e : t.edges()) {
    std::vector<std::pair<std::vector<Edge>, RationalLaurent>> next;
    auto [a, b] = e.decos.empty() ? std::pair<RationalLaurent, RationalLaurent>{0, 1} : fold_decorations(e.decos, rules);
    for (const auto& [edges, c] : partial) {
      if (!a.is_zero()) {
        auto ed = edges;
        ed.push_back({e.a, e.b, {Deco::circle}});
        next.push_back({std::move(ed), c * a});
      }
      if (!b.is_zero()) {
        auto ed = edges;
        ed.push_back({e.a, e.b, {}});
        next.push_back({std::move(ed), c * b});
      }
    }
    partial = std::move(next);
  }
  for (auto& [edges, c] : partial) out.add(Tangle(t.n_north(), t.n_south(), std::move(edges)), c);
  return out;
}

DiagramAlgebra::DiagramAlgebra(RuleSet rules, int strands) : rules_(std::move(rules)), n_(strands) {
  if (rules_.family == Family::A) throw DomainError("diagram calculus is available for families H and B only");
  if (strands < 1) throw DomainError("need at least one strand");
}

DiagramElement DiagramAlgebra::identity() const { return single(Tangle::identity(n_)); }

DiagramElement DiagramAlgebra::single(const Tangle& t, const RationalLaurent& c) const {
  DiagramElement e{n_, {}};
  e.add(t, c);
  return e;
}

DiagramElement DiagramAlgebra::generator(int i) const {
  const RationalLaurent scale = rules_.family == Family::B && i == 1 ? 2 : 1;
  return single(Tangle::generator(n_, i), scale);
}

const DiagramElement& DiagramAlgebra::product(const Tangle& a, const Tangle& b) {
  auto key = std::pair{a, b};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  return cache_.emplace(std::move(key), reduce(compose_raw(a, b), rules_)).first->second;
}

DiagramElement DiagramAlgebra::multiply(const DiagramElement& a, const DiagramElement& b) {
  DiagramElement out{n_, {}};
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms) out += (cx * cy) * product(x, y);
  return out;
}

DiagramElement DiagramAlgebra::evaluate_word(const Word& w) {
  if (auto it = words_.find(w); it != words_.end()) return it->second;
  DiagramElement out = identity();
  if (!w.empty()) {
    const Word prefix(w.begin(), w.end() - 1);
    out = multiply(evaluate_word(prefix), generator(w.back()));
  }
  words_.emplace(w, out);
  return out;
}

DiagramElement DiagramAlgebra::transport(TLAlgebra& A, const AlgebraElement& a) {
  if (A.graph().rank != n_ - 1) throw DomainError("algebra rank does not match the number of strands");
  DiagramElement out{n_, {}};
  for (const auto& [x, c] : A.to_monomial(a).coords)
    out += RationalLaurent(c) * evaluate_word(A.elements()[x].word);
  return out;
}

int loop_count(int strands, const Word& w) {
  Tangle cur = Tangle::identity(strands);
  int loops = 0;
  for (int s : w) {
    auto raw = compose_raw(cur, Tangle::generator(strands, s));
    loops += static_cast<int>(raw.loops.size());
    cur = std::move(raw.tangle);
  }
  return loops;
}

}  // namespace tlcb
