#pragma once

// Linear combinations of reduced tangles, the reduction rules that remove
// loops and surplus decorations, and the map from generator words to
// diagrams (b_i -> U_i, with b_1 -> 2 U_1 in type B).

#include "tlcb/coxeter.hpp"
#include "tlcb/laurent.hpp"
#include "tlcb/tangle.hpp"

#include <map>
#include <string>
#include <utility>

namespace tlcb {

class TLAlgebra;
struct AlgebraElement;

/// Scalars of a diagram reduction system.  On an edge or loop,
/// circle circle = alpha circle + beta (plain), and square = sigma circle + tau.
struct RuleSet {
  Family family = Family::H;
  RationalLaurent plain_loop, circle_loop;
  RationalLaurent alpha, beta;
  bool has_square = false;
  RationalLaurent sigma, tau;
  std::string to_string() const;
  bool operator==(const RuleSet&) const = default;
};

struct DiagramElement {
  int strands = 0;
  std::map<Tangle, RationalLaurent> terms;

  bool is_zero() const { return terms.empty(); }
  RationalLaurent coeff(const Tangle& t) const;
  void add(const Tangle& t, const RationalLaurent& c);
  DiagramElement& operator+=(const DiagramElement& o);
  DiagramElement& operator-=(const DiagramElement& o);
  friend DiagramElement operator+(DiagramElement a, const DiagramElement& b) { return a += b; }
  friend DiagramElement operator-(DiagramElement a, const DiagramElement& b) { return a -= b; }
  friend DiagramElement operator*(const RationalLaurent& c, DiagramElement a);
  bool operator==(const DiagramElement&) const = default;
  /// One "coeff * tangle" per line, in tangle order.
  std::string to_string() const;
};

/// Applies the rules to a raw composite: loops become scalars, every edge is
/// left with at most one circle and no squares.
DiagramElement reduce(const RawComposite& raw, const RuleSet& rules);

/// Decoration sequence folded to a*circle + b.
std::pair<RationalLaurent, RationalLaurent> fold_decorations(const std::vector<Deco>& decos, const RuleSet& rules);

class DiagramAlgebra {
 public:
  DiagramAlgebra(RuleSet rules, int strands);

  const RuleSet& rules() const { return rules_; }
  int strands() const { return n_; }

  DiagramElement identity() const;
  DiagramElement single(const Tangle& t, const RationalLaurent& c = 1) const;
  /// Image of b_i.
  DiagramElement generator(int i) const;
  /// a stacked on b.
  DiagramElement multiply(const DiagramElement& a, const DiagramElement& b);
  DiagramElement evaluate_word(const Word& w);
  /// Image of an algebra element of TL(X) with rank strands - 1.
  DiagramElement transport(TLAlgebra& A, const AlgebraElement& a);

 private:
  const DiagramElement& product(const Tangle& a, const Tangle& b);

  RuleSet rules_;
  int n_;
  std::map<std::pair<Tangle, Tangle>, DiagramElement> cache_;
  std::map<Word, DiagramElement> words_;
};

/// Number of closed loops formed when U_{w_1} ... U_{w_k} are stacked with no
/// reduction at all.
int loop_count(int strands, const Word& w);

}  // namespace tlcb
