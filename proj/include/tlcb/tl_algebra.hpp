#pragma once

// Generalized Temperley-Lieb algebras TL(X) for X of type A, B, H over
// Z[v, v^-1]: multiplication by word rewriting, the monomial, t-tilde,
// canonical and f-bases, and the auxiliary mixed monomials used to compare
// them.

#include "tlcb/coxeter.hpp"
#include "tlcb/laurent.hpp"
#include "tlcb/letters.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlcb {

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

/// Linear combination of monomial basis elements keyed by normal words.
using Combination = std::map<Word, LaurentPoly, ShortlexLess>;

enum class Strategy { leftmost, rightmost, random };

/// Expands products of generators in the monomial basis using the defining
/// relations:  s s -> delta s;  s t s -> s (m = 3);  s t s t -> 2 s t (m = 4);
/// s t s t s -> 3 s t s - s (m = 5).  Which reducible factor is rewritten
/// first is controlled by the strategy; results are memoized by normal form.
class Rewriter {
 public:
  explicit Rewriter(CoxeterGraph g, Strategy s = Strategy::leftmost, std::uint32_t seed = 1);

  const CoxeterGraph& graph() const { return g_; }
  const Combination& reduce(const Word& w);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  CoxeterGraph g_;
  Strategy strategy_;
  std::mt19937 rng_;
  std::map<Word, Combination> memo_;
};

enum class Basis { monomial, ttilde, f, canonical };
std::string to_string(Basis b);
Basis parse_basis(std::string_view s);

/// Finitely supported coordinates over W_c (indices into TLAlgebra::elements())
/// in the tagged basis.
struct AlgebraElement {
  CoxeterGraph graph;
  Basis basis = Basis::monomial;
  std::map<std::size_t, LaurentPoly> coords;

  bool is_zero() const { return coords.empty(); }
  LaurentPoly coeff(std::size_t idx) const;
  void add(std::size_t idx, const LaurentPoly& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const LaurentPoly& c, AlgebraElement a);
  bool operator==(const AlgebraElement& o) const = default;
};

/// Product expression in the generators b_i, t-tilde_i and powers of v.
struct MixedSymbol {
  enum class Kind { b, ttilde, vpow } kind;
  int value;  // generator index, or exponent for vpow
  static MixedSymbol B(int i) { return {Kind::b, i}; }
  static MixedSymbol T(int i) { return {Kind::ttilde, i}; }
  static MixedSymbol V(int k) { return {Kind::vpow, k}; }
  bool operator==(const MixedSymbol&) const = default;
};
using MixedWord = std::vector<MixedSymbol>;

/// Integer combination of mixed words.
struct MixedSum {
  std::vector<std::pair<Integer, MixedWord>> terms;
};

/// Ordered product of MixedSum factors.
struct MixedExpr {
  std::vector<MixedSum> factors;
  std::string to_string() const;
};

struct AuxElements {
  MixedExpr f;            // f_w
  MixedExpr b_prime;      // b_w with bilateral b_1 doubled
  MixedExpr f_prime;      // f_w with b_1 inserted left of distinguished factors
  MixedExpr f_hat;        // t-tilde at internal and non-bad lateral letters
  MixedExpr f_hat_prime;  // bilateral t-tilde_1 doubled
  MixedExpr f_tilde;      // f_hat with critical letters also t-tilde
  int kappa = 0;          // number of bilateral letters
};

enum class Lattice { L, L_H };
enum class IcOrder { maximal_first, minimal_first, random };

class TLAlgebra {
 public:
  explicit TLAlgebra(CoxeterGraph g, std::size_t stratum_cap = 1000000);

  const CoxeterGraph& graph() const { return g_; }
  const std::vector<FcElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  /// Index of the FC element with this reduced expression (any member of its
  /// commutation class).  Throws DomainError if w is not FC-reduced.
  std::size_t index_of(const Word& w) const;
  std::optional<std::size_t> find_index(const Word& w) const;
  Rewriter& rewriter() { return rw_; }

  AlgebraElement zero(Basis b = Basis::monomial) const { return AlgebraElement{g_, b, {}}; }
  AlgebraElement one() const;
  /// b_w as monomial coordinates.
  AlgebraElement monomial(std::size_t idx) const;
  /// b_{w_1} ... b_{w_k} for an arbitrary word, in monomial coordinates.
  AlgebraElement word(const Word& w);
  AlgebraElement from_combination(const Combination& c) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement times_generator(const AlgebraElement& a, int s);  // a * b_s
  AlgebraElement generator_times(int s, const AlgebraElement& a);  // b_s * a

  /// t-tilde_w in monomial coordinates.
  const AlgebraElement& ttilde_element(std::size_t idx);
  AlgebraElement to_monomial(const AlgebraElement& a);
  AlgebraElement to_basis(const AlgebraElement& a, Basis target);

  AlgebraElement bar(const AlgebraElement& a);
  /// Smallest m with a in v^m (lattice); nullopt for zero.
  std::optional<int> lattice_degree(const AlgebraElement& a, Lattice which);
  /// Equality of images under the projection L_H -> L_H / v^-1 L_H (both must
  /// lie in L_H).
  bool pi_equal(const AlgebraElement& a, const AlgebraElement& b, Lattice which);

  /// The IC basis in monomial coordinates, by the usual triangular recursion.
  const std::vector<AlgebraElement>& canonical_basis();
  std::vector<AlgebraElement> canonical_basis_with_order(IcOrder order, std::uint32_t seed = 1);

  AuxElements aux_elements(std::size_t idx);
  /// f_w in monomial coordinates.
  const AlgebraElement& f_element(std::size_t idx);
  AlgebraElement evaluate(const MixedExpr& e);
  AlgebraElement evaluate(const MixedWord& w);

  /// Coordinates in `basis` of B_x B_y where B is that basis.
  AlgebraElement structure_constants(Basis basis, std::size_t x, std::size_t y);
  /// Basis element B_w in monomial coordinates.
  const AlgebraElement& basis_element(Basis basis, std::size_t idx);

 private:
  AlgebraElement express_unitriangular(const AlgebraElement& monomial_coords, Basis target);
  const AlgebraElement& right_gen(std::size_t idx, int s);
  const AlgebraElement& product(std::size_t x, std::size_t y);

  CoxeterGraph g_;
  std::vector<FcElement> elems_;
  std::map<Word, std::size_t> index_;
  Rewriter rw_;
  std::vector<std::vector<std::optional<AlgebraElement>>> right_table_;
  std::vector<std::optional<AlgebraElement>> ttilde_;
  std::vector<AlgebraElement> canonical_;
  std::vector<std::optional<AlgebraElement>> f_;
  std::vector<AlgebraElement> monomials_;
  std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> product_cache_;
};

/// Word of symbols with coefficient, for text dumps: "t1 t2 b3 v^-1".
std::string to_string(const MixedWord& w);

}  // namespace tlcb
