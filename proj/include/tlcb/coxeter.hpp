#pragma once

// Linear Coxeter graphs of type A, B, H, words, heaps and fully commutative
// elements.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tlcb {

enum class Family { A, B, H };

std::string family_name(Family f);
Family parse_family(std::string_view s);

/// Linear graph 1 - 2 - ... - n with m(1,2) = 3, 4, 5 for A, B, H and every
/// other bond of strength 3.
struct CoxeterGraph {
  Family family = Family::A;
  int rank = 1;

  CoxeterGraph() = default;
  CoxeterGraph(Family f, int n);

  int m(int i, int j) const;
  bool commute(int i, int j) const { return m(i, j) == 2; }
  std::string name() const;  // e.g. "H3"
  bool operator==(const CoxeterGraph&) const = default;
};

using Word = std::vector<int>;

std::string word_to_string(const Word& w);  // "1,2,3"; "" for the empty word
Word parse_word(std::string_view s);
/// Throws DomainError if a letter is outside 1..rank.
void check_word(const CoxeterGraph& g, const Word& w);

/// The heap (commutation poset) of a word.  Element i is the i-th letter of
/// the word; i precedes j when i < j and a chain of non-commuting letters
/// links them.  Two words are commutation equivalent iff their heaps are
/// isomorphic, and the k-th occurrence of a generator is the same element in
/// every member of the class.
class Heap {
 public:
  Heap(const CoxeterGraph& g, Word w);

  const CoxeterGraph& graph() const { return g_; }
  const Word& word() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }
  int letter(int i) const { return w_[static_cast<std::size_t>(i)]; }

  /// Strict order: i must come before j in every member of the class.
  bool precedes(int i, int j) const { return below_[static_cast<std::size_t>(j)].test(static_cast<std::size_t>(i)); }
  bool comparable(int i, int j) const { return i == j || precedes(i, j) || precedes(j, i); }
  bool is_minimal(int i) const { return below_[static_cast<std::size_t>(i)].none(); }
  bool is_maximal(int i) const;

  /// Positions of generator s, in order.
  const std::vector<int>& occurrences(int s) const;
  /// k such that element i is the k-th (0-based) occurrence of its letter.
  int occurrence_rank(int i) const { return occ_rank_[static_cast<std::size_t>(i)]; }

  /// A set S is convex if i, j in S and i < k < j imply k in S; exactly the
  /// sets that are contiguous in some member of the class.
  bool is_convex(const std::vector<int>& elems) const;

  /// Elements listed in the order of the lexicographically least member of
  /// the commutation class.
  std::vector<int> lex_least_order() const;
  Word normal_form() const;

  /// Elements that must lie strictly between the members of S: the union of
  /// open intervals (i, j) over i, j in S.
  boost::dynamic_bitset<> interval_closure(const std::vector<int>& elems) const;

 private:
  CoxeterGraph g_;
  Word w_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> occ_rank_;
};

Word normal_form(const CoxeterGraph& g, const Word& w);
bool commutation_equivalent(const CoxeterGraph& g, const Word& a, const Word& b);

/// All words reachable by swapping adjacent commuting letters.  Throws
/// ResourceLimitError when more than `cap` words are found.
std::vector<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap = 100000);

/// True iff w is a reduced expression of a fully commutative element: no
/// member of its class contains a factor s s or an alternating factor s t s...
/// of length m(s,t) >= 3.  Decided on the heap, without enumerating the class.
bool is_fc_reduced(const CoxeterGraph& g, const Word& w);

/// Shortlex comparison on words.
bool shortlex_less(const Word& a, const Word& b);

struct FcElement {
  Word word;  // lexicographically least reduced expression
  int length = 0;
  std::vector<int> content;
  std::vector<int> left_descents;
  std::vector<int> right_descents;

  static FcElement from_word(const CoxeterGraph& g, const Word& w);
  bool operator==(const FcElement& o) const { return word == o.word; }
};

/// W_c ordered by shortlex on normal words.  Throws ResourceLimitError if some
/// length stratum exceeds `stratum_cap`.
std::vector<FcElement> enumerate_fc(const CoxeterGraph& g, std::size_t stratum_cap = 1000000);

/// Bruhat order via the subword property: x <= y iff some reduced expression
/// of x is a subword of the given reduced expression of y.  `y_reduced` need
/// not be fully commutative.
bool bruhat_leq(const CoxeterGraph& g, const Word& x, const Word& y_reduced);

}  // namespace tlcb
