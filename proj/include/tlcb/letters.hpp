#pragma once

// Taxonomy of letter occurrences in reduced words of fully commutative
// elements (internal / lateral / bilateral / bad / critical) and right
// justified reduced expressions.

#include "tlcb/coxeter.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlcb {

enum class LetterKind { internal, lateral, bilateral, external };
enum class CriticalType { none, i, ii, iii, iv };

std::string to_string(LetterKind k);
std::string to_string(CriticalType c);

struct LetterInfo {
  LetterKind kind = LetterKind::external;
  bool bad = false;
  CriticalType critical = CriticalType::none;
  std::vector<int> lateral_to;  // positions of the internal letters it is lateral to

  bool is_internal() const { return kind == LetterKind::internal; }
  bool is_lateral() const { return kind == LetterKind::lateral || kind == LetterKind::bilateral; }
  bool is_bilateral() const { return kind == LetterKind::bilateral; }
  bool internal_or_lateral() const { return is_internal() || is_lateral(); }
};

/// Per-position classification of a fixed reduced word (0-based positions).
struct LetterClassification {
  Word word;
  std::vector<LetterInfo> letters;
};

/// All ways of realising `pattern` as a contiguous factor of some member of
/// the commutation class of the heap's word.  Each match maps pattern
/// positions to heap elements.  `fixed` optionally pins pattern position
/// fixed->first to element fixed->second.
std::vector<std::vector<int>> match_convex_pattern(const Heap& h, const Word& pattern,
                                                   std::optional<std::pair<int, int>> fixed = std::nullopt);

/// Pre: is_fc_reduced(g, w).
LetterClassification classify_letters(const CoxeterGraph& g, const Word& w);

/// Critical type of the occurrence at `pos` from the parses (i)-(iii) alone
/// (internal letters are reported separately as type iv by classify_letters).
CriticalType critical_parse(const Heap& h, int pos);

struct JustifiedBlock {
  int start = 0;   // 0-based position in the justified word
  int length = 0;
  int shape = 0;   // 1..6
  bool distinguished = false;
};

struct RightJustified {
  Word word;
  std::vector<int> source;  // source[k] = position in the input word of letter k
  std::vector<JustifiedBlock> blocks;
  std::vector<int> R;       // positions (in the justified word) of the set R
  LetterClassification classes;  // classification of the justified word
};

/// The lexicographically least right justified member of the class of w whose
/// internal and lateral letters form maximal blocks of the six admissible
/// shapes.  Pre: is_fc_reduced(g, w).
RightJustified right_justify(const CoxeterGraph& g, const Word& w);

/// Shape numbers 1..6 as (letter, internal) sequences.
const std::vector<std::vector<std::pair<int, bool>>>& justified_shapes();

}  // namespace tlcb
