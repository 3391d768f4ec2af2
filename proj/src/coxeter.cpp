#include "tlcb/coxeter.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

namespace tlcb {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::H: return "H";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "H" || s == "h") return Family::H;
  throw DomainError("unknown family '" + std::string(s) + "' (expected A, B or H)");
}

CoxeterGraph::CoxeterGraph(Family f, int n) : family(f), rank(n) {
  if (n < 1) throw DomainError("rank must be positive");
}

int CoxeterGraph::m(int i, int j) const {
  if (i == j) return 1;
  if (std::abs(i - j) > 1) return 2;
  if (std::min(i, j) == 1) {
    switch (family) {
      case Family::A: return 3;
      case Family::B: return 4;
      case Family::H: return 5;
    }
  }
  return 3;
}

std::string CoxeterGraph::name() const { return family_name(family) + std::to_string(rank); }

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view s) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == s.size()) return w;
  while (true) {
    skip_ws();
    int x = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), x);
    if (ec != std::errc() || p == s.data() + i) throw DomainError("malformed word '" + std::string(s) + "'");
    w.push_back(x);
    i = static_cast<std::size_t>(p - s.data());
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != ',') throw DomainError("malformed word '" + std::string(s) + "'");
    ++i;
  }
  return w;
}

void check_word(const CoxeterGraph& g, const Word& w) {
  for (int x : w)
    if (x < 1 || x > g.rank)
      throw DomainError("letter " + std::to_string(x) + " out of range for " + g.name());
}

// ---------------------------------------------------------------------------

Heap::Heap(const CoxeterGraph& g, Word w) : g_(g), w_(std::move(w)) {
  check_word(g_, w_);
  const std::size_t n = w_.size();
  below_.assign(n, boost::dynamic_bitset<>(n));
  occ_.assign(static_cast<std::size_t>(g_.rank) + 1, {});
  occ_rank_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!g_.commute(w_[i], w_[j]) && !below_[j].test(i)) {
        below_[j] |= below_[i];
        below_[j].set(i);
      }
    }
    auto& occ = occ_[static_cast<std::size_t>(w_[j])];
    occ_rank_[j] = static_cast<int>(occ.size());
    occ.push_back(static_cast<int>(j));
  }
}

bool Heap::is_maximal(int i) const {
  for (int j = i + 1; j < size(); ++j)
    if (precedes(i, j)) return false;
  return true;
}

const std::vector<int>& Heap::occurrences(int s) const {
  if (s < 1 || s > g_.rank) throw DomainError("generator out of range");
  return occ_[static_cast<std::size_t>(s)];
}

bool Heap::is_convex(const std::vector<int>& elems) const {
  boost::dynamic_bitset<> in(w_.size());
  for (int e : elems) in.set(static_cast<std::size_t>(e));
  for (int k = 0; k < size(); ++k) {
    if (in.test(static_cast<std::size_t>(k))) continue;
    if (!below_[static_cast<std::size_t>(k)].intersects(in)) continue;
    for (int j : elems)
      if (precedes(k, j)) return false;
  }
  return true;
}

boost::dynamic_bitset<> Heap::interval_closure(const std::vector<int>& elems) const {
  boost::dynamic_bitset<> in(w_.size()), out(w_.size());
  for (int e : elems) in.set(static_cast<std::size_t>(e));
  for (int k = 0; k < size(); ++k) {
    if (!below_[static_cast<std::size_t>(k)].intersects(in)) continue;
    for (int j : elems)
      if (precedes(k, j)) {
        out.set(static_cast<std::size_t>(k));
        break;
      }
  }
  return out;
}

std::vector<int> Heap::lex_least_order() const {
  const int n = size();
  std::vector<int> pending(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> covers_up(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!g_.commute(letter(i), letter(j))) {
        covers_up[static_cast<std::size_t>(i)].push_back(j);
        ++pending[static_cast<std::size_t>(j)];
      }
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (!done[static_cast<std::size_t>(i)] && pending[static_cast<std::size_t>(i)] == 0 &&
          (best < 0 || letter(i) < letter(best)))
        best = i;
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int j : covers_up[static_cast<std::size_t>(best)]) --pending[static_cast<std::size_t>(j)];
  }
  return order;
}

Word Heap::normal_form() const {
  Word out;
  for (int i : lex_least_order()) out.push_back(letter(i));
  return out;
}

Word normal_form(const CoxeterGraph& g, const Word& w) { return Heap(g, w).normal_form(); }

bool commutation_equivalent(const CoxeterGraph& g, const Word& a, const Word& b) {
  return a.size() == b.size() && normal_form(g, a) == normal_form(g, b);
}

std::vector<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  check_word(g, w);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1] || !g.commute(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw ResourceLimitError("commutation class of " + word_to_string(w) + " exceeds " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_fc_reduced(const CoxeterGraph& g, const Word& w) {
  const Heap h(g, w);
  for (int s = 1; s <= g.rank; ++s) {
    const auto& occ = h.occurrences(s);
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
      if (h.is_convex({occ[k], occ[k + 1]})) return false;
  }
  for (int s = 1; s < g.rank; ++s) {
    const int t = s + 1;
    const int m = g.m(s, t);
    std::vector<int> chain;
    for (int i = 0; i < h.size(); ++i)
      if (h.letter(i) == s || h.letter(i) == t) chain.push_back(i);
    for (std::size_t a = 0; a + static_cast<std::size_t>(m) <= chain.size(); ++a) {
      std::vector<int> window(chain.begin() + static_cast<std::ptrdiff_t>(a),
                              chain.begin() + static_cast<std::ptrdiff_t>(a) + m);
      bool alternating = true;
      for (std::size_t k = 0; k + 1 < window.size(); ++k)
        if (h.letter(window[k]) == h.letter(window[k + 1])) alternating = false;
      if (alternating && h.is_convex(window)) return false;
    }
  }
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

FcElement FcElement::from_word(const CoxeterGraph& g, const Word& w) {
  const Heap h(g, w);
  FcElement e;
  e.word = h.normal_form();
  e.length = static_cast<int>(w.size());
  std::set<int> content(w.begin(), w.end()), left, right;
  for (int i = 0; i < h.size(); ++i) {
    if (h.is_minimal(i)) left.insert(h.letter(i));
    if (h.is_maximal(i)) right.insert(h.letter(i));
  }
  e.content.assign(content.begin(), content.end());
  e.left_descents.assign(left.begin(), left.end());
  e.right_descents.assign(right.begin(), right.end());
  return e;
}

std::vector<FcElement> enumerate_fc(const CoxeterGraph& g, std::size_t stratum_cap) {
  std::vector<FcElement> out;
  std::set<Word> stratum{Word{}};
  while (!stratum.empty()) {
    std::set<Word> next;
    for (const Word& w : stratum) {
      out.push_back(FcElement::from_word(g, w));
      for (int s = 1; s <= g.rank; ++s) {
        Word ws = w;
        ws.push_back(s);
        if (!is_fc_reduced(g, ws)) continue;
        next.insert(normal_form(g, ws));
        if (next.size() > stratum_cap)
          throw ResourceLimitError("length stratum " + std::to_string(w.size() + 1) + " of " + g.name() +
                                   " exceeds " + std::to_string(stratum_cap) + " elements");
      }
    }
    stratum = std::move(next);
  }
  return out;
}

bool bruhat_leq(const CoxeterGraph& g, const Word& x, const Word& y_reduced) {
  if (x.size() > y_reduced.size()) return false;
  const Heap h(g, x);
  if (h.size() > 64) throw ResourceLimitError("bruhat_leq: words longer than 64 letters are not supported");
  const int n = h.size();
  std::vector<std::uint64_t> preds(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (h.precedes(i, j)) preds[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  std::vector<std::uint64_t> occ_mask(static_cast<std::size_t>(g.rank) + 1, 0);
  for (int i = 0; i < n; ++i) occ_mask[static_cast<std::size_t>(h.letter(i))] |= std::uint64_t{1} << i;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::unordered_set<std::uint64_t> states{0};
  for (int s : y_reduced) {
    if (s < 1 || s > g.rank) throw DomainError("letter out of range");
    const auto& occ = h.occurrences(s);
    std::vector<std::uint64_t> added;
    for (std::uint64_t ideal : states) {
      const auto taken = static_cast<std::size_t>(std::popcount(ideal & occ_mask[static_cast<std::size_t>(s)]));
      if (taken >= occ.size()) continue;
      const int e = occ[taken];
      if ((preds[static_cast<std::size_t>(e)] & ~ideal) == 0) added.push_back(ideal | (std::uint64_t{1} << e));
    }
    for (auto a : added) states.insert(a);
    if (states.count(full)) return true;
  }
  return states.count(full) > 0;
}

}  // namespace tlcb
