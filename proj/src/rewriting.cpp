#include "tlcb/errors.hpp"
#include "tlcb/tl_algebra.hpp"

#include <algorithm>

namespace tlcb {

Rewriter::Rewriter(CoxeterGraph g, Strategy s, std::uint32_t seed) : g_(g), strategy_(s), rng_(seed) {}

namespace {

struct Factor {
  std::vector<int> elems;  // heap elements, increasing
  int m = 1;               // 1 for a repeated letter s s, else the bond strength
};

std::vector<Factor> reducible_factors(const Heap& h) {
  const auto& g = h.graph();
  std::vector<Factor> out;
  for (int s = 1; s <= g.rank; ++s) {
    const auto& occ = h.occurrences(s);
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
      if (h.is_convex({occ[k], occ[k + 1]})) out.push_back({{occ[k], occ[k + 1]}, 1});
  }
  for (int s = 1; s < g.rank; ++s) {
    const int m = g.m(s, s + 1);
    std::vector<int> chain;
    for (int i = 0; i < h.size(); ++i)
      if (h.letter(i) == s || h.letter(i) == s + 1) chain.push_back(i);
    for (std::size_t a = 0; a + static_cast<std::size_t>(m) <= chain.size(); ++a) {
      std::vector<int> window(chain.begin() + static_cast<std::ptrdiff_t>(a),
                              chain.begin() + static_cast<std::ptrdiff_t>(a) + m);
      bool alternating = true;
      for (std::size_t k = 0; k + 1 < window.size(); ++k)
        alternating = alternating && h.letter(window[k]) != h.letter(window[k + 1]);
      if (alternating && h.is_convex(window)) out.push_back({window, m});
    }
  }
  return out;
}

}  // namespace

const Combination& Rewriter::reduce(const Word& w) {
  Word nf = normal_form(g_, w);
  if (auto it = memo_.find(nf); it != memo_.end()) return it->second;
  const Heap h(g_, nf);
  auto factors = reducible_factors(h);
  Combination result;
  if (factors.empty()) {
    result[nf] = 1;
  } else {
    auto key = [](const Factor& f) { return std::pair{f.elems.front(), f.elems.back()}; };
    std::size_t pick = 0;
    switch (strategy_) {
      case Strategy::leftmost:
        for (std::size_t i = 1; i < factors.size(); ++i)
          if (key(factors[i]) < key(factors[pick])) pick = i;
        break;
      case Strategy::rightmost:
        for (std::size_t i = 1; i < factors.size(); ++i) {
          auto a = key(factors[i]), b = key(factors[pick]);
          if (std::pair{a.second, a.first} > std::pair{b.second, b.first}) pick = i;
        }
        break;
      case Strategy::random:
        pick = std::uniform_int_distribution<std::size_t>(0, factors.size() - 1)(rng_);
        break;
    }
    const Factor& f = factors[pick];
    std::vector<char> in_f(nf.size(), 0);
    for (int e : f.elems) in_f[static_cast<std::size_t>(e)] = 1;
    // Elements forced below the factor go first; the factor is then
    // contiguous, followed by everything else in the original order.
    Word down, rest;
    for (int i = 0; i < h.size(); ++i) {
      if (in_f[static_cast<std::size_t>(i)]) continue;
      bool below = false;
      for (int e : f.elems) below = below || h.precedes(i, e);
      (below ? down : rest).push_back(h.letter(i));
    }
    const int s = h.letter(f.elems[0]);
    const int t = f.m == 1 ? s : h.letter(f.elems[1]);
    std::vector<std::pair<LaurentPoly, Word>> repl;
    switch (f.m) {
      case 1: repl = {{delta(), {s}}}; break;
      case 3: repl = {{1, {s}}}; break;
      case 4: repl = {{2, {s, t}}}; break;
      case 5: repl = {{3, {s, t, s}}, {-1, {s}}}; break;
      default: throw InternalConsistencyError("unexpected bond strength in rewriting");
    }
    for (const auto& [c, middle] : repl) {
      Word next = down;
      next.insert(next.end(), middle.begin(), middle.end());
      next.insert(next.end(), rest.begin(), rest.end());
      for (const auto& [x, cx] : reduce(next)) {
        auto& slot = result[x];
        slot += c * cx;
        if (slot.is_zero()) result.erase(x);
      }
    }
  }
  return memo_.emplace(std::move(nf), std::move(result)).first->second;
}

}  // namespace tlcb
