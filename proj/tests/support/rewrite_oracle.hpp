#pragma once

// Independent expansion of generator products: explores commutation moves on
// plain words and applies the first defining relation found as a contiguous
// factor.  Results are keyed by the lexicographically least class member.

#include "tlcb/laurent.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using tlcb::LaurentPoly;
using Word = std::vector<int>;

class Expander {
 public:
  // bond strength between 1 and 2; all other adjacent bonds are 3
  explicit Expander(int m12) : m12_(m12) {}

  int m(int s, int t) const {
    if (s == t) return 1;
    if (std::abs(s - t) > 1) return 2;
    return std::min(s, t) == 1 ? m12_ : 3;
  }

  std::set<Word> klass(const Word& w) const {
    std::set<Word> seen{w};
    std::vector<Word> todo{w};
    while (!todo.empty()) {
      Word cur = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (m(cur[i], cur[i + 1]) != 2) continue;
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
    return seen;
  }

  const std::map<Word, LaurentPoly>& expand(const Word& w) {
    const auto cls = klass(w);
    const Word key = *cls.begin();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::map<Word, LaurentPoly> out;
    bool done = false;
    for (const auto& c : cls) {
      for (std::size_t i = 0; i < c.size() && !done; ++i) {
        if (i + 1 < c.size() && c[i] == c[i + 1]) {
          apply(out, c, i, 2, {{delta(), {c[i]}}});
          done = true;
          break;
        }
        if (i + 1 >= c.size() || m(c[i], c[i + 1]) < 3) continue;
        const int s = c[i], t = c[i + 1], k = m(s, t);
        if (i + static_cast<std::size_t>(k) > c.size()) continue;
        bool alt = true;
        for (int j = 0; j < k; ++j) alt = alt && c[i + static_cast<std::size_t>(j)] == (j % 2 ? t : s);
        if (!alt) continue;
        if (k == 3) apply(out, c, i, 3, {{LaurentPoly(1), {s}}});
        if (k == 4) apply(out, c, i, 4, {{LaurentPoly(2), {s, t}}});
        if (k == 5) apply(out, c, i, 5, {{LaurentPoly(3), {s, t, s}}, {LaurentPoly(-1), {s}}});
        done = true;
        break;
      }
      if (done) break;
    }
    if (!done) out[key] = 1;
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  static LaurentPoly delta() { return LaurentPoly::v(1) + LaurentPoly::v(-1); }

  void apply(std::map<Word, LaurentPoly>& out, const Word& c, std::size_t i, std::size_t len,
             const std::vector<std::pair<LaurentPoly, Word>>& repl) {
    for (const auto& [coef, mid] : repl) {
      Word next(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), c.begin() + static_cast<std::ptrdiff_t>(i + len), c.end());
      const auto sub = expand(next);
      for (const auto& [x, cx] : sub) {
        auto& slot = out[x];
        slot += coef * cx;
        if (slot.is_zero()) out.erase(x);
      }
    }
  }

  int m12_;
  std::map<Word, std::map<Word, LaurentPoly>> memo_;
};

}  // namespace oracle
