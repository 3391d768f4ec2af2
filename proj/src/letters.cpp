#include "tlcb/letters.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tlcb {

std::string to_string(LetterKind k) {
  switch (k) {
    case LetterKind::internal: return "internal";
    case LetterKind::lateral: return "lateral";
    case LetterKind::bilateral: return "bilateral";
    case LetterKind::external: return "external";
  }
  return "?";
}

std::string to_string(CriticalType c) {
  switch (c) {
    case CriticalType::none: return "none";
    case CriticalType::i: return "i";
    case CriticalType::ii: return "ii";
    case CriticalType::iii: return "iii";
    case CriticalType::iv: return "iv";
  }
  return "?";
}

std::vector<std::vector<int>> match_convex_pattern(const Heap& h, const Word& pattern,
                                                   std::optional<std::pair<int, int>> fixed) {
  const auto& g = h.graph();
  for (int x : pattern)
    if (x < 1 || x > g.rank) return {};
  std::vector<int> letters;  // distinct, in order of first appearance
  std::map<int, int> count;
  std::vector<int> index_in_letter(pattern.size());
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (!count.count(pattern[k])) letters.push_back(pattern[k]);
    index_in_letter[k] = count[pattern[k]]++;
  }
  std::map<int, int> forced_start;
  if (fixed) {
    const auto [ppos, elem] = *fixed;
    if (h.letter(elem) != pattern[static_cast<std::size_t>(ppos)]) return {};
    const int start = h.occurrence_rank(elem) - index_in_letter[static_cast<std::size_t>(ppos)];
    if (start < 0) return {};
    forced_start[pattern[static_cast<std::size_t>(ppos)]] = start;
  }
  const Word pattern_nf = normal_form(g, pattern);

  std::vector<std::vector<int>> out;
  std::map<int, int> start;
  std::function<void(std::size_t)> rec = [&](std::size_t li) {
    if (li == letters.size()) {
      std::vector<int> mapping(pattern.size());
      for (std::size_t k = 0; k < pattern.size(); ++k)
        mapping[k] = h.occurrences(pattern[k])[static_cast<std::size_t>(start[pattern[k]] + index_in_letter[k])];
      std::vector<int> elems = mapping;
      std::sort(elems.begin(), elems.end());
      Word sub;
      for (int e : elems) sub.push_back(h.letter(e));
      if (normal_form(g, sub) != pattern_nf) return;
      if (!h.is_convex(elems)) return;
      out.push_back(std::move(mapping));
      return;
    }
    const int l = letters[li];
    const int c = count[l];
    const int avail = static_cast<int>(h.occurrences(l).size());
    int lo = 0, hi = avail - c;
    if (auto it = forced_start.find(l); it != forced_start.end()) {
      if (it->second > hi) return;
      lo = hi = it->second;
    }
    for (int s = lo; s <= hi; ++s) {
      start[l] = s;
      rec(li + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

Word odd_run(int hi) {  // 1, 3, ..., hi
  Word w;
  for (int x = 1; x <= hi; x += 2) w.push_back(x);
  return w;
}

Word even_run(int hi) {  // 2, 4, ..., hi
  Word w;
  for (int x = 2; x <= hi; x += 2) w.push_back(x);
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

// w = w1 X w2 Y w3 up to commutation with every letter of w2 commuting with
// `pivot`.  The minimal possible w2 is the set of elements strictly between
// X and Y; any other element can be placed in w1 or w3.
bool split_parse(const Heap& h, const Word& xpat, const Word& ypat, std::optional<std::pair<int, int>> xfix,
                 std::optional<std::pair<int, int>> yfix, int pivot) {
  const auto xs = match_convex_pattern(h, xpat, xfix);
  if (xs.empty()) return false;
  const auto ys = match_convex_pattern(h, ypat, yfix);
  for (const auto& X : xs) {
    for (const auto& Y : ys) {
      std::set<int> xset(X.begin(), X.end()), yset(Y.begin(), Y.end());
      bool ok = true;
      for (int y : Y)
        if (xset.count(y)) ok = false;
      for (int x : X)
        for (int y : Y)
          if (h.precedes(y, x)) ok = false;
      if (!ok) continue;
      for (int z = 0; z < h.size() && ok; ++z) {
        if (xset.count(z) || yset.count(z)) continue;
        bool above_x = false, below_y = false;
        for (int x : X) above_x = above_x || h.precedes(x, z);
        for (int y : Y) below_y = below_y || h.precedes(z, y);
        if (above_x && below_y && !h.graph().commute(h.letter(z), pivot)) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

CriticalType critical_parse(const Heap& h, int pos) {
  const int p = h.letter(pos);
  const int rank = h.graph().rank;
  if (p % 2 != 0) return CriticalType::none;
  const int k = p / 2;
  if (k >= 2 && p <= rank) {
    const Word pat = concat({odd_run(p - 1), even_run(p), odd_run(p - 1)});
    const int idx = k + k - 1;
    if (!match_convex_pattern(h, pat, std::pair{idx, pos}).empty()) return CriticalType::i;
  }
  if (p + 1 <= rank) {
    const Word x2 = concat({odd_run(p + 1), even_run(p), odd_run(p - 1)});
    const Word y2{p, p + 1};
    if (split_parse(h, x2, y2, std::nullopt, std::pair{0, pos}, p + 1)) return CriticalType::ii;
    const Word x3{p + 1, p};
    const Word y3 = concat({odd_run(p - 1), even_run(p), odd_run(p + 1)});
    if (split_parse(h, x3, y3, std::pair{1, pos}, std::nullopt, p + 1)) return CriticalType::iii;
  }
  return CriticalType::none;
}

LetterClassification classify_letters(const CoxeterGraph& g, const Word& w) {
  const Heap h(g, w);
  LetterClassification out;
  out.word = w;
  out.letters.resize(w.size());
  auto neighbours = [&](int p) {
    std::vector<int> qs;
    for (int q : {p - 1, p + 1})
      if (q >= 1 && q <= g.rank) qs.push_back(q);
    return qs;
  };
  for (int e = 0; e < h.size(); ++e) {
    const int p = h.letter(e);
    for (int q : neighbours(p))
      if (!match_convex_pattern(h, {q, p, q}, std::pair{1, e}).empty()) {
        out.letters[static_cast<std::size_t>(e)].kind = LetterKind::internal;
        break;
      }
  }
  for (int e = 0; e < h.size(); ++e) {
    auto& info = out.letters[static_cast<std::size_t>(e)];
    if (info.is_internal()) continue;
    const int p = h.letter(e);
    std::set<int> mids;
    for (int q : neighbours(p))
      for (int side : {0, 2})
        for (const auto& m : match_convex_pattern(h, {p, q, p}, std::pair{side, e}))
          if (out.letters[static_cast<std::size_t>(m[1])].is_internal()) mids.insert(m[1]);
    info.lateral_to.assign(mids.begin(), mids.end());
    if (mids.size() >= 2)
      info.kind = LetterKind::bilateral;
    else if (mids.size() == 1)
      info.kind = LetterKind::lateral;
  }
  for (int e = 0; e < h.size(); ++e) {
    auto& info = out.letters[static_cast<std::size_t>(e)];
    if (h.letter(e) == 2 && g.rank >= 3) {
      info.bad = !match_convex_pattern(h, {3, 1, 2, 1, 2, 3}, std::pair{4, e}).empty() ||
                 !match_convex_pattern(h, {3, 2, 1, 2, 1, 3}, std::pair{1, e}).empty();
    }
    info.critical = info.is_internal() ? CriticalType::iv : critical_parse(h, e);
  }
  return out;
}

const std::vector<std::vector<std::pair<int, bool>>>& justified_shapes() {
  static const std::vector<std::vector<std::pair<int, bool>>> shapes{
      {{1, false}, {2, true}},
      {{1, false}, {2, true}, {1, false}},
      {{2, false}, {1, true}, {2, false}},
      {{1, false}, {2, true}, {1, true}, {2, false}},
      {{2, false}, {1, true}, {2, true}},
      {{2, false}, {1, true}, {2, true}, {1, false}},
  };
  return shapes;
}

RightJustified right_justify(const CoxeterGraph& g, const Word& w) {
  if (!is_fc_reduced(g, w)) throw DomainError("right_justify: " + word_to_string(w) + " is not FC-reduced");
  const Heap h(g, w);
  const LetterClassification cls = classify_letters(g, w);
  const int n = h.size();
  auto info = [&](int e) -> const LetterInfo& { return cls.letters[static_cast<std::size_t>(e)]; };

  std::vector<char> in_R(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < n; ++e) {
    if (!info(e).is_internal()) continue;
    const int s = h.letter(e);
    for (int t : {s - 1, s + 1}) {
      if (t < 1 || t > g.rank) continue;
      for (const auto& m : match_convex_pattern(h, {t, s, t}, std::pair{1, e}))
        if (info(m[2]).is_bilateral()) in_R[static_cast<std::size_t>(e)] = 1;
    }
  }

  const auto& shapes = justified_shapes();
  auto run_is_prefix = [&](const std::vector<int>& run, bool complete) {
    for (const auto& shape : shapes) {
      if (run.size() > shape.size() || (complete && run.size() != shape.size())) continue;
      bool ok = true;
      for (std::size_t k = 0; k < run.size() && ok; ++k) {
        const int e = run[k];
        ok = h.letter(e) == shape[k].first &&
             (shape[k].second ? info(e).is_internal() : info(e).is_lateral());
      }
      if (ok) return true;
    }
    return false;
  };

  std::vector<int> preds_left(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (h.precedes(i, j)) ++preds_left[static_cast<std::size_t>(j)];
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<int> order, run;

  std::function<bool()> dfs = [&]() -> bool {
    if (static_cast<int>(order.size()) == n) {
      if (!order.empty()) {
        const int y = order.back();
        if (info(y).is_internal() && !in_R[static_cast<std::size_t>(y)]) return false;
      }
      return run.empty() || run_is_prefix(run, true);
    }
    std::vector<int> avail;
    for (int e = 0; e < n; ++e)
      if (!placed[static_cast<std::size_t>(e)] && preds_left[static_cast<std::size_t>(e)] == 0) avail.push_back(e);
    std::sort(avail.begin(), avail.end(), [&](int a, int b) { return h.letter(a) < h.letter(b); });
    const int y = order.empty() ? -1 : order.back();
    for (int z : avail) {
      const bool z_il = info(z).internal_or_lateral();
      if (y >= 0 && info(y).is_internal() && !in_R[static_cast<std::size_t>(y)] && !z_il) continue;
      if (info(z).is_internal() && (y < 0 || !info(y).internal_or_lateral())) continue;
      std::vector<int> saved_run = run;
      if (z_il) {
        run.push_back(z);
        if (!run_is_prefix(run, false)) {
          run = std::move(saved_run);
          continue;
        }
      } else {
        if (!run.empty() && !run_is_prefix(run, true)) continue;
        run.clear();
      }
      placed[static_cast<std::size_t>(z)] = 1;
      for (int j = 0; j < n; ++j)
        if (h.precedes(z, j)) --preds_left[static_cast<std::size_t>(j)];
      order.push_back(z);
      if (dfs()) return true;
      order.pop_back();
      for (int j = 0; j < n; ++j)
        if (h.precedes(z, j)) ++preds_left[static_cast<std::size_t>(j)];
      placed[static_cast<std::size_t>(z)] = 0;
      run = std::move(saved_run);
    }
    return false;
  };
  if (!dfs())
    throw InternalConsistencyError("no right justified expression found for " + word_to_string(w));

  RightJustified out;
  out.source = order;
  std::vector<int> new_pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out.word.push_back(h.letter(order[static_cast<std::size_t>(k)]));
    new_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  }
  out.classes.word = out.word;
  for (int k = 0; k < n; ++k) {
    LetterInfo li = info(order[static_cast<std::size_t>(k)]);
    for (auto& p : li.lateral_to) p = new_pos[static_cast<std::size_t>(p)];
    std::sort(li.lateral_to.begin(), li.lateral_to.end());
    out.classes.letters.push_back(std::move(li));
    if (in_R[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]) out.R.push_back(k);
  }
  for (int k = 0; k < n;) {
    if (!out.classes.letters[static_cast<std::size_t>(k)].internal_or_lateral()) {
      ++k;
      continue;
    }
    int end = k;
    while (end < n && out.classes.letters[static_cast<std::size_t>(end)].internal_or_lateral()) ++end;
    JustifiedBlock b;
    b.start = k;
    b.length = end - k;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      const auto& shape = shapes[s];
      if (static_cast<int>(shape.size()) != b.length) continue;
      bool ok = true;
      for (int j = 0; j < b.length; ++j) {
        const auto idx = static_cast<std::size_t>(k + j);
        ok = ok && out.word[idx] == shape[static_cast<std::size_t>(j)].first &&
             out.classes.letters[idx].is_internal() == shape[static_cast<std::size_t>(j)].second;
      }
      if (ok) b.shape = static_cast<int>(s) + 1;
    }
    b.distinguished = out.word[static_cast<std::size_t>(k)] == 1 && out.classes.letters[static_cast<std::size_t>(k)].is_bilateral();
    out.blocks.push_back(b);
    k = end;
  }
  return out;
}

}  // namespace tlcb
