#include "tlcb/gram.hpp"

#include "tlcb/errors.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <map>
#include <set>

namespace tlcb {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = LaurentPoly::divide_exact(a, b);
  if (!q) throw InternalConsistencyError("fraction-free elimination: inexact division");
  return *q;
}

struct Elimination {
  PolyMatrix m;
  std::vector<std::size_t> pivot_cols;
  LaurentPoly last = 1;
  int sign = 1;
};

/// Fraction-free Gauss-Jordan: every pivot ends equal to `last`, and each
/// entry stays a minor of the input, so all divisions are exact.
Elimination eliminate(PolyMatrix m, bool reduce_above) {
  Elimination e;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  LaurentPoly prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      e.sign = -e.sign;
    }
    const LaurentPoly piv = m[r][c];
    for (std::size_t i = reduce_above ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const LaurentPoly f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        if (f.is_zero() && m[i][j].is_zero()) continue;
        m[i][j] = exact_div(piv * m[i][j] - f * m[r][j], prev);
      }
      m[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.last = prev;
  e.m = std::move(m);
  return e;
}

std::vector<LaurentPoly> primitive(std::vector<LaurentPoly> x) {
  Integer g = 0;
  for (const auto& p : x)
    for (const auto& t : p.terms()) g = boost::integer::gcd(g, t.coeff);
  if (g == 0) return x;
  for (const auto& p : x)
    if (!p.is_zero()) {
      if (p.terms().back().coeff < 0) g = -g;
      break;
    }
  for (auto& p : x) {
    LaurentPoly q;
    for (const auto& t : p.terms()) q += LaurentPoly::monomial(t.coeff / g, t.exp);
    p = q;
  }
  return x;
}

std::string pair_text(const TLAlgebra& A, std::size_t w, std::size_t x) {
  return "(" + word_to_string(A.elements()[w].word) + " ; " + word_to_string(A.elements()[x].word) + ")";
}

/// t-tilde_s t-tilde_w in t-tilde coordinates, for every generator s and w.
std::vector<std::vector<AlgebraElement>> left_ttilde_action(TLAlgebra& A) {
  std::vector<std::vector<AlgebraElement>> out;
  for (int s = 1; s <= A.graph().rank; ++s) {
    const AlgebraElement ts = A.ttilde_element(A.index_of({s}));
    std::vector<AlgebraElement> row;
    for (std::size_t w = 0; w < A.size(); ++w)
      row.push_back(A.to_basis(A.multiply(ts, A.ttilde_element(w)), Basis::ttilde));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

GramCandidate GramCandidate::identity(const TLAlgebra& A) {
  GramCandidate g{A.graph(), PolyMatrix(A.size(), std::vector<LaurentPoly>(A.size()))};
  for (std::size_t i = 0; i < A.size(); ++i) g.matrix[i][i] = 1;
  return g;
}

LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  Elimination e = eliminate(std::move(m), false);
  if (e.pivot_cols.size() < n) return 0;
  return e.sign < 0 ? -e.last : e.last;
}

std::vector<std::vector<LaurentPoly>> nullspace(PolyMatrix m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const PolyMatrix original = m;
  Elimination e = eliminate(std::move(m), true);
  std::set<std::size_t> pivots(e.pivot_cols.begin(), e.pivot_cols.end());
  std::vector<std::vector<LaurentPoly>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivots.count(f)) continue;
    std::vector<LaurentPoly> x(cols);
    x[f] = e.last;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = -e.m[i][f];
    x = primitive(std::move(x));
    for (const auto& row : original) {
      LaurentPoly s;
      for (std::size_t j = 0; j < cols; ++j)
        if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
      if (!s.is_zero()) throw InternalConsistencyError("nullspace vector fails its system");
    }
    out.push_back(std::move(x));
  }
  return out;
}

GramReport gram_check(TLAlgebra& A, const GramCandidate& G) {
  const std::size_t n = A.size();
  if (!(G.graph == A.graph())) throw DomainError("Gram candidate is for " + G.graph.name() + ", algebra is " + A.graph().name());
  if (G.matrix.size() != n) throw DomainError("Gram candidate has " + std::to_string(G.matrix.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : G.matrix)
    if (row.size() != n) throw DomainError("Gram candidate row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
  const PolyMatrix& g = G.matrix;
  GramReport rep;
  auto note = [&](std::string s) {
    if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(std::move(s));
  };

  rep.symmetric = true;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = w + 1; x < n; ++x)
      if (!(g[w][x] == g[x][w])) {
        rep.symmetric = false;
        note("asymmetric at " + pair_text(A, w, x));
      }

  rep.unitriangular_mod_vinv = true;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x) {
      const LaurentPoly r = g[w][x] - LaurentPoly(w == x ? 1 : 0);
      if (!r.is_zero() && *r.max_degree() >= 0) {
        rep.unitriangular_mod_vinv = false;
        note("entry " + pair_text(A, w, x) + " = " + g[w][x].to_string() + " is not delta mod v^-1");
      }
    }

  rep.determinant = determinant(g);
  rep.nondegenerate = !rep.determinant.is_zero();

  const auto act = left_ttilde_action(A);
  rep.anti_associative = true;
  for (std::size_t s = 0; s < act.size(); ++s)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < n; ++x) {
        LaurentPoly lhs, rhs;
        for (const auto& [y, c] : act[s][w].coords) lhs += c * g[y][x];
        for (const auto& [y, c] : act[s][x].coords) rhs += c * g[w][y];
        if (!(lhs == rhs)) {
          rep.anti_associative = false;
          note("s = " + std::to_string(s + 1) + ", " + pair_text(A, w, x) + ": " + lhs.to_string() + " != " + rhs.to_string());
        }
      }
  return rep;
}

AntiAssociativeSolve solve_anti_associative(TLAlgebra& A) {
  const std::size_t n = A.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = y; x < n; ++x) unknown.emplace(std::pair{y, x}, unknown.size());
  auto var = [&](std::size_t a, std::size_t b) { return unknown.at(a <= b ? std::pair{a, b} : std::pair{b, a}); };

  const auto act = left_ttilde_action(A);
  std::set<std::string> seen;
  PolyMatrix system;
  for (const auto& row_s : act)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = w; x < n; ++x) {
        std::map<std::size_t, LaurentPoly> row;
        for (const auto& [y, c] : row_s[w].coords) row[var(y, x)] += c;
        for (const auto& [y, c] : row_s[x].coords) row[var(w, y)] -= c;
        std::string key;
        std::vector<LaurentPoly> dense(unknown.size());
        for (const auto& [k, c] : row)
          if (!c.is_zero()) {
            dense[k] = c;
            key += std::to_string(k) + ":" + c.to_string() + ";";
          }
        if (key.empty() || !seen.insert(key).second) continue;
        system.push_back(std::move(dense));
      }

  AntiAssociativeSolve out;
  out.unknowns = unknown.size();
  out.equations = system.size();
  if (system.empty()) system.emplace_back(unknown.size());
  const auto basis = nullspace(system);
  out.rank = out.unknowns - basis.size();
  for (const auto& x : basis) {
    GramCandidate G{A.graph(), PolyMatrix(n, std::vector<LaurentPoly>(n))};
    for (const auto& [yx, k] : unknown) {
      G.matrix[yx.first][yx.second] = x[k];
      G.matrix[yx.second][yx.first] = x[k];
    }
    out.reports.push_back(gram_check(A, G));
    out.solutions.push_back(std::move(G));
  }
  return out;
}

}  // namespace tlcb
