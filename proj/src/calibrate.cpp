#include "tlcb/calibrate.hpp"

#include "tlcb/admissible.hpp"
#include "tlcb/errors.hpp"
#include "tlcb/tl_algebra.hpp"

#include <map>
#include <mutex>

namespace tlcb {

namespace {

constexpr int kSearch = 4;  // integer scalars are searched in [-kSearch, kSearch]

std::string word_text(const Word& w) {
  std::string s;
  for (int x : w) s += (s.empty() ? "b" : " b") + std::to_string(x);
  return s;
}

bool nonneg(const RationalLaurent& r) {
  for (const auto& t : r.numerator().terms())
    if (t.coeff < 0) return false;
  return true;
}

}  // namespace

std::vector<RelationCheck> check_relations(const RuleSet& rules, int rank) {
  DiagramAlgebra D(rules, rank + 1);
  std::vector<RelationCheck> out;
  const RationalLaurent dl(delta());
  auto record = [&](std::string name, const DiagramElement& lhs, const DiagramElement& rhs) {
    const DiagramElement diff = lhs - rhs;
    out.push_back({std::move(name), rank, diff.is_zero(), diff.is_zero() ? "" : diff.to_string()});
  };
  for (int i = 1; i <= rank; ++i)
    record(word_text({i, i}) + " = delta b" + std::to_string(i), D.evaluate_word({i, i}), dl * D.evaluate_word({i}));
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 2; j <= rank; ++j)
      record(word_text({i, j}) + " = " + word_text({j, i}), D.evaluate_word({i, j}), D.evaluate_word({j, i}));
  for (int i = 2; i <= rank; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 2 || j > rank) continue;
      record(word_text({i, j, i}) + " = b" + std::to_string(i), D.evaluate_word({i, j, i}), D.evaluate_word({i}));
    }
  if (rank >= 2) {
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
      if (rules.family == Family::H) {
        record(word_text({i, j, i, j, i}) + " = 3 " + word_text({i, j, i}) + " - b" + std::to_string(i),
               D.evaluate_word({i, j, i, j, i}),
               RationalLaurent(3) * D.evaluate_word({i, j, i}) - D.evaluate_word({i}));
      } else {
        record(word_text({i, j, i, j}) + " = 2 " + word_text({i, j}), D.evaluate_word({i, j, i, j}),
               RationalLaurent(2) * D.evaluate_word({i, j}));
      }
    }
  }
  return out;
}

Calibration calibrate_ruleset(Family family, int solve_rank, int verify_rank) {
  if (family == Family::A) throw DomainError("no diagram calculus to calibrate for family A");
  if (solve_rank < 2) throw DomainError("calibration needs rank at least 2");
  Calibration cal;
  const RationalLaurent dl(delta());
  // b_1^2 = delta b_1 with b_1 -> s U_1 forces the doubly circled loop to be delta / s.
  const RationalLaurent loop2 = family == Family::B ? dl.halved() : dl;

  std::vector<RuleSet> solutions;
  for (int alpha = -kSearch; alpha <= kSearch; ++alpha)
    for (int beta = -kSearch; beta <= kSearch; ++beta) {
      RuleSet r;
      r.family = family;
      r.plain_loop = dl;
      r.alpha = alpha;
      r.beta = beta;
      const RationalLaurent rest = loop2 - RationalLaurent(beta) * dl;
      if (alpha == 0) {
        if (!rest.is_zero()) continue;
      } else {
        try {
          r.circle_loop = rest.divided_by(alpha);
        } catch (const DomainError&) {
          continue;
        }
      }
      bool ok = true;
      for (const auto& c : check_relations(r, solve_rank)) ok = ok && c.holds;
      if (!ok) continue;
      if (alpha == 0) throw CalibrationError("circled loop value undetermined for alpha = 0, beta = " + std::to_string(beta));
      solutions.push_back(r);
    }
  cal.solutions = solutions;
  for (const auto& s : solutions) cal.notes.push_back("exact solution at rank " + std::to_string(solve_rank) + ": " + s.to_string());

  std::vector<RuleSet> positive;
  for (const auto& s : solutions)
    if (nonneg(s.alpha) && nonneg(s.beta) && nonneg(s.circle_loop)) positive.push_back(s);
  if (positive.size() != 1) {
    std::string msg = "expected one solution with nonnegative scalars, found " + std::to_string(positive.size());
    for (const auto& s : solutions) msg += "\n  " + s.to_string();
    throw CalibrationError(msg);
  }
  if (solutions.size() > 1)
    cal.notes.push_back("solutions differ by circle -> -circle; kept the one with nonnegative scalars");
  RuleSet rules = positive.front();

  if (family == Family::B) {
    TLAlgebra A(CoxeterGraph(family, solve_rank));
    DiagramAlgebra D(rules, solve_rank + 1);
    std::vector<DiagramElement> images;
    for (const auto& c : A.canonical_basis()) images.push_back(D.transport(A, c));
    std::vector<RuleSet> fits;
    for (int sigma = -kSearch; sigma <= kSearch; ++sigma)
      for (int tau = -kSearch; tau <= kSearch; ++tau) {
        if (sigma == 0) continue;
        RuleSet r = rules;
        r.has_square = true;
        r.sigma = sigma;
        r.tau = tau;
        bool ok = true;
        for (const auto& img : images) ok = ok && as_basis_element(img, r).has_value();
        if (ok) fits.push_back(r);
      }
    if (fits.size() != 1)
      throw CalibrationError("square decoration: expected one fitting (sigma, tau), found " + std::to_string(fits.size()));
    rules = fits.front();
    cal.notes.push_back("square = " + rules.sigma.to_string() + " circle + (" + rules.tau.to_string() + ") plain");
  }

  cal.checks = check_relations(rules, solve_rank);
  if (verify_rank > solve_rank) {
    auto more = check_relations(rules, verify_rank);
    for (const auto& c : more)
      if (!c.holds) throw CalibrationError("relation " + c.relation + " fails at rank " + std::to_string(verify_rank));
    cal.checks.insert(cal.checks.end(), more.begin(), more.end());
  }
  cal.rules = rules;
  return cal;
}

const RuleSet& calibrated_rules(Family family) {
  static std::mutex m;
  static std::map<Family, RuleSet> cache;
  std::lock_guard lock(m);
  auto it = cache.find(family);
  if (it == cache.end()) it = cache.emplace(family, calibrate_ruleset(family).rules).first;
  return it->second;
}

}  // namespace tlcb
