// Acceptance run: one PASS/FAIL line per criterion.  --slow adds the rank-4
// f = c checks.

#include "support/group_oracle.hpp"
#include "tlcb/admissible.hpp"
#include "tlcb/verify.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>

using namespace tlcb;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<bool(std::string&)> body;
};

bool suite_passes(const std::string& s, const CoxeterGraph& g, std::string& note, const SuiteOptions& opt = {}) {
  const SuiteResult r = run_suite(s, g, opt);
  if (!r.passed) note += s + " " + g.name() + " failed: " + r.counterexamples.dump() + "; ";
  return r.passed;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) slow = slow || std::strcmp(argv[i], "--slow") == 0;

  std::vector<Criterion> crit;
  crit.push_back({1, "B2: 7 fully commutative elements, canonical basis equals the golden list", 1.0, [](std::string&) {
                    TLAlgebra A(CoxeterGraph(Family::B, 2));
                    if (A.size() != 7) return false;
                    const std::vector<std::pair<Word, Word>> golden = {
                        {{}, {}}, {{1}, {}}, {{2}, {}}, {{1, 2}, {}}, {{2, 1}, {}}, {{1, 2, 1}, {1}}, {{2, 1, 2}, {2}}};
                    for (const auto& [w, sub] : golden) {
                      AlgebraElement expect = A.word(w);
                      if (!sub.empty()) expect -= A.word(sub);
                      if (!(A.canonical_basis()[A.index_of(w)] == expect)) return false;
                    }
                    return true;
                  }});
  crit.push_back({2, std::string("f_w = c_w on W_c at H2, H3, B2, B3") + (slow ? ", H4, B4" : " (H4/B4 with --slow)"),
                  slow ? 0.0 : 30.0, [slow](std::string& note) {
                    bool ok = true;
                    for (int r = 2; r <= (slow ? 4 : 3); ++r) {
                      ok = suite_passes("f-basis-h", CoxeterGraph(Family::H, r), note) && ok;
                      ok = suite_passes("f-basis-b", CoxeterGraph(Family::B, r), note) && ok;
                    }
                    return ok;
                  }});
  crit.push_back({3, "H3: f_(1,2,3,1,2,1,2) = (b1b2 - 1) b3 (b1b2b1b2 - 2 b1b2)", 0.0, [](std::string& note) {
                    TLAlgebra A(CoxeterGraph(Family::H, 3));
                    const AlgebraElement left = A.word({1, 2}) - A.one();
                    const AlgebraElement right = A.word({1, 2, 1, 2}) - LaurentPoly(2) * A.word({1, 2});
                    const AlgebraElement expect = A.multiply(A.multiply(left, A.word({3})), right);
                    const std::size_t w = A.index_of({1, 2, 3, 1, 2, 1, 2});
                    note = A.aux_elements(w).f.to_string();
                    return A.f_element(w) == expect;
                  }});
  crit.push_back({4, "H3: t-tilde expansions of the two- and four-letter blocks and their swaps", 0.0,
                  [](std::string& note) { return suite_passes("t-tilde-identities", CoxeterGraph(Family::H, 3), note); }});
  crit.push_back({5, "calibration: zero residual at ranks 3 and 4; integral C_n coordinates", 0.0, [](std::string& note) {
                    bool ok = true;
                    for (Family f : {Family::H, Family::B}) {
                      const Calibration c = calibrate_ruleset(f, 3, 4);
                      std::set<int> ranks;
                      for (const auto& k : c.checks) {
                        ok = ok && k.holds;
                        ranks.insert(k.rank);
                      }
                      ok = ok && ranks == std::set<int>{3, 4};
                      note += c.rules.to_string() + "; ";
                    }
                    const RuleSet& rules = calibrated_rules(Family::B);
                    for (int rank = 3; rank <= 4; ++rank) {
                      TLAlgebra A(CoxeterGraph(Family::B, rank));
                      DiagramAlgebra D(rules, rank + 1);
                      for (const auto& c : A.canonical_basis())
                        for (const auto& [t, x] : canonical_coordinates(D.transport(A, c), rules)) ok = ok && x.is_integral();
                    }
                    return ok;
                  }});
  crit.push_back({6, "canonical basis transports onto the admissible / C_n diagrams at ranks 3 and 4", 120.0,
                  [](std::string& note) {
                    bool ok = true;
                    for (int r = 3; r <= 4; ++r) {
                      ok = suite_passes("diagram-basis-h", CoxeterGraph(Family::H, r), note) && ok;
                      ok = suite_passes("diagram-basis-b", CoxeterGraph(Family::B, r), note) && ok;
                    }
                    return ok;
                  }});
  crit.push_back({7, "positivity of canonical structure constants and f_w b_i conditions at H3, B3", 0.0,
                  [](std::string& note) {
                    const bool h = suite_passes("positivity-h", CoxeterGraph(Family::H, 3), note);
                    const bool b = suite_passes("positivity-b", CoxeterGraph(Family::B, 3), note);
                    return h && b;
                  }});
  crit.push_back({8, "H3 deletion: loop count moves by <= 1; degree rises exactly at internal/critical letters", 0.0,
                  [](std::string& note) { return suite_passes("deletion", CoxeterGraph(Family::H, 3), note); }});
  crit.push_back({9, "confluence: 10^4 random words of length <= 12 per family at ranks 3 and 4", 0.0, [](std::string& note) {
                    bool ok = true;
                    SuiteOptions opt;
                    opt.random_words = 10000;
                    opt.max_word_length = 12;
                    for (Family f : {Family::A, Family::B, Family::H})
                      for (int r = 3; r <= 4; ++r) {
                        opt.seed = static_cast<std::uint32_t>(100 * r + static_cast<int>(f));
                        ok = suite_passes("confluence", CoxeterGraph(f, r), note, opt) && ok;
                      }
                    return ok;
                  }});
  crit.push_back({10, "dimensions: Catalan counts, |W_c(H2)| = 9 by group brute force, closures = enumerations", 0.0,
                  [](std::string& note) {
                    bool ok = true;
                    for (int n = 1; n <= 6; ++n)
                      ok = ok && static_cast<long long>(enumerate_fc(CoxeterGraph(Family::A, n)).size()) == catalan(n + 1);
                    oracle::Group h2(CoxeterGraph(Family::H, 2));
                    int fc = 0;
                    for (int e = 0; e < h2.size(); ++e) fc += h2.reduced_word_count(e) == 1;
                    ok = ok && fc == 9 && enumerate_fc(CoxeterGraph(Family::H, 2)).size() == 9;
                    for (Family f : {Family::H, Family::B})
                      for (int n = 2; n <= 5; ++n) {
                        DiagramAlgebra D(calibrated_rules(f), n);
                        const auto all = f == Family::H ? h_admissible_diagrams(n) : b_canonical_diagrams(n);
                        const bool same = generate_by_procedures(D).diagrams == all;
                        if (!same) note += "closure mismatch " + family_name(f) + std::to_string(n - 1) + "; ";
                        ok = ok && same;
                      }
                    return ok;
                  }});

  int failed = 0;
  for (const auto& c : crit) {
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    ok = ok && in_time;
    failed += !ok;
    std::printf("criterion %2d %s  %s (%.2fs%s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                c.limit_seconds > 0 ? (" < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str() : "");
    if (!ok && !note.empty()) std::printf("             %s\n", note.c_str());
    if (!in_time) std::printf("             time limit exceeded\n");
  }
  return failed ? 1 : 0;
}
