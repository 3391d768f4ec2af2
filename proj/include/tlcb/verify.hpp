#pragma once

// Named verification suites.  Each runs exhaustively (or over a seeded random
// sample, for confluence) at one Coxeter graph and reports pass/fail, the
// number of checks, and replayable counterexamples.
//
//   diagram-basis-h / -b   canonical basis transports onto the admissible /
//                          B-canonical diagrams; procedure closure agrees
//   f-basis-h / -b         f_w = c_w for every w in W_c
//   positivity-h / -b      canonical structure constants in N[v, v^-1]; f_w b_i
//                          support and eigenvalue conditions
//   t-tilde-identities     t-tilde expansions of the blocks b1b2b1 - b1 and
//                          b1b2b1b2 - 2 b1b2 and their 1 <-> 2 swaps (type H)
//   deletion               loop count and lattice degree under deleting a letter
//   confluence             word expansion independent of rewriting order

#include "tlcb/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tlcb {

struct SuiteOptions {
  std::size_t class_cap = 1000000;    // largest length stratum enumerated
  std::size_t closure_cap = 100000;   // largest procedure closure
  std::uint32_t seed = 1;
  std::size_t random_words = 10000;
  int max_word_length = 12;
};

struct SuiteResult {
  std::string suite;
  std::string graph;
  bool passed = true;
  std::size_t checks = 0;
  Json details = Json::object();
  Json counterexamples = Json::array();
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite or a graph the suite does not
/// apply to.
SuiteResult run_suite(const std::string& suite, const CoxeterGraph& g, const SuiteOptions& opt = {});

Json to_json(const SuiteResult& r);

}  // namespace tlcb
