#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/rewrite_oracle.hpp"
#include "tlcb/errors.hpp"
#include "tlcb/tl_algebra.hpp"

#include <random>
#include <sstream>

using namespace tlcb;

namespace {

LaurentPoly vp(int k) { return LaurentPoly::v(k); }

std::map<Word, LaurentPoly> as_words(const TLAlgebra& A, const AlgebraElement& a) {
  REQUIRE(a.basis == Basis::monomial);
  std::map<Word, LaurentPoly> out;
  for (const auto& [x, c] : a.coords) out[A.elements()[x].word] = c;
  return out;
}

int bond(Family f) { return f == Family::A ? 3 : f == Family::B ? 4 : 5; }

Word random_word(std::mt19937& rng, int rank, int max_len) {
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uniform_int_distribution<int> letter(1, rank);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letter(rng));
  return w;
}

// "t1 t2 t1 + v^-1 t2 t1 - 2 b1 b2": sum of signed products of b_i, t_i and v^k.
AlgebraElement eval_sum(TLAlgebra& A, const std::string& text) {
  AlgebraElement out = A.zero();
  std::istringstream in(text);
  std::string tok;
  int sign = 1;
  Integer scale = 1;
  MixedWord cur;
  auto flush = [&] {
    out += LaurentPoly(sign * scale) * A.evaluate(cur);
    cur.clear();
    scale = 1;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      sign = tok == "+" ? 1 : -1;
    } else if (tok[0] == 'b') {
      cur.push_back(MixedSymbol::B(std::stoi(tok.substr(1))));
    } else if (tok[0] == 't') {
      cur.push_back(MixedSymbol::T(std::stoi(tok.substr(1))));
    } else if (tok[0] == 'v') {
      cur.push_back(MixedSymbol::V(tok.size() == 1 ? 1 : std::stoi(tok.substr(2))));
    } else {
      scale = Integer(tok);
    }
  }
  flush();
  return out;
}

bool nonneg(const LaurentPoly& p) {
  for (const auto& t : p.terms())
    if (t.coeff < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("word expansion examples") {
  TLAlgebra h4(CoxeterGraph(Family::H, 4));
  CHECK(h4.word({2, 3, 2}) == h4.monomial(h4.index_of({2})));
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  CHECK(h3.word({1, 2, 1, 2, 1}) ==
        LaurentPoly(3) * h3.monomial(h3.index_of({1, 2, 1})) - h3.monomial(h3.index_of({1})));
  TLAlgebra b3(CoxeterGraph(Family::B, 3));
  CHECK(b3.word({1, 1}) == delta() * b3.monomial(b3.index_of({1})));
  CHECK(b3.word({1, 2, 1, 2}) == LaurentPoly(2) * b3.monomial(b3.index_of({1, 2})));
  CHECK(b3.word({}) == b3.one());
  CHECK_THROWS_AS(b3.index_of({1, 1}), DomainError);
}

TEST_CASE("word expansion agrees with the independent expander") {
  std::mt19937 rng(7);
  for (Family f : {Family::A, Family::B, Family::H}) {
    for (int rank = 2; rank <= 4; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      oracle::Expander ex(bond(f));
      for (int trial = 0; trial < 150; ++trial) {
        const Word w = random_word(rng, rank, 9);
        CHECK_MESSAGE(as_words(A, A.word(w)) == ex.expand(w), A.graph().name() << " " << word_to_string(w));
      }
    }
  }
}

TEST_CASE("rewriting is confluent across factor selection strategies") {
  std::mt19937 rng(11);
  for (Family f : {Family::A, Family::B, Family::H}) {
    for (int rank = 3; rank <= 4; ++rank) {
      CoxeterGraph g(f, rank);
      Rewriter left(g, Strategy::leftmost), right(g, Strategy::rightmost), rnd(g, Strategy::random, 99);
      for (int trial = 0; trial < 300; ++trial) {
        const Word w = random_word(rng, rank, 12);
        const auto& a = left.reduce(w);
        CHECK(a == right.reduce(w));
        CHECK(a == rnd.reduce(w));
      }
    }
  }
}

TEST_CASE("multiplication") {
  TLAlgebra b2(CoxeterGraph(Family::B, 2));
  const auto b1 = b2.monomial(b2.index_of({1}));
  CHECK(b2.multiply(b2.one(), b1) == b1);
  CHECK(b2.multiply(b1, b2.monomial(b2.index_of({2, 1}))) == b2.monomial(b2.index_of({1, 2, 1})));

  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  const auto x = h3.monomial(h3.index_of({1})), y = h3.monomial(h3.index_of({2}));
  CHECK(h3.multiply(h3.multiply(x, y), x) == h3.multiply(x, h3.multiply(y, x)));

  std::mt19937 rng(3);
  for (Family f : {Family::B, Family::H}) {
    TLAlgebra A(CoxeterGraph(f, 3));
    std::uniform_int_distribution<std::size_t> pick(0, A.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2), ex(-2, 2);
    auto random_elem = [&] {
      AlgebraElement a = A.zero();
      for (int k = 0; k < 3; ++k) a.add(pick(rng), LaurentPoly::monomial(coef(rng), ex(rng)));
      return a;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_elem(), b = random_elem(), c = random_elem();
      CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
    }
  }
  TLAlgebra h2(CoxeterGraph(Family::H, 2));
  CHECK_THROWS_AS(h2.multiply(h2.one(), b1), DomainError);
}

TEST_CASE("t-tilde basis") {
  TLAlgebra b2(CoxeterGraph(Family::B, 2));
  auto m = [&](const Word& w) { return b2.monomial(b2.index_of(w)); };
  CHECK(b2.ttilde_element(0) == b2.one());
  CHECK(b2.ttilde_element(b2.index_of({1})) == m({1}) - vp(-1) * m({}));
  CHECK(b2.ttilde_element(b2.index_of({1, 2})) ==
        m({1, 2}) - vp(-1) * m({1}) - vp(-1) * m({2}) + vp(-2) * m({}));

  for (Family f : {Family::A, Family::B, Family::H}) {
    for (int rank = 2; rank <= 4; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      for (std::size_t w = 0; w < A.size(); ++w) {
        const auto& t = A.ttilde_element(w);
        CHECK(t.coeff(w) == LaurentPoly(1));
        for (const auto& [x, c] : t.coords) {
          if (x == w) continue;
          CHECK(A.elements()[x].length < A.elements()[w].length);
          CHECK(bruhat_leq(A.graph(), A.elements()[x].word, A.elements()[w].word));
          CHECK(classify(c).in_Aminus);
        }
        const auto tt = A.to_basis(A.monomial(w), Basis::ttilde);
        CHECK(tt.coeff(w) == LaurentPoly(1));
        for (const auto& [x, c] : tt.coords)
          if (x != w) CHECK(classify(c).in_Aminus);
        CHECK(A.to_basis(tt, Basis::monomial) == A.monomial(w));
      }
    }
  }
}

TEST_CASE("bar involution") {
  TLAlgebra b2(CoxeterGraph(Family::B, 2));
  for (std::size_t w = 0; w < b2.size(); ++w) CHECK(b2.bar(b2.monomial(w)) == b2.monomial(w));
  CHECK(b2.bar(vp(1) * b2.one()) == vp(-1) * b2.one());
  AlgebraElement t1 = b2.zero(Basis::ttilde);
  t1.add(b2.index_of({1}), 1);
  AlgebraElement expect = t1;
  expect.add(0, vp(-1) - vp(1));
  CHECK(b2.bar(t1) == expect);

  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, h3.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement a = h3.zero(Basis::ttilde);
    for (int k = 0; k < 4; ++k) a.add(pick(rng), LaurentPoly::monomial(k + 1, k - 2));
    CHECK(h3.bar(h3.bar(a)) == a);
  }
  for (std::size_t w = 0; w < h3.size(); ++w) {
    AlgebraElement t = h3.zero(Basis::ttilde);
    t.add(w, 1);
    const auto bt = h3.bar(t);
    CHECK(bt.coeff(w) == LaurentPoly(1));
    for (const auto& [x, c] : bt.coords)
      if (x != w) CHECK(h3.elements()[x].length < h3.elements()[w].length);
  }
}

TEST_CASE("lattice degree") {
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  for (std::size_t w = 0; w < h3.size(); ++w) {
    CHECK(h3.lattice_degree(h3.monomial(w), Lattice::L_H) == 0);
    CHECK(h3.lattice_degree(delta() * h3.monomial(w), Lattice::L_H) == 1);
  }
  CHECK(h3.lattice_degree(h3.word({1, 1}), Lattice::L_H) == 1);
  CHECK_FALSE(h3.lattice_degree(h3.zero(), Lattice::L).has_value());
  CHECK(h3.lattice_degree(h3.ttilde_element(h3.index_of({1, 2})), Lattice::L) == 0);
  CHECK(h3.lattice_degree(h3.monomial(h3.index_of({1})), Lattice::L) == 0);
}

TEST_CASE("canonical basis of B2") {
  TLAlgebra b2(CoxeterGraph(Family::B, 2));
  REQUIRE(b2.size() == 7);
  const auto& c = b2.canonical_basis();
  auto m = [&](const Word& w) { return b2.monomial(b2.index_of(w)); };
  const std::vector<std::pair<Word, AlgebraElement>> expect{
      {{}, b2.one()},
      {{1}, m({1})},
      {{2}, m({2})},
      {{1, 2}, m({1, 2})},
      {{2, 1}, m({2, 1})},
      {{1, 2, 1}, b2.word({1, 2, 1}) - b2.word({1})},
      {{2, 1, 2}, b2.word({2, 1, 2}) - b2.word({2})},
  };
  for (const auto& [w, e] : expect) CHECK(c[b2.index_of(w)] == e);
}

TEST_CASE("canonical basis characterization and order independence") {
  for (Family f : {Family::A, Family::B, Family::H}) {
    for (int rank = 2; rank <= 3; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      const auto& c = A.canonical_basis();
      CHECK(c[0] == A.one());
      if (rank > 1) CHECK(c[A.index_of({1})] == A.monomial(A.index_of({1})));
      for (std::size_t w = 0; w < A.size(); ++w) {
        CHECK(A.bar(c[w]) == c[w]);
        const auto t = A.to_basis(c[w], Basis::ttilde);
        CHECK(t.coeff(w) == LaurentPoly(1));
        for (const auto& [x, p] : t.coords)
          if (x != w) CHECK(classify(p).in_vinv_Aminus);
      }
      CHECK(A.canonical_basis_with_order(IcOrder::minimal_first) == c);
      for (std::uint32_t seed : {1u, 2u, 3u}) CHECK(A.canonical_basis_with_order(IcOrder::random, seed) == c);
    }
  }
}

TEST_CASE("f elements") {
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  const auto w = h3.index_of({1, 2, 3, 1, 2, 1, 2});
  const auto expect = h3.word({1, 2, 3, 1, 2, 1, 2}) - LaurentPoly(2) * h3.word({1, 2, 3, 1, 2}) -
                      h3.word({3, 1, 2, 1, 2}) + LaurentPoly(2) * h3.word({3, 1, 2});
  CHECK(h3.f_element(w) == expect);
  CHECK(h3.aux_elements(w).f.to_string() == "(b1 b2 - 1) b3 (b1 b2 b1 b2 - 2*b1 b2)");
  CHECK(h3.f_element(h3.index_of({2, 1, 2})) == h3.word({2, 1, 2}) - h3.word({2}));
  CHECK(h3.f_element(0) == h3.one());
  CHECK(h3.aux_elements(0).f.to_string() == "1");
}

TEST_CASE("f basis equals canonical basis") {
  for (Family f : {Family::B, Family::H})
    for (int rank = 2; rank <= 3; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      for (std::size_t w = 0; w < A.size(); ++w)
        CHECK_MESSAGE(A.f_element(w) == A.canonical_basis()[w], A.graph().name() << " " << word_to_string(A.elements()[w].word));
    }
}

TEST_CASE("auxiliary monomials") {
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  const auto aux = h3.aux_elements(h3.index_of({1, 2, 3, 1, 2, 1, 2}));
  CHECK(aux.b_prime.to_string() == "b1 b2 b3 b1 b1 b2 b1 b2");
  CHECK(aux.kappa == 1);
  CHECK(aux.f_prime.to_string() == "(b1 b2 - 1) b3 b1 (b1 b2 b1 b2 - 2*b1 b2)");
  CHECK(aux.f_hat.to_string() == "t1 t2 b3 t1 t2 t1 t2");
  CHECK(aux.f_hat_prime.to_string() == "t1 t2 b3 t1 t1 t2 t1 t2");
  const auto bad = h3.aux_elements(h3.index_of({1, 2, 3, 1, 2, 1, 2, 3}));
  CHECK(bad.f_hat.to_string() == "t1 t2 b3 t1 t2 t1 b2 b3");
  const auto plain = h3.aux_elements(h3.index_of({1, 3}));
  CHECK(plain.f_hat.to_string() == "b1 b3");
  CHECK(plain.f_tilde.to_string() == "b1 b3");
  CHECK(plain.kappa == 0);
}

TEST_CASE("t-tilde expansions of the two- and four-letter blocks") {
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  CHECK(eval_sum(h3, "b1 b2 b1 - b1") ==
        eval_sum(h3, "t1 t2 t1 + v^-1 t2 t1 + v^-1 v^-1 t1 + t1 t2 v^-1 + v^-1 t2 v^-1 + v^-1 v^-1 v^-1"));
  CHECK(eval_sum(h3, "b2 b1 b2 - b2") ==
        eval_sum(h3, "t2 t1 t2 + v^-1 t1 t2 + v^-1 v^-1 t2 + t2 t1 v^-1 + v^-1 t1 v^-1 + v^-1 v^-1 v^-1"));
  CHECK(eval_sum(h3, "b1 b2 b1 b2 - 2 b1 b2") ==
        eval_sum(h3, "t1 t2 t1 t2 + t1 t2 t1 v^-1 + v^-1 t2 t1 t2 + v^-1 v^-1 t1 t2 + v^-1 v^-1 v^-1 t2"
                     " + v^-1 t2 t1 v^-1 + v^-1 v^-1 t1 v^-1 + v^-1 v^-1 v^-1 v^-1"));
  CHECK(eval_sum(h3, "b2 b1 b2 b1 - 2 b2 b1") ==
        eval_sum(h3, "t2 t1 t2 t1 + t2 t1 t2 v^-1 + v^-1 t1 t2 t1 + v^-1 v^-1 t2 t1 + v^-1 v^-1 v^-1 t1"
                     " + v^-1 t1 t2 v^-1 + v^-1 v^-1 t2 v^-1 + v^-1 v^-1 v^-1 v^-1"));
  CHECK_FALSE(eval_sum(h3, "b1 b2 b1 - b1") == eval_sum(h3, "t1 t2 t1"));
}

TEST_CASE("projections of the auxiliary monomials agree") {
  for (Family f : {Family::B, Family::H}) {
    for (int rank = 2; rank <= 4; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      for (std::size_t w = 0; w < A.size(); ++w) {
        const auto aux = A.aux_elements(w);
        const LaurentPoly scale = vp(-aux.kappa);
        const auto fh = A.evaluate(aux.f_hat);
        INFO(A.graph().name() << " " << word_to_string(A.elements()[w].word));
        CHECK(A.pi_equal(scale * A.evaluate(aux.f_prime), scale * A.evaluate(aux.f_hat_prime), Lattice::L_H));
        CHECK(A.pi_equal(A.evaluate(aux.f), fh, Lattice::L_H));
        CHECK(A.pi_equal(A.evaluate(aux.f_tilde), fh, Lattice::L_H));
      }
    }
  }
}

TEST_CASE("canonical structure constants are positive") {
  for (Family f : {Family::B, Family::H}) {
    for (int rank = 2; rank <= 3; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      for (std::size_t x = 0; x < A.size(); ++x) {
        CHECK(A.structure_constants(Basis::canonical, 0, x) == A.to_basis(A.canonical_basis()[x], Basis::canonical));
        for (std::size_t y = 0; y < A.size(); ++y)
          for (const auto& [z, c] : A.structure_constants(Basis::canonical, x, y).coords) CHECK(nonneg(c));
      }
    }
  }
}

TEST_CASE("right multiplication by a generator in the f basis") {
  for (Family f : {Family::B, Family::H}) {
    for (int rank = 2; rank <= 3; ++rank) {
      TLAlgebra A(CoxeterGraph(f, rank));
      const auto& g = A.graph();
      for (std::size_t w = 0; w < A.size(); ++w) {
        const auto& e = A.elements()[w];
        for (int i = 1; i <= rank; ++i) {
          const bool descent = std::find(e.right_descents.begin(), e.right_descents.end(), i) != e.right_descents.end();
          Word top = e.word;
          if (!descent) top.push_back(i);
          const auto prod = A.to_basis(A.times_generator(A.f_element(w), i), Basis::f);
          for (const auto& [x, c] : prod.coords) {
            const auto& ex = A.elements()[x];
            CHECK(nonneg(c));
            CHECK(bruhat_leq(g, ex.word, top));
            CHECK(std::find(ex.right_descents.begin(), ex.right_descents.end(), i) != ex.right_descents.end());
          }
          AlgebraElement scaled = A.zero(Basis::f);
          scaled.add(w, delta());
          CHECK((prod == scaled) == descent);
        }
      }
    }
  }
}

TEST_CASE("deleting a letter raises lattice degree exactly at internal and critical letters") {
  TLAlgebra h3(CoxeterGraph(Family::H, 3));
  for (const auto& e : h3.elements()) {
    const auto cls = classify_letters(h3.graph(), e.word);
    for (std::size_t l = 0; l < e.word.size(); ++l) {
      Word del = e.word;
      del.erase(del.begin() + static_cast<std::ptrdiff_t>(l));
      const auto d = h3.lattice_degree(h3.word(del), Lattice::L_H);
      REQUIRE(d.has_value());
      CHECK(*d <= 1);
      const bool special = cls.letters[l].is_internal() || cls.letters[l].critical != CriticalType::none;
      CHECK_MESSAGE((*d == 1) == special, word_to_string(e.word) << " position " << l + 1);
    }
  }
}
