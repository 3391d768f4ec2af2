#include "tlcb/errors.hpp"
#include "tlcb/tl_algebra.hpp"

namespace tlcb {

namespace {

using S = MixedSymbol;

// Replacement polynomials for the six block shapes.
MixedSum block_polynomial(int shape) {
  switch (shape) {
    case 1: return {{{1, {S::B(1), S::B(2)}}, {-1, {}}}};
    case 2: return {{{1, {S::B(1), S::B(2), S::B(1)}}, {-1, {S::B(1)}}}};
    case 3: return {{{1, {S::B(2), S::B(1), S::B(2)}}, {-1, {S::B(2)}}}};
    case 4: return {{{1, {S::B(1), S::B(2), S::B(1), S::B(2)}}, {-2, {S::B(1), S::B(2)}}}};
    case 5: return {{{1, {S::B(2), S::B(1), S::B(2)}}, {-2, {S::B(2)}}}};
    case 6: return {{{1, {S::B(2), S::B(1), S::B(2), S::B(1)}}, {-2, {S::B(2), S::B(1)}}}};
  }
  throw InternalConsistencyError("unknown block shape " + std::to_string(shape));
}

MixedSum single(MixedWord w) { return {{{1, std::move(w)}}}; }

std::string symbol_text(const MixedSymbol& s) {
  switch (s.kind) {
    case MixedSymbol::Kind::b: return "b" + std::to_string(s.value);
    case MixedSymbol::Kind::ttilde: return "t" + std::to_string(s.value);
    case MixedSymbol::Kind::vpow: return s.value == 1 ? "v" : "v^" + std::to_string(s.value);
  }
  return "?";
}

}  // namespace

std::string to_string(const MixedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol_text(w[i]);
  }
  return out;
}

std::string MixedExpr::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    std::string body;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      const auto& [c, w] = f.terms[i];
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (i == 0)
        body += neg ? "-" : "";
      else
        body += neg ? " - " : " + ";
      if (mag != 1) body += mag.str() + (w.empty() ? "" : "*");
      if (mag != 1 && w.empty()) continue;
      body += tlcb::to_string(w);
    }
    if (!out.empty()) out += ' ';
    out += f.terms.size() == 1 && f.terms[0].first == 1 ? body : "(" + body + ")";
  }
  return out.empty() ? "1" : out;
}

AuxElements TLAlgebra::aux_elements(std::size_t idx) {
  if (idx >= elems_.size()) throw DomainError("basis index out of range");
  const RightJustified rj = right_justify(g_, elems_[idx].word);
  const auto& L = rj.classes.letters;
  const std::size_t n = rj.word.size();
  AuxElements aux;

  std::vector<const JustifiedBlock*> block_at(n, nullptr);
  for (const auto& b : rj.blocks) block_at[static_cast<std::size_t>(b.start)] = &b;
  for (std::size_t k = 0; k < n;) {
    if (const auto* b = block_at[k]) {
      if (b->distinguished) aux.f_prime.factors.push_back(single({S::B(1)}));
      aux.f.factors.push_back(block_polynomial(b->shape));
      aux.f_prime.factors.push_back(block_polynomial(b->shape));
      k += static_cast<std::size_t>(b->length);
    } else {
      aux.f.factors.push_back(single({S::B(rj.word[k])}));
      aux.f_prime.factors.push_back(single({S::B(rj.word[k])}));
      ++k;
    }
  }

  MixedWord bp, fh, fhp, ft;
  for (std::size_t k = 0; k < n; ++k) {
    const int s = rj.word[k];
    const auto& l = L[k];
    const bool hat = l.is_internal() || (l.is_lateral() && !l.bad);
    const bool critical = l.critical != CriticalType::none;
    if (l.is_bilateral()) ++aux.kappa;
    bp.push_back(S::B(s));
    if (l.is_bilateral()) bp.push_back(S::B(s));
    fh.push_back(hat ? S::T(s) : S::B(s));
    fhp.push_back(hat ? S::T(s) : S::B(s));
    if (hat && l.is_bilateral()) fhp.push_back(S::T(s));
    ft.push_back(hat || critical ? S::T(s) : S::B(s));
  }
  aux.b_prime.factors.push_back(single(bp));
  aux.f_hat.factors.push_back(single(fh));
  aux.f_hat_prime.factors.push_back(single(fhp));
  aux.f_tilde.factors.push_back(single(ft));
  return aux;
}

AlgebraElement TLAlgebra::evaluate(const MixedWord& w) {
  AlgebraElement a = one();
  for (const auto& sym : w) {
    switch (sym.kind) {
      case MixedSymbol::Kind::b: a = times_generator(a, sym.value); break;
      case MixedSymbol::Kind::ttilde: a = times_generator(a, sym.value) - LaurentPoly::v(-1) * a; break;
      case MixedSymbol::Kind::vpow: a = LaurentPoly::v(sym.value) * a; break;
    }
  }
  return a;
}

AlgebraElement TLAlgebra::evaluate(const MixedExpr& e) {
  AlgebraElement acc = one();
  for (const auto& factor : e.factors) {
    AlgebraElement next = zero();
    for (const auto& [c, w] : factor.terms) {
      AlgebraElement t = acc;
      for (const auto& sym : w) {
        switch (sym.kind) {
          case MixedSymbol::Kind::b: t = times_generator(t, sym.value); break;
          case MixedSymbol::Kind::ttilde: t = times_generator(t, sym.value) - LaurentPoly::v(-1) * t; break;
          case MixedSymbol::Kind::vpow: t = LaurentPoly::v(sym.value) * t; break;
        }
      }
      next += LaurentPoly(c) * t;
    }
    acc = std::move(next);
  }
  return acc;
}

const AlgebraElement& TLAlgebra::f_element(std::size_t idx) {
  if (idx >= elems_.size()) throw DomainError("basis index out of range");
  if (!f_[idx]) {
    AlgebraElement f = evaluate(aux_elements(idx).f);
    if (!(f.coeff(idx) == LaurentPoly(1)))
      throw InternalConsistencyError("f element of " + word_to_string(elems_[idx].word) + " has leading coefficient " +
                                     f.coeff(idx).to_string());
    for (const auto& [x, c] : f.coords)
      if (x != idx && elems_[x].length >= elems_[idx].length)
        throw InternalConsistencyError("f element of " + word_to_string(elems_[idx].word) + " is not unitriangular");
    f_[idx] = std::move(f);
  }
  return *f_[idx];
}

}  // namespace tlcb
