#include "tlcb/tl_algebra.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>

namespace tlcb {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::ttilde: return "ttilde";
    case Basis::f: return "f";
    case Basis::canonical: return "canonical";
  }
  return "?";
}

Basis parse_basis(std::string_view s) {
  if (s == "monomial") return Basis::monomial;
  if (s == "ttilde") return Basis::ttilde;
  if (s == "f") return Basis::f;
  if (s == "canonical") return Basis::canonical;
  throw DomainError("unknown basis '" + std::string(s) + "'");
}

LaurentPoly AlgebraElement::coeff(std::size_t idx) const {
  auto it = coords.find(idx);
  return it == coords.end() ? LaurentPoly() : it->second;
}

void AlgebraElement::add(std::size_t idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = coords[idx];
  slot += c;
  if (slot.is_zero()) coords.erase(idx);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.basis != basis) throw DomainError("adding elements expressed in different bases");
  for (const auto& [k, c] : o.coords) add(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.basis != basis) throw DomainError("subtracting elements expressed in different bases");
  for (const auto& [k, c] : o.coords) add(k, -c);
  return *this;
}

AlgebraElement operator*(const LaurentPoly& c, AlgebraElement a) {
  if (c.is_zero()) {
    a.coords.clear();
    return a;
  }
  for (auto& [k, x] : a.coords) x = c * x;
  return a;
}

// ---------------------------------------------------------------------------

TLAlgebra::TLAlgebra(CoxeterGraph g, std::size_t stratum_cap)
    : g_(g), elems_(enumerate_fc(g, stratum_cap)), rw_(g) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    index_[elems_[i].word] = i;
    monomials_.push_back(AlgebraElement{g_, Basis::monomial, {{i, LaurentPoly(1)}}});
  }
  right_table_.assign(elems_.size(), std::vector<std::optional<AlgebraElement>>(static_cast<std::size_t>(g_.rank) + 1));
  ttilde_.resize(elems_.size());
  f_.resize(elems_.size());
}

std::optional<std::size_t> TLAlgebra::find_index(const Word& w) const {
  auto it = index_.find(normal_form(g_, w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TLAlgebra::index_of(const Word& w) const {
  if (auto i = find_index(w)) return *i;
  throw DomainError(word_to_string(w) + " is not a reduced expression of a fully commutative element of " + g_.name());
}

AlgebraElement TLAlgebra::one() const { return monomial(0); }

AlgebraElement TLAlgebra::monomial(std::size_t idx) const {
  if (idx >= elems_.size()) throw DomainError("basis index out of range");
  return monomials_[idx];
}

AlgebraElement TLAlgebra::from_combination(const Combination& c) const {
  AlgebraElement out = zero();
  for (const auto& [w, coeff] : c) out.add(index_of(w), coeff);
  return out;
}

AlgebraElement TLAlgebra::word(const Word& w) { return from_combination(rw_.reduce(w)); }

const AlgebraElement& TLAlgebra::right_gen(std::size_t idx, int s) {
  auto& slot = right_table_[idx][static_cast<std::size_t>(s)];
  if (!slot) {
    Word w = elems_[idx].word;
    w.push_back(s);
    slot = word(w);
  }
  return *slot;
}

const AlgebraElement& TLAlgebra::product(std::size_t x, std::size_t y) {
  auto key = std::pair{x, y};
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  Word w = elems_[x].word;
  w.insert(w.end(), elems_[y].word.begin(), elems_[y].word.end());
  return product_cache_.emplace(key, word(w)).first->second;
}

AlgebraElement TLAlgebra::times_generator(const AlgebraElement& a, int s) {
  if (s < 1 || s > g_.rank) throw DomainError("generator out of range");
  const AlgebraElement m = to_monomial(a);
  AlgebraElement out = zero();
  for (const auto& [x, c] : m.coords) out += c * right_gen(x, s);
  return out;
}

AlgebraElement TLAlgebra::generator_times(int s, const AlgebraElement& a) {
  if (s < 1 || s > g_.rank) throw DomainError("generator out of range");
  const AlgebraElement m = to_monomial(a);
  AlgebraElement out = zero();
  for (const auto& [x, c] : m.coords) {
    Word w{s};
    w.insert(w.end(), elems_[x].word.begin(), elems_[x].word.end());
    out += c * word(w);
  }
  return out;
}

AlgebraElement TLAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.graph == g_) || !(b.graph == g_)) throw DomainError("multiply: graph mismatch");
  const AlgebraElement ma = to_monomial(a), mb = to_monomial(b);
  AlgebraElement out = zero();
  for (const auto& [x, cx] : ma.coords)
    for (const auto& [y, cy] : mb.coords) out += (cx * cy) * product(x, y);
  return out;
}

const AlgebraElement& TLAlgebra::ttilde_element(std::size_t idx) {
  if (idx >= elems_.size()) throw DomainError("basis index out of range");
  if (!ttilde_[idx]) {
    const Word& w = elems_[idx].word;
    if (w.empty()) {
      ttilde_[idx] = one();
    } else {
      const std::size_t prefix = index_of(Word(w.begin(), w.end() - 1));
      AlgebraElement prev = ttilde_element(prefix);
      ttilde_[idx] = times_generator(prev, w.back()) - LaurentPoly::v(-1) * prev;
    }
  }
  return *ttilde_[idx];
}

const AlgebraElement& TLAlgebra::basis_element(Basis basis, std::size_t idx) {
  if (idx >= elems_.size()) throw DomainError("basis index out of range");
  switch (basis) {
    case Basis::monomial: return monomials_[idx];
    case Basis::ttilde: return ttilde_element(idx);
    case Basis::canonical: return canonical_basis()[idx];
    case Basis::f: return f_element(idx);
  }
  throw DomainError("unknown basis");
}

AlgebraElement TLAlgebra::to_monomial(const AlgebraElement& a) {
  if (a.basis == Basis::monomial) return a;
  AlgebraElement out = zero();
  for (const auto& [x, c] : a.coords) out += c * basis_element(a.basis, x);
  return out;
}

AlgebraElement TLAlgebra::express_unitriangular(const AlgebraElement& m, Basis target) {
  AlgebraElement rem = m;
  AlgebraElement out = zero(target);
  while (!rem.is_zero()) {
    const auto [x, c] = *rem.coords.rbegin();
    out.add(x, c);
    rem -= c * basis_element(target, x);
    if (rem.coords.count(x))
      throw InternalConsistencyError(to_string(target) + " basis element " + word_to_string(elems_[x].word) +
                                     " is not unitriangular");
  }
  return out;
}

AlgebraElement TLAlgebra::to_basis(const AlgebraElement& a, Basis target) {
  if (a.basis == target) return a;
  AlgebraElement m = to_monomial(a);
  if (target == Basis::monomial) return m;
  return express_unitriangular(m, target);
}

AlgebraElement TLAlgebra::bar(const AlgebraElement& a) {
  AlgebraElement m = to_monomial(a);
  for (auto& [x, c] : m.coords) c = c.bar();
  return to_basis(m, a.basis);
}

std::optional<int> TLAlgebra::lattice_degree(const AlgebraElement& a, Lattice which) {
  const AlgebraElement coords = to_basis(a, which == Lattice::L ? Basis::ttilde : Basis::monomial);
  std::optional<int> deg;
  for (const auto& [x, c] : coords.coords) {
    const int d = *c.max_degree();
    if (!deg || d > *deg) deg = d;
  }
  return deg;
}

bool TLAlgebra::pi_equal(const AlgebraElement& a, const AlgebraElement& b, Lattice which) {
  auto da = lattice_degree(a, which), db = lattice_degree(b, which);
  if ((da && *da > 0) || (db && *db > 0)) return false;
  auto dd = lattice_degree(to_monomial(a) - to_monomial(b), which);
  return !dd || *dd <= -1;
}

std::vector<AlgebraElement> TLAlgebra::canonical_basis_with_order(IcOrder order, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<AlgebraElement> ct, cm;  // t-tilde and monomial coordinates
  ct.reserve(elems_.size());
  cm.reserve(elems_.size());
  for (std::size_t w = 0; w < elems_.size(); ++w) {
    AlgebraElement cur_m = monomial(w);
    AlgebraElement cur_t = to_basis(cur_m, Basis::ttilde);
    for (int guard = 0;; ++guard) {
      if (guard > 100000) throw InternalConsistencyError("canonical basis recursion did not terminate");
      std::vector<std::size_t> offenders;
      for (const auto& [x, c] : cur_t.coords)
        if (x != w && *c.max_degree() >= 0) offenders.push_back(x);
      if (offenders.empty()) break;
      std::size_t x = 0;
      switch (order) {
        case IcOrder::maximal_first: x = offenders.back(); break;
        case IcOrder::minimal_first: x = offenders.front(); break;
        case IcOrder::random:
          x = offenders[std::uniform_int_distribution<std::size_t>(0, offenders.size() - 1)(rng)];
          break;
      }
      const LaurentPoly mu = invariant_completion(cur_t.coeff(x));
      cur_t -= mu * ct[x];
      cur_m -= mu * cm[x];
    }
    if (!(cur_t.coeff(w) == LaurentPoly(1)))
      throw InternalConsistencyError("canonical basis element " + word_to_string(elems_[w].word) +
                                     " lost its leading coefficient");
    AlgebraElement barred = cur_m;
    for (auto& [x, c] : barred.coords) c = c.bar();
    if (!(barred == cur_m))
      throw InternalConsistencyError("canonical basis element " + word_to_string(elems_[w].word) + " is not bar invariant");
    ct.push_back(std::move(cur_t));
    cm.push_back(std::move(cur_m));
  }
  return cm;
}

const std::vector<AlgebraElement>& TLAlgebra::canonical_basis() {
  if (canonical_.empty()) canonical_ = canonical_basis_with_order(IcOrder::maximal_first);
  return canonical_;
}

AlgebraElement TLAlgebra::structure_constants(Basis basis, std::size_t x, std::size_t y) {
  return to_basis(multiply(basis_element(basis, x), basis_element(basis, y)), basis);
}

}  // namespace tlcb
