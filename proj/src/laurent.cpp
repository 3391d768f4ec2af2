#include "tlcb/laurent.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlcb {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) {
  if (c == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, c}});
}

Integer LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exp;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.push_back({-it->exp, it->coeff});
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back({b->exp, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? a->coeff + b->coeff : a->coeff - b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exp);
  if (a.terms_.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exp);
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[static_cast<std::size_t>(x.exp + y.exp - lo)] += x.coeff * y.coeff;
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.push_back({lo + static_cast<int>(i), std::move(acc[i])});
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("LaurentPoly: division by zero");
  if (a.is_zero()) return LaurentPoly{};
  // Long division from the top degree down; Laurent units v^k are absorbed by
  // allowing the quotient to have negative exponents.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const auto& lead = b.terms_.back();
  const int b_span = b.terms_.back().exp - b.terms_.front().exp;
  while (!rem.is_zero()) {
    const auto& top = rem.terms_.back();
    if (rem.terms_.back().exp - rem.terms_.front().exp < b_span) return std::nullopt;
    if (top.coeff % lead.coeff != 0) return std::nullopt;
    LaurentPoly q = monomial(top.coeff / lead.coeff, top.exp - lead.exp);
    rem -= q * b;
    quot += q;
  }
  return quot;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Integer& c, int exp, const std::string& coeff_text) {
  const bool neg = c < 0;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  const bool unit = (coeff_text == "1");
  if (exp == 0) {
    os << coeff_text;
    return;
  }
  if (!unit) os << coeff_text << '*';
  os << 'v';
  if (exp != 1) os << '^' << exp;
}

std::string abs_string(const Integer& c) { return (c < 0 ? Integer(-c) : c).str(); }

struct Parsed {
  Integer num;
  Integer den;
  int exp;
};

// Grammar: [sign] term (sign term)*; term := coeff ['*' 'v' ['^' int]] | 'v' ['^' int];
// coeff := digits ['/' digits].
std::vector<Parsed> parse_terms(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw DomainError("empty polynomial text");
  std::vector<Parsed> out;
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw DomainError(std::string("cannot parse polynomial '") + std::string(text) + "': " + why);
  };
  auto read_int = [&]() -> Integer {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected digits");
    Integer v(s.substr(i, j - i));
    i = j;
    return v;
  };
  auto read_exp = [&]() -> int {
    if (i >= s.size() || s[i] != '^') return 1;
    ++i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    Integer e = read_int();
    if (e > 1'000'000) fail("exponent too large");
    return neg ? -static_cast<int>(e) : static_cast<int>(e);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    if (i >= s.size()) fail("dangling sign");
    Parsed t{1, 1, 0};
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      t.num = read_int();
      if (i < s.size() && s[i] == '/') {
        ++i;
        t.den = read_int();
        if (t.den == 0) fail("zero denominator");
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'v') fail("expected 'v' after '*'");
        ++i;
        t.exp = read_exp();
      }
    } else if (s[i] == 'v') {
      ++i;
      t.exp = read_exp();
    } else {
      fail("unexpected character");
    }
    t.num *= sign;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, it->coeff, it->exp, abs_string(it->coeff));
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly r;
  for (const auto& t : parse_terms(text)) {
    if (t.den != 1) {
      if (t.num % t.den != 0) throw DomainError("non-integral coefficient in '" + std::string(text) + "'");
      r += monomial(t.num / t.den, t.exp);
    } else {
      r += monomial(t.num, t.exp);
    }
  }
  return r;
}

const LaurentPoly& delta() {
  static const LaurentPoly d = LaurentPoly::v(1) + LaurentPoly::v(-1);
  return d;
}

PolyClass classify(const LaurentPoly& a) {
  PolyClass c{true, true, true, a == a.bar()};
  for (const auto& t : a.terms()) {
    if (t.exp > 0) c.in_Aminus = false;
    if (t.exp > -1) c.in_vinv_Aminus = false;
    if (t.coeff < 0) c.nonneg = false;
  }
  return c;
}

LaurentPoly invariant_completion(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& t : a.terms()) {
    if (t.exp == 0) {
      r += LaurentPoly(t.coeff);
    } else if (t.exp > 0) {
      r += LaurentPoly::monomial(t.coeff, t.exp);
      r += LaurentPoly::monomial(t.coeff, -t.exp);
    }
  }
  return r;
}

std::vector<Integer> to_delta_powers(const LaurentPoly& a) {
  if (!(a == a.bar())) throw DomainError("to_delta_powers: " + a.to_string() + " is not bar-invariant");
  std::vector<Integer> out;
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const int d = *rem.max_degree();
    const Integer c = rem.terms().back().coeff;
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1);
    out[static_cast<std::size_t>(d)] = c;
    LaurentPoly p = 1;
    for (int k = 0; k < d; ++k) p *= delta();
    rem -= LaurentPoly(c) * p;
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalLaurent::RationalLaurent(LaurentPoly p, unsigned twos) : num_(std::move(p)), twos_(twos) { normalize(); }

void RationalLaurent::normalize() {
  if (num_.is_zero()) {
    twos_ = 0;
    return;
  }
  while (twos_ > 0) {
    bool all_even = true;
    for (const auto& t : num_.terms())
      if (boost::multiprecision::bit_test(t.coeff, 0)) {
        all_even = false;
        break;
      }
    if (!all_even) break;
    LaurentPoly half;
    for (const auto& t : num_.terms()) half += LaurentPoly::monomial(t.coeff / 2, t.exp);
    num_ = std::move(half);
    --twos_;
  }
}

LaurentPoly RationalLaurent::narrow() const {
  if (twos_ != 0) throw DomainError("non-integral coefficient " + to_string());
  return num_;
}

RationalLaurent RationalLaurent::divided_by(const Integer& d) const {
  if (d == 0) throw DomainError("RationalLaurent: division by zero");
  Integer m = d < 0 ? Integer(-d) : d;
  unsigned k = 0;
  while (!boost::multiprecision::bit_test(m, 0)) {
    m >>= 1;
    ++k;
  }
  LaurentPoly q;
  for (const auto& t : num_.terms()) {
    if (t.coeff % m != 0)
      throw DomainError("division by " + d.str() + " leaves the dyadic ring: " + to_string());
    q += LaurentPoly::monomial(t.coeff / m, t.exp);
  }
  if (d < 0) q = -q;
  return RationalLaurent(std::move(q), twos_ + k);
}

RationalLaurent& RationalLaurent::operator+=(const RationalLaurent& o) {
  const unsigned t = std::max(twos_, o.twos_);
  num_ = num_ * LaurentPoly(Integer(1) << (t - twos_)) + o.num_ * LaurentPoly(Integer(1) << (t - o.twos_));
  twos_ = t;
  normalize();
  return *this;
}

RationalLaurent& RationalLaurent::operator-=(const RationalLaurent& o) { return *this += -o; }

RationalLaurent& RationalLaurent::operator*=(const RationalLaurent& o) {
  num_ *= o.num_;
  twos_ += o.twos_;
  normalize();
  return *this;
}

std::string RationalLaurent::to_string() const {
  if (twos_ == 0) return num_.to_string();
  std::ostringstream os;
  bool first = true;
  const Integer den = Integer(1) << twos_;
  const auto& terms = num_.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Integer n = it->coeff < 0 ? Integer(-it->coeff) : it->coeff;
    Integer g = boost::multiprecision::gcd(n, den);
    std::string text = (n / g).str();
    if (den / g != 1) text += "/" + (den / g).str();
    append_term(os, first, it->coeff, it->exp, text);
    first = false;
  }
  return os.str();
}

RationalLaurent RationalLaurent::parse(std::string_view text) {
  RationalLaurent r;
  for (const auto& t : parse_terms(text)) {
    Integer den = t.den;
    unsigned k = 0;
    while (den > 1 && !boost::multiprecision::bit_test(den, 0)) {
      den >>= 1;
      ++k;
    }
    if (den != 1) throw DomainError("denominator is not a power of 2 in '" + std::string(text) + "'");
    r += RationalLaurent(LaurentPoly::monomial(t.num, t.exp), k);
  }
  return r;
}

}  // namespace tlcb
