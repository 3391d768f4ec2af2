#pragma once

// Exact arithmetic in Z[v, v^-1] and its dyadic extension Z[1/2][v, v^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlcb {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Integer Laurent polynomial in v.  Terms are kept sorted by exponent and
/// zero coefficients are never stored, so structural equality is equality.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Integer& c);  // NOLINT

  static LaurentPoly monomial(const Integer& c, int exp);
  /// v^exp
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Integer coeff(int exp) const;
  /// Highest / lowest exponent; nullopt for the zero polynomial.
  std::optional<int> max_degree() const;
  std::optional<int> min_degree() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiply by v^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// Exact quotient a / b, or nullopt when b does not divide a in Z[v, v^-1].
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical text form, e.g. "3*v^2 - 1 + 2*v^-3".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void add_scaled(const LaurentPoly& o, int sign);

  std::vector<Term> terms_;
};

/// delta = [2] = v + v^-1.
const LaurentPoly& delta();

struct PolyClass {
  bool in_Aminus;       // all exponents <= 0
  bool in_vinv_Aminus;  // all exponents <= -1
  bool nonneg;          // all coefficients >= 0
  bool bar_fixed;
  bool operator==(const PolyClass&) const = default;
};

PolyClass classify(const LaurentPoly& a);

/// The unique bar-invariant mu(a) with a - mu(a) in v^-1 Z[v^-1].
LaurentPoly invariant_completion(const LaurentPoly& a);

/// Coefficients c_k with a = sum c_k delta^k.  Throws DomainError unless a is
/// bar-invariant (these are exactly Z[delta]).
std::vector<Integer> to_delta_powers(const LaurentPoly& a);

/// Laurent polynomial with coefficients in Z[1/2]: numerator / 2^twos, stored
/// reduced (twos == 0 or some numerator coefficient is odd).
class RationalLaurent {
 public:
  RationalLaurent() = default;
  RationalLaurent(long long c) : num_(c) {}  // NOLINT
  explicit RationalLaurent(LaurentPoly p, unsigned twos = 0);

  const LaurentPoly& numerator() const { return num_; }
  unsigned twos() const { return twos_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return twos_ == 0; }

  /// Checked narrowing; throws DomainError if a denominator survives.
  LaurentPoly narrow() const;

  RationalLaurent bar() const { return RationalLaurent(num_.bar(), twos_); }
  RationalLaurent halved(unsigned k = 1) const { return RationalLaurent(num_, twos_ + k); }
  /// Exact division by a nonzero integer; throws DomainError when the result
  /// leaves the dyadic ring.
  RationalLaurent divided_by(const Integer& d) const;

  RationalLaurent operator-() const { return RationalLaurent(-num_, twos_); }
  RationalLaurent& operator+=(const RationalLaurent& o);
  RationalLaurent& operator-=(const RationalLaurent& o);
  RationalLaurent& operator*=(const RationalLaurent& o);
  friend RationalLaurent operator+(RationalLaurent a, const RationalLaurent& b) { return a += b; }
  friend RationalLaurent operator-(RationalLaurent a, const RationalLaurent& b) { return a -= b; }
  friend RationalLaurent operator*(RationalLaurent a, const RationalLaurent& b) { return a *= b; }
  bool operator==(const RationalLaurent&) const = default;

  /// "1/2*v + 1/2*v^-1"; integral values print exactly like LaurentPoly.
  std::string to_string() const;
  static RationalLaurent parse(std::string_view text);

 private:
  void normalize();

  LaurentPoly num_;
  unsigned twos_ = 0;
};

}  // namespace tlcb
