#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wcg {

using Coeff = std::int64_t;

// deg(0); every real degree compares greater.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Integer Laurent polynomial in one indeterminate v.
//
// Stored sparsely as (exponent, coefficient) pairs in ascending exponent
// order with no zero coefficients; the zero polynomial has no terms.
// Coefficient arithmetic is overflow-checked and throws std::overflow_error
// instead of wrapping.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Coeff coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;

  static LaurentPoly constant(Coeff c);
  static LaurentPoly monomial(int exp, Coeff c = 1);
  static LaurentPoly v_power(int n) { return monomial(n, 1); }
  // v^n - v^{-n}, the recurring quadratic-relation factor.
  static LaurentPoly v_minus_vinv(int n);
  // v^n + v^{-n}.
  static LaurentPoly v_plus_vinv(int n);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }

  // Highest exponent with a non-zero coefficient, kDegNegInf for zero.
  int deg() const { return terms_.empty() ? kDegNegInf : terms_.back().exp; }
  // Lowest exponent; for the zero polynomial returns
  // std::numeric_limits<int>::max().
  int low_deg() const;
  Coeff coeff_at(int n) const;

  LaurentPoly bar() const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  // Terms of exponent < 0, == 0 and > 0 respectively.
  LaurentPoly negative_part() const;
  LaurentPoly positive_part() const;

  // Membership in Z[v^{-1}] and v^{-1}Z[v^{-1}].
  bool in_Z_vinv() const { return deg() <= 0; }
  bool in_vinv_Z_vinv() const { return deg() <= -1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(Coeff c);

  // this += a * b without materialising the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, Coeff c) { return a *= c; }
  friend LaurentPoly operator*(Coeff c, LaurentPoly a) { return a *= c; }

  bool operator==(const LaurentPoly&) const = default;

  // "c*v^e" terms in descending exponent order joined by " + ",
  // e.g. "1*v^2 + -2*v^0 + 1*v^-2"; the zero polynomial is "0".
  std::string to_string() const;
  // Inverse of to_string(); throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void merge(const LaurentPoly& o, Coeff sign);

  std::vector<Term> terms_;
};

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
}  // namespace checked

}  // namespace wcg
