/*
 * motivic.hpp
 * -----------
 * Exact arithmetic in the Grothendieck ring of varieties localized at the
 * classes of projective spaces.
 *
 * Every class in scope is a fraction  p(L) / ([P^m1] [P^m2] ... [P^mr])  where
 * p is an integer polynomial in the Tate class L = [A^1] and
 * [P^m] = 1 + L + ... + L^m.  The denominator is stored as the sorted multiset
 * {m1, ..., mr}; entries m = 0 are dropped since [P^0] = 1.
 *
 * No reduced form is maintained.  Two classes are equal iff they agree after
 * cross-multiplication, which avoids polynomial gcds altogether.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motcsm {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer polynomial in L. Coefficient i multiplies L^i; the highest stored
// coefficient is nonzero unless the polynomial is zero (empty storage).
class LPolynomial {
 public:
  LPolynomial() = default;
  LPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit LPolynomial(std::vector<Integer> coefficients);

  static LPolynomial monomial(const Integer& coefficient, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  LPolynomial& operator+=(const LPolynomial& other);
  LPolynomial& operator-=(const LPolynomial& other);
  LPolynomial& operator*=(const LPolynomial& other);

  friend LPolynomial operator+(LPolynomial a, const LPolynomial& b) { return a += b; }
  friend LPolynomial operator-(LPolynomial a, const LPolynomial& b) { return a -= b; }
  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
  friend LPolynomial operator-(LPolynomial a);
  friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "c0 + c1*L + c2*L^2 + ...", ascending, zero terms omitted, "0" for zero.
  std::string to_string() const;
  // Accepts the canonical form and the usual hand-written variants
  // ("L^2 - 2*L + 1", "-L", "3L"). Throws InputError.
  static LPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Quotient a / b when b divides a exactly over the integers.
std::optional<LPolynomial> divide_exact(const LPolynomial& a, const LPolynomial& b);

// 1 + L + ... + L^mu.
LPolynomial projective_polynomial(unsigned mu);
// p * [P^mu], computed as a sliding-window sum of coefficients.
LPolynomial times_projective(const LPolynomial& p, unsigned mu);

class MotivicClass {
 public:
  MotivicClass() = default;
  MotivicClass(long constant);  // NOLINT(google-explicit-constructor)
  MotivicClass(LPolynomial numerator);  // NOLINT(google-explicit-constructor)
  MotivicClass(LPolynomial numerator, std::vector<unsigned> denominator);

  const LPolynomial& numerator() const { return num_; }
  const std::vector<unsigned>& denominator() const { return den_; }
  LPolynomial denominator_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }

  // Cancels denominator factors that divide the numerator exactly. The result
  // is equal to *this; it is smaller but not canonical.
  MotivicClass reduced() const;

  friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator-(const MotivicClass& a);
  MotivicClass& operator+=(const MotivicClass& other) { return *this = *this + other; }
  MotivicClass& operator-=(const MotivicClass& other) { return *this = *this - other; }
  MotivicClass& operator*=(const MotivicClass& other) { return *this = *this * other; }

  // Cross-multiplicative equality.
  friend bool operator==(const MotivicClass& a, const MotivicClass& b);

  // "num" or "(num) / [P^a][P^b]" for human-readable output.
  std::string to_string() const;

 private:
  LPolynomial num_;
  std::vector<unsigned> den_;
};

MotivicClass projective_class(unsigned mu);
MotivicClass affine_class(unsigned n);
MotivicClass torus_class(unsigned n);
MotivicClass div_by_projective(const MotivicClass& a, unsigned mu);

// Evaluation at L = 1, sending [P^mu] to mu + 1.
Rational euler_specialize(const MotivicClass& a);
// Evaluation at L = q; q must be at least 2.
Rational eval_at(const MotivicClass& a, const Integer& q);
// The polynomial quotient when the denominator divides the numerator.
std::optional<LPolynomial> as_polynomial(const MotivicClass& a);
inline bool is_polynomial(const MotivicClass& a) { return as_polynomial(a).has_value(); }

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace motcsm
