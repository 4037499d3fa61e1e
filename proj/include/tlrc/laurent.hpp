#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlrc {

/// Laurent polynomial in the bracket variable A with arbitrary-precision
/// integer coefficients.
///
/// Storage is dense between the lowest and highest nonzero exponent and is
/// trimmed at both ends, so the zero polynomial has no coefficients and two
/// equal polynomials compare equal structurally.
class LaurentPoly {
 public:
  using Coeff = mpz_class;
  using Term = std::pair<int, Coeff>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Coeff& c);
  static LaurentPoly monomial(int exponent, const Coeff& c = 1);
  /// Repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<Term>& terms);
  /// coeffs[k] is the coefficient of A^(low + k).
  static LaurentPoly from_dense(int low, std::vector<Coeff> coeffs);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_monomial() const;

  /// Lowest and highest exponent with a nonzero coefficient. Zero polynomial: 0.
  [[nodiscard]] int low_exponent() const { return low_; }
  [[nodiscard]] int high_exponent() const;

  [[nodiscard]] Coeff coefficient(int exponent) const;
  [[nodiscard]] const Coeff& low_coefficient() const;
  [[nodiscard]] const Coeff& high_coefficient() const;

  /// Nonzero terms in ascending exponent order.
  [[nodiscard]] std::vector<Term> terms() const;
  [[nodiscard]] std::size_t term_count() const;
  [[nodiscard]] const std::vector<Coeff>& dense() const { return coeffs_; }

  /// Multiplies by A^by.
  [[nodiscard]] LaurentPoly shifted(int by) const;
  /// Substitutes A -> A^-1 (mirror image for bracket-type invariants).
  [[nodiscard]] LaurentPoly mirrored() const;
  [[nodiscard]] LaurentPoly pow(unsigned e) const;
  /// Greatest common divisor of the integer coefficients (positive; 0 for zero).
  [[nodiscard]] Coeff content() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Coeff& c);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Coeff& c) { return lhs *= c; }
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

  /// Human-readable form, e.g. "A^4 + 1 + A^-4".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Exact division in Z[A, A^-1]. Returns nullopt when the quotient is not a
/// Laurent polynomial with integer coefficients.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// GCD up to units: result has lowest exponent 0 and a positive lowest coefficient.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace tlrc
