#pragma once

#include <span>
#include <string>

#include "tlrc/laurent.hpp"

namespace tlrc {

/// Quotient of Laurent polynomials in A, always held in canonical form:
///   - numerator and denominator share no nonunit factor (content included),
///   - the denominator's lowest exponent is 0 and its lowest coefficient is positive,
///   - zero is 0/1.
/// Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : den_(LaurentPoly::constant(1)) {}
  RationalFunction(LaurentPoly p);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RationalFunction(LaurentPoly num, LaurentPoly den);

  static RationalFunction from_int(long v) { return {LaurentPoly::constant(v)}; }

  [[nodiscard]] const LaurentPoly& numerator() const { return num_; }
  [[nodiscard]] const LaurentPoly& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }

  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction mirrored() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Sums many terms, grouping equal denominators before any gcd work.
  static RationalFunction sum(std::span<const RationalFunction> terms);

  [[nodiscard]] std::string to_string() const;

 private:
  struct Raw {};
  RationalFunction(Raw, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace tlrc
