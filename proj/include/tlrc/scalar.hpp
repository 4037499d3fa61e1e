#pragma once

#include <complex>
#include <numbers>
#include <variant>

#include "tlrc/laurent.hpp"
#include "tlrc/rational.hpp"

namespace tlrc {

/// Root-of-unity evaluation point A = exp(i*pi / 2r).
class RootParams {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Throws std::invalid_argument unless r >= 3 and tol > 0.
  explicit RootParams(int r, double tol = kDefaultTol);

  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] double tol() const { return tol_; }
  /// Phase of A in radians, pi / 2r.
  [[nodiscard]] long double angle() const { return std::numbers::pi_v<long double> / (2.0L * r_); }
  /// Largest label that survives truncation.
  [[nodiscard]] int max_label() const { return r_ - 2; }

  friend bool operator==(const RootParams&, const RootParams&) = default;

 private:
  int r_;
  double tol_;
};

/// A numeric value evaluated at a root of unity, tagged with where it was evaluated.
struct NumericValue {
  std::complex<double> value;
  RootParams params;
};

/// Either an exact generic-A value or a numeric root-of-unity value.
using ScalarValue = std::variant<RationalFunction, NumericValue>;

/// d = -A^2 - A^-2.
LaurentPoly loop_value();

/// [n] = (A^2n - A^-2n) / (A^2 - A^-2), computed by exact division.
LaurentPoly quantum_int(int n);
/// [n]! = [n][n-1]...[1], [0]! = 1.
LaurentPoly quantum_fact(int n);
/// Delta_n = (-1)^n [n+1], the closure of the n-strand projector.
LaurentPoly delta_n(int n);

/// sin(n pi / r) / sin(pi / r).
double quantum_int_at(int n, const RootParams& params);
double quantum_fact_at(int n, const RootParams& params);
/// (-1)^n sin((n+1) pi / r) / sin(pi / r).
double delta_n_at(int n, const RootParams& params);

/// A^k at the root, built from cos/sin of k*pi/2r rather than repeated products.
std::complex<long double> power_of_a(long k, const RootParams& params);

/// Substitutes A = exp(i pi / 2r). Exponents are reduced modulo 2r in exact
/// integer arithmetic (A^2r = -1) before any floating-point work.
std::complex<double> eval_at_root(const LaurentPoly& p, const RootParams& params);
/// Throws DenominatorVanishes when |den(A)| <= params.tol().
std::complex<double> eval_at_root(const RationalFunction& f, const RootParams& params);

}  // namespace tlrc
