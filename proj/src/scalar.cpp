#include "tlrc/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlrc/errors.hpp"

namespace tlrc {

RootParams::RootParams(int r, double tol) : r_(r), tol_(tol) {
  if (r < 3) throw std::invalid_argument("root level r must be >= 3, got " + std::to_string(r));
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

LaurentPoly loop_value() {
  return LaurentPoly::from_terms({{2, -1}, {-2, -1}});
}

LaurentPoly quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("quantum_int: n must be non-negative");
  const LaurentPoly num = LaurentPoly::from_terms({{2 * n, 1}, {-2 * n, -1}});
  const LaurentPoly den = LaurentPoly::from_terms({{2, 1}, {-2, -1}});
  auto q = divide_exact(num, den);
  if (!q) throw std::logic_error("quantum_int: inexact division");
  return *q;
}

LaurentPoly quantum_fact(int n) {
  if (n < 0) throw std::invalid_argument("quantum_fact: n must be non-negative");
  LaurentPoly out = LaurentPoly::constant(1);
  for (int k = 2; k <= n; ++k) out *= quantum_int(k);
  return out;
}

LaurentPoly delta_n(int n) {
  if (n < 0) throw std::invalid_argument("delta_n: n must be non-negative");
  LaurentPoly q = quantum_int(n + 1);
  return (n % 2 == 0) ? q : -q;
}

double quantum_int_at(int n, const RootParams& params) {
  const long double t = std::numbers::pi_v<long double> / params.r();
  return static_cast<double>(std::sin(n * t) / std::sin(t));
}

double quantum_fact_at(int n, const RootParams& params) {
  long double out = 1.0L;
  const long double t = std::numbers::pi_v<long double> / params.r();
  for (int k = 2; k <= n; ++k) out *= std::sin(k * t) / std::sin(t);
  return static_cast<double>(out);
}

double delta_n_at(int n, const RootParams& params) {
  const double q = quantum_int_at(n + 1, params);
  return (n % 2 == 0) ? q : -q;
}

std::complex<long double> power_of_a(long k, const RootParams& params) {
  const long period = 4L * params.r();
  long m = k % period;
  if (m < 0) m += period;
  const long double phase = static_cast<long double>(m) * params.angle();
  return {std::cos(phase), std::sin(phase)};
}

std::complex<double> eval_at_root(const LaurentPoly& p, const RootParams& params) {
  if (p.is_zero()) return {0.0, 0.0};
  const long half = 2L * params.r();  // A^(2r) = -1
  std::vector<mpz_class> buckets(static_cast<std::size_t>(half));
  for (const auto& [e, c] : p.terms()) {
    long m = e % (2 * half);
    if (m < 0) m += 2 * half;
    if (m >= half) {
      buckets[static_cast<std::size_t>(m - half)] -= c;
    } else {
      buckets[static_cast<std::size_t>(m)] += c;
    }
  }
  std::complex<long double> acc{0.0L, 0.0L};
  for (long m = 0; m < half; ++m) {
    const auto& c = buckets[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    acc += static_cast<long double>(c.get_d()) * power_of_a(m, params);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> eval_at_root(const RationalFunction& f, const RootParams& params) {
  const std::complex<double> den = eval_at_root(f.denominator(), params);
  if (std::abs(den) <= params.tol()) {
    throw DenominatorVanishes("denominator " + f.denominator().to_string() +
                              " vanishes at r=" + std::to_string(params.r()));
  }
  return eval_at_root(f.numerator(), params) / den;
}

}  // namespace tlrc
