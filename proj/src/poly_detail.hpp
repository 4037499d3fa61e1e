#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

// Dense univariate integer polynomials, ascending degree, trimmed at the top.
namespace tlrc::detail {

using DensePoly = std::vector<mpz_class>;

void trim_high(DensePoly& p);
mpz_class content(const DensePoly& p);
/// Divides out the content and makes the leading coefficient positive.
DensePoly primitive_part(const DensePoly& p);
DensePoly pseudo_remainder(DensePoly r, const DensePoly& g);
/// Content times primitive gcd, leading coefficient positive.
DensePoly gcd(const DensePoly& f, const DensePoly& g);
std::optional<DensePoly> divide_exact(const DensePoly& num, const DensePoly& den);
DensePoly multiply(const DensePoly& a, const DensePoly& b);

}  // namespace tlrc::detail
