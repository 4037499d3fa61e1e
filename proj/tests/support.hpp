#pragma once

#include <random>

#include "tlrc/laurent.hpp"
#include "tlrc/rational.hpp"

namespace tlrc::testing {

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 4, int span = 6, int coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(-span, span), c(-coeff, coeff);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) terms.emplace_back(exp(rng), c(rng));
  return LaurentPoly::from_terms(terms);
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, int max_terms = 4, int span = 6, int coeff = 5) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms, span, coeff);
    if (!p.is_zero()) return p;
  }
}

inline RationalFunction random_rational(std::mt19937& rng) {
  return {random_poly(rng, 3, 4, 4), random_nonzero_poly(rng, 3, 4, 4)};
}

inline LaurentPoly A(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace tlrc::testing
