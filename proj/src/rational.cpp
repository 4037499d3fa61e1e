#include "tlrc/rational.hpp"

#include <algorithm>
#include <vector>

#include "poly_detail.hpp"
#include "tlrc/errors.hpp"

namespace tlrc {

namespace {

// Moves the monomial unit onto the numerator and fixes the sign so that the
// denominator starts at A^0 with a positive coefficient. No gcd work.
void normalize_units(LaurentPoly& num, LaurentPoly& den) {
  const int shift = den.low_exponent();
  num = num.shifted(-shift);
  den = den.shifted(-shift);
  if (den.low_coefficient() < 0) {
    num = -num;
    den = -den;
  }
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("RationalFunction: inexact division by a gcd");
  return *q;
}

}  // namespace

RationalFunction::RationalFunction(LaurentPoly p)
    : num_(std::move(p)), den_(LaurentPoly::constant(1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  if (den_.is_monomial()) {
    // Only an integer content can be shared.
    mpz_class g;
    const mpz_class c = num_.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.low_coefficient().get_mpz_t());
    if (g != 1) {
      std::vector<mpz_class> n = num_.dense();
      for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      mpz_class d = den_.low_coefficient() / g;
      num_ = LaurentPoly::from_dense(num_.low_exponent(), std::move(n));
      den_ = LaurentPoly::monomial(den_.low_exponent(), d);
    }
    normalize_units(num_, den_);
    return;
  }
  const detail::DensePoly g = detail::gcd(num_.dense(), den_.dense());
  if (!(g.size() == 1 && g[0] == 1)) {
    const LaurentPoly gp = LaurentPoly::from_dense(0, g);
    num_ = exact_quotient(num_, gp);
    den_ = exact_quotient(den_, gp);
  }
  normalize_units(num_, den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RationalFunction out(Raw{}, den_, num_);
  normalize_units(out.num_, out.den_);
  return out;
}

RationalFunction RationalFunction::mirrored() const {
  return {num_.mirrored(), den_.mirrored()};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly::constant(1);
    return *this;
  }
  const LaurentPoly g = gcd(den_, rhs.den_);
  const LaurentPoly lhs_cof = exact_quotient(rhs.den_, g);
  const LaurentPoly rhs_cof = exact_quotient(den_, g);
  num_ = num_ * lhs_cof + rhs.num_ * rhs_cof;
  den_ = den_ * lhs_cof;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction{};
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel; inputs are canonical so the product is reduced.
  LaurentPoly a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  if (!d.is_one()) {
    const LaurentPoly g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = exact_quotient(a, g1);
      d = exact_quotient(d, g1);
    }
  }
  if (!b.is_one()) {
    const LaurentPoly g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = exact_quotient(c, g2);
      b = exact_quotient(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_units(num_, den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(RationalFunction::Raw{}, -a.num_, a.den_);
}

RationalFunction RationalFunction::sum(std::span<const RationalFunction> terms) {
  std::vector<std::pair<LaurentPoly, LaurentPoly>> groups;  // (den, summed numerator)
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == t.den_; });
    if (it == groups.end()) {
      groups.emplace_back(t.den_, t.num_);
    } else {
      it->second += t.num_;
    }
  }
  RationalFunction total;
  for (auto& [den, num] : groups) total += RationalFunction(std::move(num), std::move(den));
  return total;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tlrc
