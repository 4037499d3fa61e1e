#include "tlrc/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "poly_detail.hpp"

namespace tlrc {

namespace detail {

void trim_high(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const DensePoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

DensePoly primitive_part(const DensePoly& p) {
  DensePoly out = p;
  const mpz_class c = content(p);
  if (c == 0) return {};
  if (c != 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  if (out.back() < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

DensePoly pseudo_remainder(DensePoly r, const DensePoly& g) {
  const std::size_t dg = g.size() - 1;
  const mpz_class& lc = g.back();
  while (!r.empty() && r.size() - 1 >= dg) {
    const mpz_class top = r.back();
    const std::size_t shift = r.size() - 1 - dg;
    for (auto& x : r) x *= lc;
    for (std::size_t k = 0; k <= dg; ++k) r[shift + k] -= top * g[k];
    trim_high(r);
  }
  return r;
}

DensePoly gcd(const DensePoly& f, const DensePoly& g) {
  if (f.empty() || g.empty()) {
    DensePoly out = f.empty() ? g : f;
    if (!out.empty() && out.back() < 0)
      for (auto& x : out) x = -x;
    return out;
  }

  mpz_class c;
  const mpz_class cf = content(f);
  const mpz_class cg = content(g);
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());

  DensePoly a = primitive_part(f);
  DensePoly b = primitive_part(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = {mpz_class(1)};
      break;
    }
    DensePoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& x : a) x *= c;
  return a;
}

std::optional<DensePoly> divide_exact(const DensePoly& num, const DensePoly& den) {
  if (den.empty()) return std::nullopt;
  if (num.empty()) return DensePoly{};
  if (num.size() < den.size()) return std::nullopt;
  DensePoly r = num;
  const std::size_t dd = den.size() - 1;
  DensePoly q(num.size() - dd);
  const mpz_class& lc = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= q[k] * den[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  trim_high(q);
  return q;
}

DensePoly multiply(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace detail

LaurentPoly LaurentPoly::constant(const Coeff& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, const Coeff& c) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<Term>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Coeff> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  detail::trim_high(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0);
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

bool LaurentPoly::is_monomial() const { return coeffs_.size() == 1; }

int LaurentPoly::high_exponent() const {
  return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
}

LaurentPoly::Coeff LaurentPoly::coefficient(int exponent) const {
  const long k = static_cast<long>(exponent) - low_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const LaurentPoly::Coeff& LaurentPoly::low_coefficient() const {
  static const Coeff zero = 0;
  return coeffs_.empty() ? zero : coeffs_.front();
}

const LaurentPoly::Coeff& LaurentPoly::high_coefficient() const {
  static const Coeff zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.coeffs_.empty()) p.low_ += by;
  return p;
}

LaurentPoly LaurentPoly::mirrored() const {
  if (coeffs_.empty()) return {};
  LaurentPoly p;
  p.low_ = -high_exponent();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly::Coeff LaurentPoly::content() const { return detail::content(coeffs_); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_exponent(), rhs.high_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Coeff(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + k] += rhs.coeffs_[k];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Coeff& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  LaurentPoly p;
  p.low_ = lhs.low_ + rhs.low_;
  p.coeffs_ = detail::multiply(lhs.coeffs_, rhs.coeffs_);
  p.trim();
  return p;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out = p;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return lhs.low_ == rhs.low_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Coeff& c = coeffs_[k];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(k);
    Coeff mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return LaurentPoly{};
  auto q = detail::divide_exact(num.dense(), den.dense());
  if (!q) return std::nullopt;
  return LaurentPoly::from_dense(num.low_exponent() - den.low_exponent(), std::move(*q));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  detail::DensePoly g = detail::gcd(a.dense(), b.dense());
  LaurentPoly out = LaurentPoly::from_dense(0, std::move(g));
  out = out.shifted(-out.low_exponent());
  if (out.low_coefficient() < 0) out = -out;
  return out;
}

}  // namespace tlrc
