#include "tlrc/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "tlrc/errors.hpp"
#include "tlrc/exec.hpp"

namespace tlrc {

namespace {

using Cx = std::complex<long double>;
using Labels6 = std::array<int, 6>;

bool odd(int k) { return (k & 1) != 0; }

// Quantum factorials over the two rings.
struct ExactRing {
  using T = RationalFunction;
  T fact(int n) const { return {quantum_fact(n)}; }
};

struct RootRing {
  using T = Cx;
  explicit RootRing(const RootParams& p) : params(p) {
    const Cx a2 = power_of_a(2, p);
    den = a2 - Cx(1) / a2;
  }
  T qint(int n) const { return (power_of_a(2L * n, params) - power_of_a(-2L * n, params)) / den; }
  T fact(int n) const {
    T out(1);
    for (int k = 2; k <= n; ++k) out *= qint(k);
    return out;
  }
  const RootParams& params;
  Cx den;
};

template <class Ring>
typename Ring::T theta_formula(const Ring& ring, int a, int b, int c) {
  const int m = (a + b - c) / 2;
  const int n = (b + c - a) / 2;
  const int p = (c + a - b) / 2;
  typename Ring::T num = ring.fact(m + n + p + 1) * ring.fact(m) * ring.fact(n) * ring.fact(p);
  typename Ring::T out = num / (ring.fact(m + n) * ring.fact(n + p) * ring.fact(p + m));
  return odd(m + n + p) ? -out : out;
}

template <class Ring>
typename Ring::T tet_formula(const Ring& ring, int a, int b, int i, int c, int d, int j) {
  const std::array<int, 4> vs{(a + c + i) / 2, (b + d + i) / 2, (a + b + j) / 2, (c + d + j) / 2};
  const std::array<int, 3> fs{(a + b + c + d) / 2, (a + d + i + j) / 2, (b + c + i + j) / 2};
  using T = typename Ring::T;
  T pre = ring.fact(0);
  for (int v : vs)
    for (int f : fs) pre = pre * ring.fact(f - v);
  pre = pre / (ring.fact(a) * ring.fact(b) * ring.fact(c) * ring.fact(d) * ring.fact(i) * ring.fact(j));

  const int lo = *std::max_element(vs.begin(), vs.end());
  const int hi = *std::min_element(fs.begin(), fs.end());
  T sum{};
  for (int s = lo; s <= hi; ++s) {
    T den = ring.fact(0);
    for (int v : vs) den = den * ring.fact(s - v);
    for (int f : fs) den = den * ring.fact(f - s);
    T term = ring.fact(s + 1) / den;
    if (odd(s)) term = -term;
    sum = sum + term;
  }
  return pre * sum;
}

std::string fmt_labels(std::initializer_list<int> ls) {
  std::string s = "(";
  for (int x : ls) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

void require_tet(int a, int b, int i, int c, int d, int j, const std::optional<RootParams>& params) {
  if (!is_admissible(a, c, i, params) || !is_admissible(b, d, i, params) ||
      !is_admissible(a, b, j, params) || !is_admissible(c, d, j, params)) {
    throw NotAdmissible("tetrahedron " + fmt_labels({a, b, i, c, d, j}) + " has a non-admissible vertex");
  }
}

ConcurrentMemo<std::array<int, 3>, RationalFunction>& theta_memo() {
  static ConcurrentMemo<std::array<int, 3>, RationalFunction> memo;
  return memo;
}

ConcurrentMemo<Labels6, RationalFunction>& tet_memo() {
  static ConcurrentMemo<Labels6, RationalFunction> memo;
  return memo;
}

ConcurrentMemo<std::pair<int, Labels6>, Cx>& tet_root_memo() {
  static ConcurrentMemo<std::pair<int, Labels6>, Cx> memo;
  return memo;
}

Cx theta_root(int a, int b, int c, const RootParams& params) {
  return theta_formula(RootRing(params), a, b, c);
}

Cx tet_root(int a, int b, int i, int c, int d, int j, const RootParams& params) {
  return tet_root_memo().get_or_compute({params.r(), {a, b, i, c, d, j}}, [&] {
    return tet_formula(RootRing(params), a, b, i, c, d, j);
  });
}

double sign_of(int k) { return odd(k) ? -1.0 : 1.0; }

}  // namespace

RationalFunction theta_closed(int a, int b, int c) {
  require_admissible(a, b, c);
  return theta_memo().get_or_compute({a, b, c}, [&] { return theta_formula(ExactRing{}, a, b, c); });
}

std::complex<double> theta_at(int a, int b, int c, const RootParams& params) {
  require_admissible(a, b, c);
  const Cx v = theta_root(a, b, c, params);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

RationalFunction tet_closed(int a, int b, int i, int c, int d, int j) {
  require_tet(a, b, i, c, d, j, std::nullopt);
  return tet_memo().get_or_compute({a, b, i, c, d, j},
                                   [&] { return tet_formula(ExactRing{}, a, b, i, c, d, j); });
}

std::complex<double> tet_at(int a, int b, int i, int c, int d, int j, const RootParams& params) {
  require_tet(a, b, i, c, d, j, std::nullopt);
  const Cx v = tet_root(a, b, i, c, d, j, params);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

RationalFunction sixj(int a, int b, int i, int c, int d, int k) {
  require_tet(a, b, i, c, d, k, std::nullopt);
  return tet_closed(a, b, i, c, d, k) * RationalFunction(delta_n(k)) /
         (theta_closed(a, b, k) * theta_closed(c, d, k));
}

std::complex<double> sixj_at(int a, int b, int i, int c, int d, int k, const RootParams& params) {
  require_tet(a, b, i, c, d, k, std::nullopt);
  const Cx t1 = theta_root(a, b, k, params);
  const Cx t2 = theta_root(c, d, k, params);
  if (std::abs(t1) <= params.tol() || std::abs(t2) <= params.tol()) {
    throw ThetaVanishes("theta vanishes for sixj " + fmt_labels({a, b, i, c, d, k}) + " at r=" +
                        std::to_string(params.r()));
  }
  const Cx v = tet_root(a, b, i, c, d, k, params) * static_cast<long double>(delta_n_at(k, params)) / (t1 * t2);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double vertex_factor(int a, int b, int c, const RootParams& params) {
  require_admissible(a, b, c, params);
  const long double hat = sign_of((a + b + c) / 2) * theta_root(a, b, c, params).real();
  if (hat <= params.tol()) {
    throw ThetaVanishes("theta " + fmt_labels({a, b, c}) + " is not positive after sign resolution");
  }
  const long double q = static_cast<long double>(quantum_int_at(a + 1, params)) *
                        quantum_int_at(b + 1, params) * quantum_int_at(c + 1, params);
  return static_cast<double>(std::sqrt(std::sqrt(q) / hat));
}

double bubble_coeff(int a, int b, int c, const RootParams& params) {
  require_admissible(a, b, c, params);
  const double mag = std::sqrt(quantum_int_at(b + 1, params) * quantum_int_at(c + 1, params) /
                               quantum_int_at(a + 1, params));
  return sign_of((b + c - a) / 2) * mag;
}

std::vector<int> fmatrix_row_labels(int a, int b, int c, int d, const RootParams& params) {
  std::vector<int> out;
  for (int i : fusion_channels(a, c, params))
    if (is_admissible(b, d, i, params)) out.push_back(i);
  return out;
}

std::vector<int> fmatrix_col_labels(int a, int b, int c, int d, const RootParams& params) {
  std::vector<int> out;
  for (int j : fusion_channels(a, b, params))
    if (is_admissible(c, d, j, params)) out.push_back(j);
  return out;
}

double fmatrix_denominator(int a, int b, int c, int d, const RootParams& params) {
  const double q = quantum_int_at(a + 1, params) * quantum_int_at(b + 1, params) *
                   quantum_int_at(c + 1, params) * quantum_int_at(d + 1, params);
  return sign_of((a + b + c + d) / 2) * std::sqrt(q);
}

double fmatrix_denominator_product(int a, int b, int c, int d, int j, const RootParams& params) {
  return bubble_coeff(j, a, b, params) * bubble_coeff(j, c, d, params) * delta_n_at(j, params);
}

RecouplingMatrix fmatrix(int a, int b, int c, int d, const RootParams& params) {
  for (int x : {a, b, c, d}) {
    if (x < 0 || x > params.max_label()) {
      throw NotAdmissible("outer label " + std::to_string(x) + " outside 0.." +
                          std::to_string(params.max_label()) + " at r=" + std::to_string(params.r()));
    }
  }
  RecouplingMatrix m;
  m.outer = {a, b, c, d};
  m.r = params.r();
  m.rows = fmatrix_row_labels(a, b, c, d, params);
  m.cols = fmatrix_col_labels(a, b, c, d, params);
  if (m.empty()) {
    m.rows.clear();
    m.cols.clear();
    m.entries.resize(0, 0);
    return m;
  }
  const long double den = fmatrix_denominator(a, b, c, d, params);
  m.entries.resize(static_cast<Eigen::Index>(m.rows.size()), static_cast<Eigen::Index>(m.cols.size()));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const int i = m.rows[r];
    const long double fi = static_cast<long double>(vertex_factor(a, c, i, params)) * vertex_factor(b, d, i, params);
    for (std::size_t s = 0; s < m.cols.size(); ++s) {
      const int j = m.cols[s];
      const long double fj = static_cast<long double>(vertex_factor(a, b, j, params)) * vertex_factor(c, d, j, params);
      const Cx v = tet_root(a, b, i, c, d, j, params) * (fi * fj / den);
      m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = static_cast<double>(v.real());
      m.max_imag = std::max(m.max_imag, static_cast<double>(std::abs(v.imag())));
    }
  }
  return m;
}

std::array<int, 4> fmatrix_inverse_labels(int a, int b, int c, int d) { return {b, d, a, c}; }

namespace {

int phase_exponent(int a, int b, int c) { return (a * (a + 2) + b * (b + 2) - c * (c + 2)) / 2; }

}  // namespace

BraidPhase braid_phase(int a, int b, int c, const RootParams& params) {
  require_admissible(a, b, c, params);
  const Cx v = power_of_a(phase_exponent(a, b, c), params) * static_cast<long double>(sign_of((a + b - c) / 2));
  return {a, b, c, {static_cast<double>(v.real()), static_cast<double>(v.imag())}};
}

LaurentPoly braid_phase_exact(int a, int b, int c) {
  require_admissible(a, b, c);
  return LaurentPoly::monomial(phase_exponent(a, b, c), odd((a + b - c) / 2) ? -1 : 1);
}

RMatrix rmatrix(int a, int b, const RootParams& params) {
  RMatrix out;
  out.a = a;
  out.b = b;
  out.labels = fusion_channels(a, b, params);
  const auto n = static_cast<Eigen::Index>(out.labels.size());
  out.entries = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.entries(k, k) = braid_phase(a, b, out.labels[static_cast<std::size_t>(k)], params).value;
  }
  return out;
}

RMatrixExact rmatrix_exact(int a, int b) {
  RMatrixExact out;
  out.a = a;
  out.b = b;
  out.labels = fusion_channels(a, b);
  for (int c : out.labels) out.diagonal.push_back(braid_phase_exact(a, b, c));
  return out;
}

}  // namespace tlrc
