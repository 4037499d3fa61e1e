#include "tlrc/braidrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "tlrc/admissibility.hpp"
#include "tlrc/errors.hpp"

namespace tlrc {

int FusionBasis::index_of(const std::vector<int>& path) const {
  auto it = std::lower_bound(paths.begin(), paths.end(), path);
  if (it == paths.end() || *it != path) return -1;
  return static_cast<int>(it - paths.begin());
}

namespace {

FusionBasis enumerate(int n, int ell, int t, const std::optional<RootParams>& params) {
  if (n < 1) throw std::invalid_argument("basis needs at least one strand");
  FusionBasis basis{n, ell, t, params, {}};
  if (ell < 0 || t < 0) return basis;
  if (n == 1) {
    if (t == ell && (!params || ell <= params->max_label())) basis.paths.emplace_back();
    return basis;
  }
  std::vector<int> path;
  auto rec = [&](auto&& self, int prev) -> void {
    if (static_cast<int>(path.size()) == n - 1) {
      if (path.back() == t) basis.paths.push_back(path);
      return;
    }
    for (int x : fusion_channels(prev, ell, params)) {
      path.push_back(x);
      self(self, x);
      path.pop_back();
    }
  };
  rec(rec, ell);
  return basis;  // channels ascend, so the paths come out lexicographic
}

}  // namespace

FusionBasis enumerate_basis(int n, int ell, int t, const RootParams& params) { return enumerate(n, ell, t, params); }

FusionBasis enumerate_basis_generic(int n, int ell, int t) { return enumerate(n, ell, t, std::nullopt); }

long count_paths(int n, int ell, int t, const std::optional<RootParams>& params) {
  if (n < 1 || ell < 0 || t < 0) return 0;
  const int top = n * ell + 1;
  std::vector<long> ways(static_cast<std::size_t>(top + 1), 0);
  if (params && ell > params->max_label()) return 0;
  ways[static_cast<std::size_t>(ell)] = 1;
  for (int step = 1; step < n; ++step) {
    std::vector<long> next(ways.size(), 0);
    for (int x = 0; x <= top; ++x) {
      if (ways[static_cast<std::size_t>(x)] == 0) continue;
      for (int y = 0; y <= top; ++y) {
        if (is_admissible(x, ell, y, params)) next[static_cast<std::size_t>(y)] += ways[static_cast<std::size_t>(x)];
      }
    }
    ways = std::move(next);
  }
  return t <= top ? ways[static_cast<std::size_t>(t)] : 0;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RationalFunction::from_int(1);
  return m;
}

RationalFunction ExactMatrix::trace() const {
  RationalFunction out;
  for (int i = 0; i < std::min(rows_, cols_); ++i) out += (*this)(i, i);
  return out;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols() != y.rows()) throw ShapeMismatch("exact matrix product shape mismatch");
  ExactMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j)
        if (!y(k, j).is_zero()) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

const FMatrixProvider& default_fmatrix_provider() {
  static const FMatrixProvider provider = [](int a, int b, int c, int d, const RootParams& p) {
    return fmatrix(a, b, c, d, p);
  };
  return provider;
}

namespace {

int position(const std::vector<int>& labels, int x) {
  auto it = std::find(labels.begin(), labels.end(), x);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

double entry(const RecouplingMatrix& m, int row_label, int col_label) {
  const int r = position(m.rows, row_label);
  const int c = position(m.cols, col_label);
  if (r < 0 || c < 0) return 0.0;
  return m.entries(r, c);
}

// Recoupling matrices for one sweep, filled on first use from any thread.
class FTable {
 public:
  FTable(const RootParams& params, const FMatrixProvider& provider) : params_(params), provider_(provider) {}

  const RecouplingMatrix& get(int a, int b, int c, int d) {
    return *memo_.get_or_compute({a, b, c, d}, [&] {
      return std::make_shared<const RecouplingMatrix>(provider_(a, b, c, d, params_));
    });
  }
  double f(int a, int b, int c, int d, int e, int f) { return entry(get(a, b, d, c), f, e); }
  const RootParams& params() const { return params_; }

 private:
  RootParams params_;
  const FMatrixProvider& provider_;
  ConcurrentMemo<std::array<int, 4>, std::shared_ptr<const RecouplingMatrix>> memo_;
};

std::complex<double> phase(int a, int b, int c, const RootParams& params, int sign) {
  const auto v = braid_phase(a, b, c, params).value;
  return sign > 0 ? v : std::conj(v);
}

LaurentPoly phase_exact(int a, int b, int c, int sign) {
  const LaurentPoly v = braid_phase_exact(a, b, c);
  return sign > 0 ? v : v.mirrored();
}

void check_generator(const FusionBasis& basis, int i) {
  if (i < 1 || i > basis.n - 1) {
    throw IndexOutOfRange("generator " + std::to_string(i) + " outside 1.." + std::to_string(basis.n - 1));
  }
}

// Labels around the x_{i-1} coordinate: (x_{i-2}, x_i), with x_0 = ell.
std::pair<int, int> window(const FusionBasis& basis, const std::vector<int>& path, int i) {
  const int left = i >= 3 ? path[static_cast<std::size_t>(i - 3)] : basis.ell;
  return {left, path[static_cast<std::size_t>(i - 1)]};
}

}  // namespace

double fmove(int a, int b, int c, int d, int e, int f, const RootParams& params, const FMatrixProvider& provider) {
  return entry(provider(a, b, d, c, params), f, e);
}

Eigen::MatrixXcd sigma_matrix(const FusionBasis& basis, int i, int sign, const FMatrixProvider& provider) {
  check_generator(basis, i);
  if (!basis.params) throw std::invalid_argument("numeric generator needs a root of unity");
  const RootParams& params = *basis.params;
  const int dim = basis.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const int ell = basis.ell;
  if (i == 1) {
    for (int p = 0; p < dim; ++p) out(p, p) = phase(ell, ell, basis.paths[static_cast<std::size_t>(p)][0], params, sign);
    return out;
  }
  std::map<std::pair<int, int>, RecouplingMatrix> cache;
  for (int p = 0; p < dim; ++p) {
    const auto& path = basis.paths[static_cast<std::size_t>(p)];
    const auto [x, tp] = window(basis, path, i);
    auto it = cache.find({x, tp});
    if (it == cache.end()) it = cache.emplace(std::pair{x, tp}, provider(x, ell, tp, ell, params)).first;
    const RecouplingMatrix& m = it->second;
    const int e = position(m.cols, path[static_cast<std::size_t>(i - 2)]);
    if (e < 0) continue;
    std::vector<int> target = path;
    for (std::size_t e2 = 0; e2 < m.cols.size(); ++e2) {
      target[static_cast<std::size_t>(i - 2)] = m.cols[e2];
      const int q = basis.index_of(target);
      if (q < 0) continue;
      std::complex<double> acc = 0.0;
      for (std::size_t f = 0; f < m.rows.size(); ++f) {
        acc += m.entries(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(e2)) *
               phase(ell, ell, m.rows[f], params, sign) * m.entries(static_cast<Eigen::Index>(f), e);
      }
      out(q, p) = acc;
    }
  }
  return out;
}

ExactMatrix sigma_matrix_exact(const FusionBasis& basis, int i, int sign) {
  check_generator(basis, i);
  if (basis.params) throw std::invalid_argument("exact generator needs a generic basis");
  const int dim = basis.size();
  const int ell = basis.ell;
  ExactMatrix out(dim, dim);
  if (i == 1) {
    for (int p = 0; p < dim; ++p) out(p, p) = phase_exact(ell, ell, basis.paths[static_cast<std::size_t>(p)][0], sign);
    return out;
  }
  for (int p = 0; p < dim; ++p) {
    const auto& path = basis.paths[static_cast<std::size_t>(p)];
    const auto [x, tp] = window(basis, path, i);
    const int e = path[static_cast<std::size_t>(i - 2)];
    std::vector<int> right;  // f with (l,l,f) and (x,tp,f)
    for (int f : fusion_channels(ell, ell))
      if (is_admissible(x, tp, f)) right.push_back(f);
    std::vector<int> target = path;
    for (int e2 : fusion_channels(x, ell)) {
      if (!is_admissible(tp, ell, e2)) continue;
      target[static_cast<std::size_t>(i - 2)] = e2;
      const int q = basis.index_of(target);
      if (q < 0) continue;
      std::vector<RationalFunction> terms;
      for (int f : right) {
        terms.push_back(sixj(x, ell, f, tp, ell, e2) * RationalFunction(phase_exact(ell, ell, f, sign)) *
                        sixj(ell, ell, e, x, tp, f));
      }
      out(q, p) = RationalFunction::sum(terms);
    }
  }
  return out;
}

namespace {

void check_word(const FusionBasis& basis, const BraidWord& word) {
  if (word.strands != basis.n) {
    throw ShapeMismatch("word on " + std::to_string(word.strands) + " strands, basis on " + std::to_string(basis.n));
  }
  word.validate();
}

}  // namespace

Eigen::MatrixXcd compile_braid(const FusionBasis& basis, const BraidWord& word, const FMatrixProvider& provider) {
  check_word(basis, word);
  std::map<int, Eigen::MatrixXcd> gens;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(basis.size(), basis.size());
  for (int letter : word.letters) {
    auto it = gens.find(letter);
    if (it == gens.end()) {
      it = gens.emplace(letter, sigma_matrix(basis, std::abs(letter), letter > 0 ? 1 : -1, provider)).first;
    }
    u = it->second * u;
  }
  return u;
}

ExactMatrix compile_braid_exact(const FusionBasis& basis, const BraidWord& word) {
  check_word(basis, word);
  std::map<int, ExactMatrix> gens;
  ExactMatrix u = ExactMatrix::identity(basis.size());
  for (int letter : word.letters) {
    auto it = gens.find(letter);
    if (it == gens.end()) {
      it = gens.emplace(letter, sigma_matrix_exact(basis, std::abs(letter), letter > 0 ? 1 : -1)).first;
    }
    u = it->second * u;
  }
  return u;
}

double check_unitarity(const Eigen::MatrixXcd& u) {
  if (u.size() == 0) return 0.0;
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

RationalFunction closure_invariant_via_trace(const BraidWord& word) {
  word.validate();
  std::vector<RationalFunction> parts;
  for (int t = word.strands % 2; t <= word.strands; t += 2) {
    const FusionBasis basis = enumerate_basis_generic(word.strands, 1, t);
    if (basis.size() == 0) continue;
    parts.push_back(RationalFunction(delta_n(t)) * compile_braid_exact(basis, word).trace());
  }
  return RationalFunction::sum(parts);
}

std::complex<double> closure_invariant_via_trace(const BraidWord& word, const RootParams& params) {
  word.validate();
  std::complex<double> out = 0.0;
  for (int t = word.strands % 2; t <= std::min(word.strands, params.max_label()); t += 2) {
    const FusionBasis basis = enumerate_basis(word.strands, 1, t, params);
    if (basis.size() == 0) continue;
    out += delta_n_at(t, params) * compile_braid(basis, word).trace();
  }
  return out;
}

double CheckReport::max_deviation() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.deviation);
  return m;
}

std::vector<CheckEntry> CheckReport::violations(double tol) const {
  std::vector<CheckEntry> out;
  for (const auto& e : entries)
    if (!(e.deviation < tol)) out.push_back(e);
  return out;
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

namespace {

int label_cap(const RootParams& params, std::optional<int> max_label) {
  return max_label ? std::min(*max_label, params.max_label()) : params.max_label();
}

// Runs body(k) for k in [0, count) and concatenates the per-k reports in index order.
template <class Body>
CheckReport gather(long count, Exec exec, Body body) {
  std::vector<CheckReport> parts(static_cast<std::size_t>(count));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) parts[static_cast<std::size_t>(k)] = body(k);
  } else {
    for (long k = 0; k < count; ++k) parts[static_cast<std::size_t>(k)] = body(k);
  }
  CheckReport out;
  for (const auto& p : parts) out.append(p);
  return out;
}

std::array<int, 4> unpack4(long k, int base) {
  std::array<int, 4> v{};
  for (int s = 3; s >= 0; --s) {
    v[static_cast<std::size_t>(s)] = static_cast<int>(k % base);
    k /= base;
  }
  return v;
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

}  // namespace

CheckReport orthogonality_check(const RootParams& params, std::optional<int> max_label,
                                const FMatrixProvider& provider, Exec exec) {
  const int base = label_cap(params, max_label) + 1;
  const long count = static_cast<long>(base) * base * base * base;
  return gather(count, exec, [&](long k) {
    CheckReport rep;
    const auto [a, b, c, d] = unpack4(k, base);
    const RecouplingMatrix m = provider(a, b, c, d, params);
    if (m.empty()) return rep;
    const std::vector<int> labels{params.r(), a, b, c, d};
    const auto n = m.entries.rows();
    double dev = max_abs(m.entries * m.entries.transpose() - Eigen::MatrixXd::Identity(n, n));
    if (m.entries.rows() != m.entries.cols()) dev = std::max(dev, 1.0);
    rep.entries.push_back({"orthogonality", labels, dev});
    rep.entries.push_back({"imaginary", labels, m.max_imag});
    return rep;
  });
}

CheckReport inverse_check(const RootParams& params, std::optional<int> max_label, const FMatrixProvider& provider,
                          Exec exec) {
  const int base = label_cap(params, max_label) + 1;
  const long count = static_cast<long>(base) * base * base * base;
  return gather(count, exec, [&](long k) {
    CheckReport rep;
    const auto [a, b, c, d] = unpack4(k, base);
    const RecouplingMatrix m = provider(a, b, c, d, params);
    if (m.empty()) return rep;
    const auto inv = fmatrix_inverse_labels(a, b, c, d);
    const RecouplingMatrix w = provider(inv[0], inv[1], inv[2], inv[3], params);
    const std::vector<int> labels{params.r(), a, b, c, d};
    if (w.rows != m.cols || w.cols != m.rows) {
      rep.entries.push_back({"inverse", labels, 1.0});
      rep.entries.push_back({"transpose", labels, 1.0});
      return rep;
    }
    const auto n = m.entries.rows();
    rep.entries.push_back({"inverse", labels, max_abs(m.entries * w.entries - Eigen::MatrixXd::Identity(n, n))});
    rep.entries.push_back({"transpose", labels, max_abs(m.entries.transpose() - w.entries)});
    return rep;
  });
}

CheckReport check_braid_relations(int n, int ell, int t, const RootParams& params, const FMatrixProvider& provider) {
  CheckReport rep;
  const FusionBasis basis = enumerate_basis(n, ell, t, params);
  if (basis.size() == 0) return rep;
  std::vector<Eigen::MatrixXcd> s(static_cast<std::size_t>(n));
  const auto id = Eigen::MatrixXcd::Identity(basis.size(), basis.size());
  for (int i = 1; i < n; ++i) {
    s[static_cast<std::size_t>(i)] = sigma_matrix(basis, i, +1, provider);
    const Eigen::MatrixXcd inv = sigma_matrix(basis, i, -1, provider);
    rep.entries.push_back({"unitarity", {params.r(), n, ell, t, i}, check_unitarity(s[static_cast<std::size_t>(i)])});
    rep.entries.push_back({"inverse", {params.r(), n, ell, t, i}, max_abs(s[static_cast<std::size_t>(i)] * inv - id)});
  }
  for (int i = 1; i + 1 < n; ++i) {
    const auto& x = s[static_cast<std::size_t>(i)];
    const auto& y = s[static_cast<std::size_t>(i + 1)];
    rep.entries.push_back({"braid", {params.r(), n, ell, t, i}, max_abs(x * y * x - y * x * y)});
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      const auto& x = s[static_cast<std::size_t>(i)];
      const auto& y = s[static_cast<std::size_t>(j)];
      rep.entries.push_back({"far-commutation", {params.r(), n, ell, t, i, j}, max_abs(x * y - y * x)});
    }
  return rep;
}

CheckReport braid_sweep(const RootParams& params, int max_strands, int max_label, const FMatrixProvider& provider,
                        Exec exec) {
  std::vector<std::array<int, 3>> jobs;
  for (int n = 3; n <= max_strands; ++n)
    for (int ell = 1; ell <= std::min(max_label, params.max_label()); ++ell)
      for (int t = 0; t <= n * ell; ++t)
        if (count_paths(n, ell, t, params) > 0) jobs.push_back({n, ell, t});
  return gather(static_cast<long>(jobs.size()), exec, [&](long k) {
    const auto [n, ell, t] = jobs[static_cast<std::size_t>(k)];
    return check_braid_relations(n, ell, t, params, provider);
  });
}

CheckReport pentagon_check(const RootParams& params, std::optional<int> max_label, const FMatrixProvider& provider,
                           Exec exec) {
  const int base = label_cap(params, max_label) + 1;
  const long count = static_cast<long>(base) * base * base * base;
  FTable table(params, provider);
  return gather(count, exec, [&](long k) {
    CheckReport rep;
    const auto [a, b, c, d] = unpack4(k, base);
    for (int e = 0; e < base; ++e) {
      double dev = 0.0;
      bool any = false;
      for (int p : fusion_channels(a, b, params))
        for (int q : fusion_channels(p, c, params)) {
          if (!is_admissible(q, d, e, params)) continue;
          for (int s : fusion_channels(c, d, params))
            for (int t : fusion_channels(b, s, params)) {
              if (!is_admissible(a, t, e, params)) continue;
              any = true;
              const double lhs = table.f(p, c, d, e, q, s) * table.f(a, b, s, e, p, t);
              double rhs = 0.0;
              for (int u : fusion_channels(b, c, params)) {
                if (!is_admissible(a, u, q, params) || !is_admissible(u, d, t, params)) continue;
                rhs += table.f(a, b, c, q, p, u) * table.f(a, u, d, e, q, t) * table.f(b, c, d, t, u, s);
              }
              dev = std::max(dev, std::abs(lhs - rhs));
            }
        }
      if (any) rep.entries.push_back({"pentagon", {params.r(), a, b, c, d, e}, dev});
    }
    return rep;
  });
}

CheckReport hexagon_check(const RootParams& params, std::optional<int> max_label, const FMatrixProvider& provider,
                          Exec exec) {
  const int base = label_cap(params, max_label) + 1;
  const long count = static_cast<long>(base) * base * base * base;
  FTable table(params, provider);
  return gather(count, exec, [&](long k) {
    CheckReport rep;
    const auto [a, b, c, d] = unpack4(k, base);
    for (int sign : {+1, -1}) {
      double dev = 0.0;
      bool any = false;
      for (int e : fusion_channels(c, a, params)) {
        if (!is_admissible(e, b, d, params)) continue;
        for (int g : fusion_channels(c, b, params)) {
          if (!is_admissible(a, g, d, params)) continue;
          any = true;
          const std::complex<double> lhs =
              phase(c, a, e, params, sign) * table.f(a, c, b, d, e, g) * phase(c, b, g, params, sign);
          std::complex<double> rhs = 0.0;
          for (int f : fusion_channels(a, b, params)) {
            if (!is_admissible(c, f, d, params)) continue;
            rhs += table.f(c, a, b, d, e, f) * phase(c, f, d, params, sign) * table.f(a, b, c, d, f, g);
          }
          dev = std::max(dev, std::abs(lhs - rhs));
        }
      }
      if (any) rep.entries.push_back({sign > 0 ? "hexagon" : "hexagon-mirror", {params.r(), a, b, c, d}, dev});
    }
    return rep;
  });
}

}  // namespace tlrc
