#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlrc/braid_word.hpp"
#include "tlrc/exec.hpp"
#include "tlrc/rational.hpp"
#include "tlrc/recoupling.hpp"
#include "tlrc/scalar.hpp"

namespace tlrc {

/// Left-comb fusion paths (((l l)_{x1} l)_{x2} ... l)_{x_{n-1}} with x_{n-1} = t.
/// `params` empty means generic A (no level cutoff).
struct FusionBasis {
  int n = 1;
  int ell = 0;
  int t = 0;
  std::optional<RootParams> params;
  std::vector<std::vector<int>> paths;  // internals x1..x_{n-1}, lexicographic

  [[nodiscard]] int size() const { return static_cast<int>(paths.size()); }
  /// Position of `path`, or -1.
  [[nodiscard]] int index_of(const std::vector<int>& path) const;
};

FusionBasis enumerate_basis(int n, int ell, int t, const RootParams& params);
FusionBasis enumerate_basis_generic(int n, int ell, int t);

/// Path count by dynamic programming over labels, independent of enumerate_basis.
long count_paths(int n, int ell, int t, const std::optional<RootParams>& params);

/// Dense matrix over rational functions.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static ExactMatrix identity(int n);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  RationalFunction& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const RationalFunction& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  [[nodiscard]] RationalFunction trace() const;

  /// Throws ShapeMismatch.
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<RationalFunction> data_;
};

/// Source of recoupling matrices; swapped out by tests to calibrate the checks.
using FMatrixProvider = std::function<RecouplingMatrix(int, int, int, int, const RootParams&)>;
const FMatrixProvider& default_fmatrix_provider();

/// F^{abc}_d[e,f]: the coefficient of (a(bc)_f)_d in ((ab)_e c)_d, read from M[a,b,d,c].
/// Zero when e or f is not an admissible internal label.
double fmove(int a, int b, int c, int d, int e, int f, const RootParams& params,
             const FMatrixProvider& provider = default_fmatrix_provider());

/// Braid generator sigma_i^sign on the basis, 1 <= i <= n-1. Throws
/// IndexOutOfRange; std::invalid_argument for a generic basis.
/// Generator 1 is diag(lambda_{x1}^{ll}); generator i >= 2 is M^T diag(lambda_f^{ll}) M on the
/// x_{i-1} coordinate with M = M[x_{i-2}, l, x_i, l] and x_0 = l.
Eigen::MatrixXcd sigma_matrix(const FusionBasis& basis, int i, int sign = +1,
                              const FMatrixProvider& provider = default_fmatrix_provider());
/// Exact counterpart over a generic basis, through unnormalized 6j symbols.
ExactMatrix sigma_matrix_exact(const FusionBasis& basis, int i, int sign = +1);

/// Product of generators; the first letter is applied first (rightmost factor).
/// Throws ShapeMismatch if the word's strand count differs from the basis, IndexOutOfRange for a bad letter.
Eigen::MatrixXcd compile_braid(const FusionBasis& basis, const BraidWord& word,
                               const FMatrixProvider& provider = default_fmatrix_provider());
ExactMatrix compile_braid_exact(const FusionBasis& basis, const BraidWord& word);

/// max |(U^* U - I)_{ij}|.
double check_unitarity(const Eigen::MatrixXcd& u);

/// sum_t Delta_t Tr rho_t(word) over totals t, strand label 1. The empty word on n strands gives d^n.
RationalFunction closure_invariant_via_trace(const BraidWord& word);
std::complex<double> closure_invariant_via_trace(const BraidWord& word, const RootParams& params);

struct CheckEntry {
  std::string check;
  std::vector<int> labels;
  double deviation = 0.0;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  [[nodiscard]] double max_deviation() const;
  [[nodiscard]] std::vector<CheckEntry> violations(double tol) const;
  void append(const CheckReport& other);
};

/// M M^T = I per outer labels (labels <= max_label, default r-2), plus an
/// "imaginary" entry per matrix with the largest discarded imaginary part.
CheckReport orthogonality_check(const RootParams& params, std::optional<int> max_label = std::nullopt,
                                const FMatrixProvider& provider = default_fmatrix_provider(),
                                Exec exec = Exec::parallel);
/// M[a,b,c,d] M[b,d,a,c] = I ("inverse") and M^T = M[b,d,a,c] ("transpose").
CheckReport inverse_check(const RootParams& params, std::optional<int> max_label = std::nullopt,
                          const FMatrixProvider& provider = default_fmatrix_provider(),
                          Exec exec = Exec::parallel);

/// Braid relations, far commutation and sigma sigma^-1 = I on one basis.
CheckReport check_braid_relations(int n, int ell, int t, const RootParams& params,
                                  const FMatrixProvider& provider = default_fmatrix_provider());
/// check_braid_relations over every n in 3..max_strands, ell in 1..max_label and total t.
CheckReport braid_sweep(const RootParams& params, int max_strands, int max_label,
                        const FMatrixProvider& provider = default_fmatrix_provider(),
                        Exec exec = Exec::parallel);

/// Two-move versus three-move route from (((ab)c)d) to (a(b(cd))), per (a,b,c,d,e).
CheckReport pentagon_check(const RootParams& params, std::optional<int> max_label = std::nullopt,
                           const FMatrixProvider& provider = default_fmatrix_provider(),
                           Exec exec = Exec::parallel);
/// Both hexagon orientations ("hexagon" with lambda, "hexagon-mirror" with its conjugate), per (a,b,c,d).
CheckReport hexagon_check(const RootParams& params, std::optional<int> max_label = std::nullopt,
                          const FMatrixProvider& provider = default_fmatrix_provider(),
                          Exec exec = Exec::parallel);

}  // namespace tlrc
