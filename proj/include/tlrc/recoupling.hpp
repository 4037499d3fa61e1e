#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tlrc/admissibility.hpp"
#include "tlrc/laurent.hpp"
#include "tlrc/rational.hpp"
#include "tlrc/scalar.hpp"

namespace tlrc {

/// Theta net Theta(a,b,c). Throws NotAdmissible (generic admissibility).
RationalFunction theta_closed(int a, int b, int c);
std::complex<double> theta_at(int a, int b, int c, const RootParams& params);

/// Tetrahedral net with vertices (a,c,i), (b,d,i), (a,b,j), (c,d,j).
/// Interior-sum closed form; throws NotAdmissible.
RationalFunction tet_closed(int a, int b, int i, int c, int d, int j);
std::complex<double> tet_at(int a, int b, int i, int c, int d, int j, const RootParams& params);

/// Unnormalized recoupling coefficient Tet(a,b,i,c,d,k) Delta_k / (Theta(a,b,k) Theta(c,d,k)).
/// The diagram with vertices (a,c,i), (b,d,i) expands as sum_k sixj(a,b,i,c,d,k)
/// times the diagram with vertices (a,b,k), (c,d,k).
RationalFunction sixj(int a, int b, int i, int c, int d, int k);
/// Throws ThetaVanishes when a theta in the denominator is within tolerance of zero.
std::complex<double> sixj_at(int a, int b, int i, int c, int d, int k, const RootParams& params);

/// Positive vertex normalization sqrt(sqrt([a+1][b+1][c+1]) / ThetaHat), ThetaHat = (-1)^{(a+b+c)/2} Theta.
/// Throws NotAdmissible unless admissible at params.
double vertex_factor(int a, int b, int c, const RootParams& params);

/// (-1)^{(b+c-a)/2} sqrt([b+1][c+1] / [a+1]). Throws NotAdmissible.
double bubble_coeff(int a, int b, int c, const RootParams& params);

struct RecouplingMatrix {
  std::array<int, 4> outer{};
  int r = 0;
  /// Internal label i of the basis with vertices (a,c,i), (b,d,i), ascending.
  std::vector<int> rows;
  /// Internal label j of the basis with vertices (a,b,j), (c,d,j), ascending.
  std::vector<int> cols;
  Eigen::MatrixXd entries;
  /// Largest imaginary part seen before the entries were stored as reals.
  double max_imag = 0.0;

  [[nodiscard]] bool empty() const { return rows.empty() || cols.empty(); }
};

/// Labels of the horizontal (rows) and vertical (cols) internal edges.
std::vector<int> fmatrix_row_labels(int a, int b, int c, int d, const RootParams& params);
std::vector<int> fmatrix_col_labels(int a, int b, int c, int d, const RootParams& params);

/// M[a,b,c,d]_{ij} = f f f f Tet(a,b,i,c,d,j) / ((-1)^{(a+b+c+d)/2} sqrt([a+1][b+1][c+1][d+1])).
/// Throws NotAdmissible if an outer label is negative or above r-2. An empty
/// internal label set gives a 0x0 matrix.
RecouplingMatrix fmatrix(int a, int b, int c, int d, const RootParams& params);

/// (b, d, a, c): the labels whose matrix is the transpose and inverse of M[a,b,c,d].
std::array<int, 4> fmatrix_inverse_labels(int a, int b, int c, int d);

/// The two forms of the normalizing denominator.
double fmatrix_denominator(int a, int b, int c, int d, const RootParams& params);
/// bubble(j;a,b) bubble(j;c,d) Delta_j, for the column label j.
double fmatrix_denominator_product(int a, int b, int c, int d, int j, const RootParams& params);

struct BraidPhase {
  int a = 0, b = 0, c = 0;
  std::complex<double> value;
};

/// lambda_c^{ab} = (-1)^{(a+b-c)/2} A^{(a(a+2) + b(b+2) - c(c+2))/2}.
/// Throws NotAdmissible (at params).
BraidPhase braid_phase(int a, int b, int c, const RootParams& params);
/// Exact signed monomial. Throws NotAdmissible (generic).
LaurentPoly braid_phase_exact(int a, int b, int c);

struct RMatrix {
  int a = 0, b = 0;
  std::vector<int> labels;
  Eigen::MatrixXcd entries;
};

/// Diagonal braiding over the ascending admissible channels c of a and b.
RMatrix rmatrix(int a, int b, const RootParams& params);

struct RMatrixExact {
  int a = 0, b = 0;
  std::vector<int> labels;
  std::vector<LaurentPoly> diagonal;
};

RMatrixExact rmatrix_exact(int a, int b);

}  // namespace tlrc
