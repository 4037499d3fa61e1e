#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tlrc/braidrep.hpp"
#include "tlrc/errors.hpp"
#include "tlrc/tl.hpp"

using namespace tlrc;
using tlrc::testing::A;

namespace {

Eigen::MatrixXcd to_complex(const Eigen::MatrixXd& m) { return m.cast<std::complex<double>>(); }

double dist(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) { return (x - y).cwiseAbs().maxCoeff(); }

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  BraidWord w{strands, {}};
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int k = 0; k < len; ++k) {
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

RecouplingMatrix flipped(int a, int b, int c, int d, const RootParams& p) {
  RecouplingMatrix m = fmatrix(a, b, c, d, p);
  if (m.entries.rows() >= 2) m.entries(0, 1) = -m.entries(0, 1);
  return m;
}

}  // namespace

TEST_CASE("basis examples") {
  const RootParams p(5);
  const FusionBasis b = enumerate_basis(3, 1, 1, p);
  CHECK(b.paths == std::vector<std::vector<int>>{{0, 1}, {2, 1}});
  CHECK(b.index_of({2, 1}) == 1);
  CHECK(b.index_of({1, 1}) == -1);
  CHECK(enumerate_basis(4, 1, 0, p).paths == std::vector<std::vector<int>>{{0, 1, 0}, {2, 1, 0}});
  CHECK(enumerate_basis(2, 1, 2, p).paths == std::vector<std::vector<int>>{{2}});
  CHECK(enumerate_basis(1, 1, 1, p).size() == 1);
  CHECK(enumerate_basis(1, 1, 0, p).size() == 0);
  CHECK(enumerate_basis(3, 1, 3, RootParams(4)).size() == 0);  // 3 > r - 2
  CHECK(enumerate_basis_generic(4, 1, 0).size() == 2);
  CHECK(enumerate_basis_generic(5, 1, 1).size() == 5);
  CHECK_FALSE(enumerate_basis_generic(3, 1, 1).params.has_value());
}

TEST_CASE("path counts agree with enumeration") {
  for (int r = 3; r <= 8; ++r) {
    const RootParams p(r);
    for (int n = 1; n <= 7; ++n)
      for (int ell = 0; ell <= r - 2; ++ell)
        for (int t = 0; t <= r - 2; ++t) CHECK(count_paths(n, ell, t, p) == enumerate_basis(n, ell, t, p).size());
  }
  for (int n = 1; n <= 7; ++n)
    for (int t = 0; t <= n; ++t) CHECK(count_paths(n, 1, t, std::nullopt) == enumerate_basis_generic(n, 1, t).size());
}

TEST_CASE("label 2 at r = 5 has Fibonacci dimensions") {
  const RootParams p(5);
  long f0 = 1, f1 = 1;  // F(1), F(2)
  for (int n = 1; n <= 10; ++n) {
    CHECK(count_paths(n, 2, 2, p) == f0);
    CHECK(count_paths(n + 1, 2, 0, p) == f0);
    const long next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
}

TEST_CASE("generic label-1 dimensions are ballot numbers") {
  // multiplicity of spin t/2 in the n-fold tensor of spin 1/2
  auto binom = [](int n, int k) {
    long c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
  };
  for (int n = 1; n <= 10; ++n)
    for (int t = n % 2; t <= n; t += 2) {
      const int k = (n - t) / 2;
      CHECK(count_paths(n, 1, t, std::nullopt) == binom(n, k) - (k > 0 ? binom(n, k - 1) : 0));
    }
}

TEST_CASE("first generator is diagonal in the channel phases") {
  const RootParams p(5);
  const FusionBasis b = enumerate_basis(3, 1, 1, p);
  const Eigen::MatrixXcd s1 = sigma_matrix(b, 1);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(2, 2);
  want(0, 0) = braid_phase(1, 1, 0, p).value;
  want(1, 1) = braid_phase(1, 1, 2, p).value;
  CHECK(dist(s1, want) < 1e-14);
}

TEST_CASE("second generator is the recoupled diagonal") {
  const RootParams p(5);
  const FusionBasis b = enumerate_basis(3, 1, 1, p);
  const Eigen::MatrixXd m = fmatrix(1, 1, 1, 1, p).entries;
  Eigen::MatrixXcd lam = Eigen::MatrixXcd::Zero(2, 2);
  lam(0, 0) = braid_phase(1, 1, 0, p).value;
  lam(1, 1) = braid_phase(1, 1, 2, p).value;
  const Eigen::MatrixXcd want = to_complex(m.transpose()) * lam * to_complex(m);
  CHECK(dist(sigma_matrix(b, 2), want) < 1e-14);
}

TEST_CASE("inverse generators") {
  for (int r : {4, 5, 7}) {
    const RootParams p(r);
    for (int ell = 1; ell <= std::min(2, r - 2); ++ell) {
      for (int t = 0; t <= r - 2; ++t) {
        const FusionBasis b = enumerate_basis(4, ell, t, p);
        if (b.size() == 0) continue;
        const auto id = Eigen::MatrixXcd::Identity(b.size(), b.size());
        for (int i = 1; i <= 3; ++i) {
          CHECK(dist(sigma_matrix(b, i, 1) * sigma_matrix(b, i, -1), id) < 1e-12);
          CHECK(dist(sigma_matrix(b, i, -1), sigma_matrix(b, i, 1).adjoint()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("generator errors") {
  const RootParams p(5);
  const FusionBasis b = enumerate_basis(3, 1, 1, p);
  CHECK_THROWS_AS(sigma_matrix(b, 0), IndexOutOfRange);
  CHECK_THROWS_AS(sigma_matrix(b, 3), IndexOutOfRange);
  CHECK_THROWS_AS(sigma_matrix(enumerate_basis_generic(3, 1, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(compile_braid(b, {4, {1}}), ShapeMismatch);
  CHECK_THROWS_AS(compile_braid(b, {3, {3}}), IndexOutOfRange);
  CHECK_THROWS_AS(compile_braid_exact(enumerate_basis_generic(3, 1, 1), {2, {1}}), ShapeMismatch);
  CHECK_THROWS_AS(sigma_matrix_exact(enumerate_basis_generic(3, 1, 1), 3), IndexOutOfRange);
}

TEST_CASE("compile applies the first letter first") {
  const RootParams p(5);
  const FusionBasis b = enumerate_basis(3, 1, 1, p);
  const Eigen::MatrixXcd s1 = sigma_matrix(b, 1), s2 = sigma_matrix(b, 2), s2i = sigma_matrix(b, 2, -1);
  CHECK(dist(compile_braid(b, {3, {1, 2}}), s2 * s1) < 1e-14);
  CHECK(dist(compile_braid(b, {3, {1, -2, 1}}), s1 * s2i * s1) < 1e-14);
  CHECK(dist(compile_braid(b, {3, {}}), Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
}

TEST_CASE("compiled words respect concatenation and stay unitary") {
  std::mt19937 rng(61);
  for (int r : {5, 7}) {
    const RootParams p(r);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int ell = 1 + static_cast<int>(rng() % 2);
      FusionBasis b;
      for (int t = k % (r - 1); t <= r - 2 && b.size() == 0; ++t) b = enumerate_basis(n, ell, t, p);
      if (b.size() == 0) continue;
      const BraidWord u = random_word(rng, n, 8), v = random_word(rng, n, 8);
      BraidWord uv = u;
      uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
      const Eigen::MatrixXcd cu = compile_braid(b, u), cv = compile_braid(b, v);
      CHECK(dist(compile_braid(b, uv), cv * cu) < 1e-11);
      CHECK(check_unitarity(cu) < 1e-11);
    }
  }
}

TEST_CASE("unitarity measure") {
  CHECK(check_unitarity(Eigen::MatrixXcd::Identity(3, 3)) == 0.0);
  CHECK(check_unitarity(2.0 * Eigen::MatrixXcd::Identity(2, 2)) == doctest::Approx(3.0));
}

TEST_CASE("braid relations hold on every small basis") {
  for (int r : {4, 5, 6, 7}) {
    const CheckReport rep = braid_sweep(RootParams(r), 5, std::min(3, r - 2));
    CHECK(!rep.entries.empty());
    CHECK(rep.max_deviation() < 1e-10);
    CHECK(rep.violations(1e-10).empty());
  }
  const CheckReport one = check_braid_relations(4, 1, 0, RootParams(5));
  bool saw_braid = false, saw_far = false;
  for (const auto& e : one.entries) {
    saw_braid |= e.check == "braid";
    saw_far |= e.check == "far-commutation";
    CHECK(e.labels.front() == 5);
  }
  CHECK(saw_braid);
  CHECK(saw_far);
}

TEST_CASE("checks catch a corrupted recoupling matrix") {
  const RootParams p(5);
  CHECK(orthogonality_check(p, std::nullopt, flipped).max_deviation() > 0.1);
  CHECK(braid_sweep(p, 4, 2, flipped).max_deviation() > 0.1);
  CHECK(pentagon_check(p, std::nullopt, flipped).max_deviation() > 0.1);
}

TEST_CASE("orthogonality and inverse sweeps") {
  for (int r = 3; r <= 8; ++r) {
    const RootParams p(r);
    const CheckReport o = orthogonality_check(p);
    const CheckReport inv = inverse_check(p);
    CHECK(o.max_deviation() < 1e-10);
    CHECK(inv.max_deviation() < 1e-10);
    for (const auto& e : o.entries) {
      CHECK(e.labels.size() == 5);
      CHECK(e.labels[0] == r);
    }
  }
}

TEST_CASE("F-moves read the recoupling matrix") {
  const RootParams p(5);
  const RecouplingMatrix m = fmatrix(1, 1, 1, 1, p);
  for (std::size_t e = 0; e < m.cols.size(); ++e)
    for (std::size_t f = 0; f < m.rows.size(); ++f)
      CHECK(fmove(1, 1, 1, 1, m.cols[e], m.rows[f], p) ==
            m.entries(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(e)));
  CHECK(fmove(1, 1, 1, 1, 1, 0, p) == 0.0);
  CHECK(fmove(0, 1, 1, 0, 1, 0, p) == doctest::Approx(1.0));
}

TEST_CASE("pentagon and hexagon") {
  for (int r : {4, 5, 6, 7}) {
    const RootParams p(r);
    const CheckReport pent = pentagon_check(p);
    const CheckReport hex = hexagon_check(p);
    CHECK(!pent.entries.empty());
    CHECK(pent.max_deviation() < 1e-10);
    CHECK(hex.max_deviation() < 1e-10);
    bool mirror = false;
    for (const auto& e : hex.entries) mirror |= e.check == "hexagon-mirror";
    CHECK(mirror);
    // all-vacuum configuration is present and exact
    bool vacuum = false;
    for (const auto& e : pent.entries)
      if (e.labels == std::vector<int>{r, 0, 0, 0, 0, 0}) vacuum = e.deviation == 0.0;
    CHECK(vacuum);
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  const RootParams p(6);
  auto same = [](const CheckReport& x, const CheckReport& y) {
    REQUIRE(x.entries.size() == y.entries.size());
    for (std::size_t k = 0; k < x.entries.size(); ++k) {
      CHECK(x.entries[k].check == y.entries[k].check);
      CHECK(x.entries[k].labels == y.entries[k].labels);
      CHECK(x.entries[k].deviation == y.entries[k].deviation);
    }
  };
  same(orthogonality_check(p, std::nullopt, default_fmatrix_provider(), Exec::serial),
       orthogonality_check(p, std::nullopt, default_fmatrix_provider(), Exec::parallel));
  same(pentagon_check(p, std::nullopt, default_fmatrix_provider(), Exec::serial),
       pentagon_check(p, std::nullopt, default_fmatrix_provider(), Exec::parallel));
  same(braid_sweep(p, 4, 3, default_fmatrix_provider(), Exec::serial),
       braid_sweep(p, 4, 3, default_fmatrix_provider(), Exec::parallel));
}

TEST_CASE("check reports") {
  CheckReport a{{{"x", {5}, 0.5}, {"y", {5}, 1e-12}}};
  const CheckReport b{{{"z", {6}, 2.0}}};
  CHECK(a.max_deviation() == 0.5);
  CHECK(a.violations(1e-9).size() == 1);
  a.append(b);
  CHECK(a.entries.size() == 3);
  CHECK(a.max_deviation() == 2.0);
  CHECK(CheckReport{}.max_deviation() == 0.0);
}

TEST_CASE("exact matrices") {
  ExactMatrix x(2, 3), y(3, 2);
  x(0, 1) = RationalFunction(A(1));
  y(1, 0) = RationalFunction(A(-1));
  const ExactMatrix xy = x * y;
  CHECK(xy(0, 0) == RationalFunction::from_int(1));
  CHECK(xy.trace() == RationalFunction::from_int(1));
  CHECK(ExactMatrix::identity(3).trace() == RationalFunction::from_int(3));
  CHECK_THROWS_AS(x * x, ShapeMismatch);
}

TEST_CASE("exact generators invert and satisfy the braid relation") {
  for (int t : {1, 3}) {
    const FusionBasis b = enumerate_basis_generic(5, 1, t);
    const ExactMatrix id = ExactMatrix::identity(b.size());
    for (int i = 1; i <= 4; ++i) CHECK(sigma_matrix_exact(b, i, 1) * sigma_matrix_exact(b, i, -1) == id);
    const ExactMatrix s1 = sigma_matrix_exact(b, 1), s2 = sigma_matrix_exact(b, 2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK(sigma_matrix_exact(b, 1) * sigma_matrix_exact(b, 3) == sigma_matrix_exact(b, 3) * sigma_matrix_exact(b, 1));
  }
  const FusionBasis b = enumerate_basis_generic(3, 1, 1);
  const ExactMatrix s1 = sigma_matrix_exact(b, 1);
  CHECK(s1(0, 0) == RationalFunction(-A(3)));
  CHECK(s1(1, 1) == RationalFunction(A(-1)));
}

TEST_CASE("trace closure examples") {
  const RationalFunction d{loop_value()};
  CHECK(closure_invariant_via_trace(BraidWord{1, {}}) == d);
  CHECK(closure_invariant_via_trace(BraidWord{3, {}}) == d * d * d);
  CHECK(closure_invariant_via_trace(BraidWord{2, {1}}) == RationalFunction(-A(-3)) * d);
}

TEST_CASE("trace closure equals the bracket") {
  std::mt19937 rng(62);
  for (int k = 0; k < 40; ++k) {
    const BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 3), 7);
    CHECK(closure_invariant_via_trace(w) == braid_closure_bracket(w).raw);
  }
}

TEST_CASE("numeric trace closure matches the exact one at a root") {
  const RootParams p(9);
  std::mt19937 rng(63);
  for (int k = 0; k < 25; ++k) {
    const BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 3), 8);
    const auto exact = eval_at_root(closure_invariant_via_trace(w), p);
    CHECK(std::abs(closure_invariant_via_trace(w, p) - exact) < 1e-10);
  }
}
