#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tlrc/errors.hpp"
#include "tlrc/network.hpp"
#include "tlrc/scalar.hpp"

using namespace tlrc;
using tlrc::testing::A;

namespace {

RationalFunction rf(const LaurentPoly& p) { return {p}; }

RationalFunction qfrac(int n, int k) { return {quantum_int(n), quantum_int(k)}; }

void check_wiring(const ClosedNetwork& net) {
  const int n = net.endpoint_count();
  int total = 0;
  for (std::size_t b = 0; b < net.box_strands.size(); ++b) {
    CHECK(net.box_offset[b] == total);
    total += 2 * net.box_strands[b];
  }
  CHECK(total == n);
  for (int p = 0; p < n; ++p) {
    const int q = net.wire[static_cast<std::size_t>(p)];
    REQUIRE(q >= 0);
    REQUIRE(q < n);
    CHECK(q != p);
    CHECK(net.wire[static_cast<std::size_t>(q)] == p);
  }
}

}  // namespace

TEST_CASE("theta oracle examples") {
  CHECK(theta_oracle(0, 0, 0) == RationalFunction::from_int(1));
  CHECK(theta_oracle(1, 1, 0) == rf(loop_value()));
  CHECK(theta_oracle(1, 1, 2) == rf(quantum_int(3)));
  CHECK(theta_oracle(2, 2, 0) == rf(delta_n(2)));
  // (-1)^3 [4]! / ([2]!)^3 for three shared lines of one strand each
  CHECK(theta_oracle(2, 2, 2) ==
        RationalFunction(-quantum_fact(4), quantum_fact(2) * quantum_fact(2) * quantum_fact(2)));
}

TEST_CASE("theta with a zero leg is a projector loop") {
  for (int a = 0; a <= 5; ++a) CHECK(theta_oracle(a, a, 0) == rf(delta_n(a)));
}

TEST_CASE("theta is symmetric in its labels") {
  CHECK(theta_oracle(1, 2, 3) == theta_oracle(3, 1, 2));
  CHECK(theta_oracle(2, 3, 3) == theta_oracle(3, 3, 2));
}

TEST_CASE("tetrahedron oracle examples") {
  CHECK(tet_oracle(0, 0, 0, 0, 0, 0) == RationalFunction::from_int(1));
  CHECK(tet_oracle(1, 1, 2, 1, 1, 2) == qfrac(3, 2));
  CHECK(tet_oracle(1, 1, 0, 1, 1, 0) == rf(loop_value()));
}

TEST_CASE("tetrahedron with a zero edge collapses to a theta") {
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; c <= 3; ++c) {
      for (int i = std::abs(a - c); i <= a + c; i += 2) {
        CHECK(tet_oracle(a, a, i, c, c, 0) == theta_oracle(a, c, i));
        CHECK(tet_oracle(a, c, 0, a, c, i) == theta_oracle(a, c, i));
      }
    }
  }
}

TEST_CASE("tetrahedron symmetries") {
  // swapping the roles of the two opposite edges
  CHECK(tet_oracle(1, 2, 1, 2, 1, 3) == tet_oracle(2, 1, 3, 1, 2, 1));
  CHECK(tet_oracle(2, 2, 2, 2, 2, 2) == tet_oracle(2, 2, 2, 2, 2, 2).mirrored());
}

TEST_CASE("assembled networks are consistently wired") {
  const ClosedNetwork theta = assemble(theta_graph(2, 3, 3));
  CHECK(theta.box_strands == std::vector<int>{2, 3, 3});
  CHECK(theta.max_strands() == 3);
  check_wiring(theta);
  const ClosedNetwork tet = assemble(tetrahedron_graph(1, 2, 3, 2, 1, 1));
  CHECK(tet.box_strands.size() == 6);
  CHECK(tet.endpoint_count() == 2 * (1 + 2 + 3 + 2 + 1 + 1));
  check_wiring(tet);
}

TEST_CASE("reference, serial and parallel evaluation agree") {
  const std::vector<std::array<int, 6>> cases = {
      {1, 1, 2, 1, 1, 2}, {2, 2, 2, 2, 2, 2}, {1, 2, 1, 2, 1, 3}, {2, 2, 0, 2, 2, 4}, {3, 1, 2, 1, 3, 2}};
  for (const auto& c : cases) {
    const ClosedNetwork net = assemble(tetrahedron_graph(c[0], c[1], c[2], c[3], c[4], c[5]));
    const RationalFunction ref = evaluate_reference(net);
    CHECK(evaluate(net, Exec::serial) == ref);
    CHECK(evaluate(net, Exec::parallel) == ref);
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(theta_oracle(4, 4, 4, 3), BudgetExceeded);
  CHECK_THROWS_AS(evaluate(assemble(theta_graph(4, 4, 4)), Exec::parallel, 3), BudgetExceeded);
  CHECK_THROWS_AS(evaluate_reference(assemble(theta_graph(4, 4, 4)), 3), BudgetExceeded);
  CHECK_NOTHROW(theta_oracle(4, 4, 4, 4));
}

TEST_CASE("inadmissible labels are rejected") {
  CHECK_THROWS_AS(theta_oracle(1, 1, 1), NotAdmissible);
  CHECK_THROWS_AS(theta_oracle(1, 1, 4), NotAdmissible);
  CHECK_THROWS_AS(tet_oracle(1, 1, 2, 1, 1, 1), NotAdmissible);
}

TEST_CASE("malformed graphs are rejected") {
  TrivalentGraph g = theta_graph(1, 1, 2);
  g.edges[0].head = 7;
  CHECK_THROWS_AS(assemble(g), std::invalid_argument);

  g = theta_graph(1, 1, 2);
  g.edges[1].label = -1;
  CHECK_THROWS_AS(assemble(g), std::invalid_argument);

  g = theta_graph(1, 1, 2);
  g.rotation[0] = {0, 1, 5};
  CHECK_THROWS_AS(assemble(g), std::invalid_argument);

  g = theta_graph(2, 2, 2);
  g.rotation[1] = {0, 0, 1};  // edge 2 never reaches vertex 1
  CHECK_THROWS_AS(assemble(g), std::invalid_argument);
}
