#pragma once

#include <array>
#include <vector>

#include "tlrc/exec.hpp"
#include "tlrc/rational.hpp"

namespace tlrc {

/// Default cap on the largest projector an oracle evaluation may build.
inline constexpr int kDefaultStrandBudget = 12;

/// Closed planar network of Jones-Wenzl boxes joined by plain arcs.
///
/// Box b with k strands owns 2k endpoints: bottom j -> offset(b) + j,
/// top j -> offset(b) + k + j, matching PlanarMatching point numbering.
/// `wire[p]` is the endpoint joined to p outside the boxes.
struct ClosedNetwork {
  std::vector<int> box_strands;
  std::vector<int> box_offset;
  std::vector<int> wire;

  [[nodiscard]] int endpoint_count() const { return static_cast<int>(wire.size()); }
  [[nodiscard]] int max_strands() const;
};

/// Trivalent graph with a planar rotation system. Each edge carries a label
/// (projector size) and runs from its `tail` vertex (box bottom) to its `head`
/// vertex (box top). `rotation[v]` lists the three incident edges counter-
/// clockwise around v.
struct TrivalentGraph {
  struct Edge {
    int label;
    int tail;
    int head;
  };
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> rotation;
};

/// Splits every edge end at a vertex into the shared-line groups of the
/// trivalent vertex and wires them planarly. Throws NotAdmissible if a vertex
/// triple is not admissible, std::invalid_argument for a malformed graph.
ClosedNetwork assemble(const TrivalentGraph& graph);

/// Bracket evaluation of a closed network by expanding every projector.
/// Throws BudgetExceeded if a box exceeds `strand_budget`.
///
/// The serial reference multiplies rational coefficients term by term; the
/// parallel kernel clears denominators per box and accumulates integer
/// Laurent polynomials per loop count.
RationalFunction evaluate_reference(const ClosedNetwork& net, int strand_budget = kDefaultStrandBudget);
RationalFunction evaluate(const ClosedNetwork& net, Exec exec = Exec::parallel,
                          int strand_budget = kDefaultStrandBudget);

TrivalentGraph theta_graph(int a, int b, int c);
/// Tetrahedron whose vertices are (a,c,i), (b,d,i), (a,b,j), (c,d,j); i and j are opposite edges.
TrivalentGraph tetrahedron_graph(int a, int b, int i, int c, int d, int j);

/// Theta net evaluated diagrammatically. Throws NotAdmissible.
RationalFunction theta_oracle(int a, int b, int c, int strand_budget = kDefaultStrandBudget);
/// Tetrahedral net evaluated diagrammatically. Throws NotAdmissible.
RationalFunction tet_oracle(int a, int b, int i, int c, int d, int j,
                            int strand_budget = kDefaultStrandBudget);

}  // namespace tlrc
