#include "tlrc/network.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "tlrc/admissibility.hpp"
#include "tlrc/errors.hpp"
#include "tlrc/scalar.hpp"
#include "tlrc/tl.hpp"

namespace tlrc {

int ClosedNetwork::max_strands() const {
  return box_strands.empty() ? 0 : *std::max_element(box_strands.begin(), box_strands.end());
}

ClosedNetwork assemble(const TrivalentGraph& graph) {
  const int nv = static_cast<int>(graph.rotation.size());
  ClosedNetwork net;
  std::vector<int> box_of_edge(graph.edges.size(), -1);
  int offset = 0;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.tail < 0 || edge.tail >= nv || edge.head < 0 || edge.head >= nv || edge.tail == edge.head) {
      throw std::invalid_argument("network edge " + std::to_string(e) + " has bad endpoints");
    }
    if (edge.label < 0) throw std::invalid_argument("negative edge label");
    if (edge.label == 0) continue;
    box_of_edge[e] = static_cast<int>(net.box_strands.size());
    net.box_strands.push_back(edge.label);
    net.box_offset.push_back(offset);
    offset += 2 * edge.label;
  }
  net.wire.assign(static_cast<std::size_t>(offset), -1);

  // Endpoints of edge e at vertex v, listed counterclockwise around v.
  auto port = [&](int e, int v) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    std::vector<int> pts;
    const int b = box_of_edge[static_cast<std::size_t>(e)];
    if (b < 0) return pts;
    const int k = edge.label;
    const int off = net.box_offset[static_cast<std::size_t>(b)];
    for (int j = 0; j < k; ++j) pts.push_back(v == edge.head ? off + k + j : off + (k - 1 - j));
    return pts;
  };

  for (int v = 0; v < nv; ++v) {
    const auto& rot = graph.rotation[static_cast<std::size_t>(v)];
    std::array<int, 3> labels{};
    std::array<std::vector<int>, 3> ports;
    for (int s = 0; s < 3; ++s) {
      const int e = rot[static_cast<std::size_t>(s)];
      if (e < 0 || e >= static_cast<int>(graph.edges.size())) {
        throw std::invalid_argument("rotation references a missing edge");
      }
      const auto& edge = graph.edges[static_cast<std::size_t>(e)];
      if (edge.head != v && edge.tail != v) {
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                    " lists a non-incident edge");
      }
      labels[static_cast<std::size_t>(s)] = edge.label;
      ports[static_cast<std::size_t>(s)] = port(e, v);
    }
    require_admissible(labels[0], labels[1], labels[2]);
    for (int s = 0; s < 3; ++s) {
      const auto& here = ports[static_cast<std::size_t>(s)];
      const auto& next = ports[static_cast<std::size_t>((s + 1) % 3)];
      const int shared = (labels[static_cast<std::size_t>(s)] +
                          labels[static_cast<std::size_t>((s + 1) % 3)] -
                          labels[static_cast<std::size_t>((s + 2) % 3)]) /
                         2;
      for (int t = 0; t < shared; ++t) {
        const int p = here[here.size() - 1 - static_cast<std::size_t>(t)];
        const int q = next[static_cast<std::size_t>(t)];
        net.wire[static_cast<std::size_t>(p)] = q;
        net.wire[static_cast<std::size_t>(q)] = p;
      }
    }
  }
  if (std::find(net.wire.begin(), net.wire.end(), -1) != net.wire.end()) {
    throw std::invalid_argument("network has unwired endpoints; every edge needs both ends in a rotation");
  }
  return net;
}

namespace {

void check_budget(const ClosedNetwork& net, int strand_budget) {
  if (net.max_strands() > strand_budget) {
    throw BudgetExceeded("network needs a " + std::to_string(net.max_strands()) +
                         "-strand projector, budget is " + std::to_string(strand_budget));
  }
}

int count_loops(const std::vector<int>& box_partner, const std::vector<int>& wire,
                std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int loops = 0;
  const int total = static_cast<int>(wire.size());
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = box_partner[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(q)] = 1;
      p = wire[static_cast<std::size_t>(q)];
    } while (p != start);
  }
  return loops;
}

void place_matching(const PlanarMatching& m, int offset, std::vector<int>& box_partner) {
  for (int p = 0; p < m.point_count(); ++p) {
    box_partner[static_cast<std::size_t>(offset + p)] = offset + m.partner(p);
  }
}

using TermList = std::vector<std::pair<PlanarMatching, RationalFunction>>;

std::vector<TermList> expand_boxes(const ClosedNetwork& net) {
  std::vector<TermList> out;
  for (int k : net.box_strands) {
    const TLElement& p = jones_wenzl(k);
    out.emplace_back(p.terms().begin(), p.terms().end());
  }
  return out;
}

}  // namespace

RationalFunction evaluate_reference(const ClosedNetwork& net, int strand_budget) {
  check_budget(net, strand_budget);
  const std::vector<TermList> boxes = expand_boxes(net);
  const RationalFunction d(loop_value());
  std::vector<int> box_partner(net.wire.size());
  std::vector<char> seen(net.wire.size());
  std::vector<RationalFunction> parts;

  std::function<void(std::size_t, const RationalFunction&)> rec = [&](std::size_t b,
                                                                       const RationalFunction& coeff) {
    if (b == boxes.size()) {
      RationalFunction term = coeff;
      const int loops = count_loops(box_partner, net.wire, seen);
      for (int l = 0; l < loops; ++l) term *= d;
      parts.push_back(std::move(term));
      return;
    }
    for (const auto& [m, c] : boxes[b]) {
      place_matching(m, net.box_offset[b], box_partner);
      rec(b + 1, coeff * c);
    }
  };
  rec(0, RationalFunction::from_int(1));
  return RationalFunction::sum(parts);
}

RationalFunction evaluate(const ClosedNetwork& net, Exec exec, int strand_budget) {
  check_budget(net, strand_budget);
  const std::size_t nb = net.box_strands.size();
  if (nb == 0) return RationalFunction::from_int(1);

  // Clear denominators box by box: P = (1 / D) * sum_t N_t * m_t.
  const std::vector<TermList> boxes = expand_boxes(net);
  std::vector<LaurentPoly> box_den(nb);
  std::vector<std::vector<LaurentPoly>> box_num(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    LaurentPoly lcm = LaurentPoly::constant(1);
    for (const auto& [m, c] : boxes[b]) {
      const LaurentPoly g = gcd(lcm, c.denominator());
      lcm = lcm * *divide_exact(c.denominator(), g);
    }
    box_den[b] = lcm;
    for (const auto& [m, c] : boxes[b]) {
      box_num[b].push_back(c.numerator() * *divide_exact(lcm, c.denominator()));
    }
  }

  const std::size_t last = nb - 1;
  const std::size_t split = std::min<std::size_t>(2, last);  // levels fixed per work unit
  long units = 1;
  for (std::size_t b = 0; b < split; ++b) units *= static_cast<long>(boxes[b].size());
  const int max_loops = net.endpoint_count() / 2;
  const std::size_t last_terms = boxes[last].size();

  // buckets[l][t]: products of all but the last box, keyed by loop count and last-box term.
  using Buckets = std::vector<std::vector<LaurentPoly>>;
  Buckets total(static_cast<std::size_t>(max_loops + 1), std::vector<LaurentPoly>(last_terms));

  auto run_unit = [&](long unit, Buckets& buckets, std::vector<int>& box_partner, std::vector<char>& seen) {
    LaurentPoly prefix = LaurentPoly::constant(1);
    long rest = unit;
    for (std::size_t b = split; b-- > 0;) {
      const long nt = static_cast<long>(boxes[b].size());
      const auto t = static_cast<std::size_t>(rest % nt);
      rest /= nt;
      place_matching(boxes[b][t].first, net.box_offset[b], box_partner);
      prefix *= box_num[b][t];
    }
    std::function<void(std::size_t, const LaurentPoly&)> rec = [&](std::size_t b, const LaurentPoly& pre) {
      if (b == last) {
        for (std::size_t t = 0; t < last_terms; ++t) {
          place_matching(boxes[last][t].first, net.box_offset[last], box_partner);
          const int loops = count_loops(box_partner, net.wire, seen);
          buckets[static_cast<std::size_t>(loops)][t] += pre;
        }
        return;
      }
      for (std::size_t t = 0; t < boxes[b].size(); ++t) {
        place_matching(boxes[b][t].first, net.box_offset[b], box_partner);
        rec(b + 1, pre * box_num[b][t]);
      }
    };
    rec(split, prefix);
  };

  if (exec == Exec::serial) {
    std::vector<int> box_partner(net.wire.size());
    std::vector<char> seen(net.wire.size());
    for (long u = 0; u < units; ++u) run_unit(u, total, box_partner, seen);
  } else {
#pragma omp parallel
    {
      Buckets local(static_cast<std::size_t>(max_loops + 1), std::vector<LaurentPoly>(last_terms));
      std::vector<int> box_partner(net.wire.size());
      std::vector<char> seen(net.wire.size());
#pragma omp for schedule(dynamic)
      for (long u = 0; u < units; ++u) run_unit(u, local, box_partner, seen);
#pragma omp critical(tlrc_network_merge)
      for (std::size_t l = 0; l < local.size(); ++l)
        for (std::size_t t = 0; t < last_terms; ++t) total[l][t] += local[l][t];
    }
  }

  LaurentPoly numerator;
  LaurentPoly dpow = LaurentPoly::constant(1);
  const LaurentPoly d = loop_value();
  for (int l = 0; l <= max_loops; ++l) {
    LaurentPoly level;
    for (std::size_t t = 0; t < last_terms; ++t) {
      const auto& acc = total[static_cast<std::size_t>(l)][t];
      if (!acc.is_zero()) level += acc * box_num[last][t];
    }
    if (!level.is_zero()) numerator += level * dpow;
    dpow *= d;
  }
  LaurentPoly denominator = LaurentPoly::constant(1);
  for (const auto& den : box_den) denominator *= den;
  return {std::move(numerator), std::move(denominator)};
}

TrivalentGraph theta_graph(int a, int b, int c) {
  // Three parallel boxes a | b | c from the lower vertex 0 to the upper vertex 1.
  TrivalentGraph g;
  g.edges = {{a, 0, 1}, {b, 0, 1}, {c, 0, 1}};
  g.rotation = {{2, 1, 0}, {0, 1, 2}};
  return g;
}

TrivalentGraph tetrahedron_graph(int a, int b, int i, int c, int d, int j) {
  // Vertices: 0=(a,c,i), 1=(b,d,i), 2=(a,b,j) on a counterclockwise outer
  // triangle, 3=(c,d,j) in the middle.
  TrivalentGraph g;
  g.edges = {
      {i, 0, 1},  // 0
      {b, 1, 2},  // 1
      {a, 2, 0},  // 2
      {c, 0, 3},  // 3
      {d, 1, 3},  // 4
      {j, 2, 3},  // 5
  };
  g.rotation = {
      {3, 2, 0},  // vertex 0: to centre (c), to 2 (a), to 1 (i)
      {4, 0, 1},  // vertex 1: to centre (d), to 0 (i), to 2 (b)
      {5, 1, 2},  // vertex 2: to centre (j), to 1 (b), to 0 (a)
      {3, 4, 5},  // centre: to 0, to 1, to 2
  };
  return g;
}

RationalFunction theta_oracle(int a, int b, int c, int strand_budget) {
  require_admissible(a, b, c);
  return evaluate(assemble(theta_graph(a, b, c)), Exec::parallel, strand_budget);
}

RationalFunction tet_oracle(int a, int b, int i, int c, int d, int j, int strand_budget) {
  require_admissible(a, c, i);
  require_admissible(b, d, i);
  require_admissible(a, b, j);
  require_admissible(c, d, j);
  return evaluate(assemble(tetrahedron_graph(a, b, i, c, d, j)), Exec::parallel, strand_budget);
}

}  // namespace tlrc
