#pragma once

// Framed directed acyclic graphs and their augmentations.
//
// A framed graph has vertices 0..n, every edge oriented from a smaller to a
// larger vertex, and a total order on the in-edges and the out-edges of every
// vertex (drawn bottom to top).  The augmentation attaches |a_v| incoming
// half-edges x_i at each vertex v according to a netflow vector a, plus one
// outgoing half-edge y at the sink.

#include "permuflow/numeric.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pf {

struct EdgeRec {
  int id = 0;  // external id from the input file
  int tail = 0;
  int head = 0;
};

// Canonical edge name: the bottom out-edge of each vertex v in [0, n-1] is
// the slack s_v; the remaining edges are splits t_1..t_d numbered by tail
// vertex and, within a vertex, from the top of the out-order down.
struct EdgeName {
  char kind = 's';  // 's' slack, 't' split
  int index = 0;
  std::string str() const {
    return (kind == 's' ? "s_" : "t_") + std::to_string(index);
  }
};

struct FramedGraph {
  int n = 0;                                // vertices 0..n
  std::vector<EdgeRec> edges;               // handle = position
  std::vector<std::vector<int>> in_order;   // per vertex, edge handles, bottom first
  std::vector<std::vector<int>> out_order;

  int m() const { return static_cast<int>(edges.size()); }
  int dim() const { return m() - n; }
  int indeg(int v) const { return static_cast<int>(in_order[static_cast<std::size_t>(v)].size()); }
  int outdeg(int v) const { return static_cast<int>(out_order[static_cast<std::size_t>(v)].size()); }
  // position of edge e within the framing order at its tail/head
  int out_pos(int e) const;
  int in_pos(int e) const;
};

// Raw parsed content of a .fg description.
struct GraphSpec {
  int n = -1;
  std::vector<EdgeRec> edges;
  std::vector<std::pair<int, std::vector<int>>> in_order;   // vertex -> external edge ids
  std::vector<std::pair<int, std::vector<int>>> out_order;
  std::optional<std::vector<long long>> netflow;
  struct HalfEdge {
    int id = 0;
    int vertex = 0;
    int position = 0;  // index within the augmented in-order at that vertex
  };
  std::vector<HalfEdge> halfedges;
};

struct AugmentedGraph {
  FramedGraph g;
  std::vector<long long> netflow;  // size n+1; entries 0..n-1 nonnegative
  int nx = 0;                      // number of incoming half-edges
  std::vector<int> x_vertex;       // vertex of x_(i+1), sorted by (vertex, position)
  // Augmented edge ids: 0..m-1 full edges, m..m+nx-1 half-edges x, m+nx is y.
  std::vector<std::vector<int>> in_order_hat;   // per vertex, augmented ids
  std::vector<std::vector<int>> out_order_hat;  // per vertex; at n this is {y}

  int m() const { return g.m(); }
  int dim() const { return g.dim(); }
  int x_id(int i) const { return g.m() + i; }  // i in [0, nx)
  int y_id() const { return g.m() + nx; }
  bool is_x(int e) const { return e >= g.m() && e < g.m() + nx; }
  bool is_y(int e) const { return e == g.m() + nx; }
  bool is_full(int e) const { return e >= 0 && e < g.m(); }
  int tail_of(int e) const;  // -1 for half-edges x
  int head_of(int e) const;  // -1 for y
  int out_pos_hat(int e) const;
  int in_pos_hat(int e) const;
  // Position of `item` in the augmented out-order at v; -1 when absent.
  int out_pos_hat(int v, int item) const;
};

namespace graphcore {

// Validates a parsed spec (edges increase, framing orders are permutations,
// every non-sink vertex has an out-edge) and produces the graph.
FramedGraph build_framed_graph(const GraphSpec& spec);

// Canonical slack/split names per edge handle.
std::vector<EdgeName> canonical_labels(const FramedGraph& g);

// Name of an augmented edge id: s_v / t_j / x_i / y.
std::string edge_name(const AugmentedGraph& ag, int aug_id);
// Letter form used inside permutation-flow words: splits print as a bare
// index, half-edges as x_i.
std::string letter_name(const AugmentedGraph& ag, int aug_id);
// Inverse of edge_name; throws Parse on unknown token.
int edge_by_name(const AugmentedGraph& ag, const std::string& name);

// Attach half-edges according to the netflow.  placements lists explicit
// positions for half-edges (vertex, position within the augmented in-order);
// by default all half-edges of a vertex sit at the bottom, in half-edge
// order.  The full positions must be consistent with |a_v| per vertex.
AugmentedGraph augment(const FramedGraph& g, const std::vector<long long>& netflow,
                       const std::vector<std::pair<int, int>>& placements = {});

// Graph used by the source-contraction counting identities: a new source is
// prepended and connected to each old vertex v by a_v parallel edges placed
// where the half-edges sat.
FramedGraph build_gstar(const AugmentedGraph& ag);

// Pinned generator families:
//   oru:n          two parallel edges i-1 -> i for i in [n]
//   oru:s1,...,sn  s_i + 1 parallel edges i-1 -> i
//   car:n          path 0..n, fan-out (0,i) for i in [2,n-1], fan-in (i,n) for i in [1,n-2]
//   ps:n           path edges (i-1,i) and chords (i-1,n) for i in [n]
//   complete:m     all edges (i,j), 0 <= i < j <= m-1
// Framing is the planar one (drawn with later/larger arcs above).
GraphSpec named_graph(const std::string& family, const std::vector<int>& params);
// Parses "family:p1,p2,..." into the spec above.
GraphSpec named_graph(const std::string& descriptor);

// A second framing of the same graph: every in-order read top to bottom.
void twist_in_orders(FramedGraph& g);

// .fg text format.
GraphSpec parse_fg(std::istream& in);
GraphSpec parse_fg_string(const std::string& text);
std::string write_fg(const AugmentedGraph& ag);

// Builds the augmentation from a spec (netflow defaults to e_0 - e_n).
AugmentedGraph build_augmented(const GraphSpec& spec);

}  // namespace graphcore
}  // namespace pf
