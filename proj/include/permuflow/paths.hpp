#pragma once

// Prefixes and routes of an augmented framed graph.
//
// A prefix starts at an incoming half-edge x and follows full edges; a route
// is a prefix that reaches the sink (the closing half-edge y stays implicit
// in the representation and is appended on output).  Prefixes are interned
// in a pool so that groves, vineyards and cliques can share them by id.

#include "permuflow/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace pf {

struct PrefixPool {
  struct Node {
    int parent = -1;  // prefix id, -1 for a bare half-edge
    int edge = -1;    // augmented id of the last item (x for roots)
    int vertex = 0;   // end vertex
    int in_pos = 0;   // position of `edge` in the augmented in-order at `vertex`
    int depth = 0;    // number of full edges
  };
  std::vector<Node> nodes;
  std::map<std::pair<int, int>, int> interned;  // (parent, edge) -> id

  int intern(int parent, int edge, int vertex, int in_pos);
  const Node& at(int id) const { return nodes[static_cast<std::size_t>(id)]; }
  // Items from the half-edge to the end (first entry is the x id).
  std::vector<int> items(int id) const;
};

// Central per-instance context: the augmented graph plus interned prefixes
// and (once enumerated) the routes grouped by half-edge.
struct Universe {
  AugmentedGraph ag;
  PrefixPool pool;
  std::vector<int> x_roots;  // prefix id of the bare half-edge x_(i+1)

  bool routes_ready = false;
  std::vector<std::vector<int>> routes_by_x;     // route prefix ids in chain order
  std::map<int, std::pair<int, int>> route_pos;  // route id -> (x index, rank)

  explicit Universe(const AugmentedGraph& a);
  int extend(int prefix, int edge);  // intern prefix + full edge
  int end_vertex(int prefix) const { return pool.at(prefix).vertex; }
  int x_of(int prefix) const;  // x index of the root
};

namespace paths {

enum class Cmp { Less = -1, SubpathRelated = 0, Greater = 1 };

// Enumerates all routes (budgeted) and fills Universe::routes_by_x sorted by
// the suffix order at each half-edge.
void enumerate_routes(Universe& u, const Budget& budget = {});

// Compare the prefixes of two routes ending at vertex v (both routes must
// pass through v).  SubpathRelated means the prefixes coincide.
Cmp compare_prefixes(const Universe& u, int route1, int route2, int v);
// Compare the suffixes of two routes starting at vertex v.
Cmp compare_suffixes(const Universe& u, int route1, int route2, int v);
// Direct comparison of two interned prefixes ending at the same vertex.
Cmp compare_prefix_ids(const Universe& u, int p, int q);

// Two routes conflict when some maximal common subpath is entered and left
// in strictly opposite framing order.
bool conflict(const Universe& u, int route1, int route2);
bool coherent(const Universe& u, int route1, int route2);

// Serialization: "x_1 s_0 t_3 y" style.
std::string route_str(const Universe& u, int route);
std::string prefix_str(const Universe& u, int prefix);
int parse_route(Universe& u, const std::string& text);  // interns if needed

}  // namespace paths
}  // namespace pf
