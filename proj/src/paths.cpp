#include "permuflow/paths.hpp"

#include <algorithm>
#include <sstream>

namespace pf {

int PrefixPool::intern(int parent, int edge, int vertex, int in_pos) {
  auto key = std::make_pair(parent, edge);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  Node nd;
  nd.parent = parent;
  nd.edge = edge;
  nd.vertex = vertex;
  nd.in_pos = in_pos;
  nd.depth = parent < 0 ? 0 : nodes[static_cast<std::size_t>(parent)].depth + 1;
  int id = static_cast<int>(nodes.size());
  nodes.push_back(nd);
  interned.emplace(key, id);
  return id;
}

std::vector<int> PrefixPool::items(int id) const {
  std::vector<int> out;
  for (int p = id; p >= 0; p = nodes[static_cast<std::size_t>(p)].parent)
    out.push_back(nodes[static_cast<std::size_t>(p)].edge);
  std::reverse(out.begin(), out.end());
  return out;
}

Universe::Universe(const AugmentedGraph& a) : ag(a) {
  for (int i = 0; i < ag.nx; ++i) {
    int x = ag.x_id(i);
    x_roots.push_back(pool.intern(-1, x, ag.head_of(x), ag.in_pos_hat(x)));
  }
}

int Universe::extend(int prefix, int edge) {
  if (!ag.is_full(edge)) throw invalid_error("prefixes extend along full edges only");
  if (ag.tail_of(edge) != end_vertex(prefix))
    throw invalid_error("edge does not continue the prefix");
  return pool.intern(prefix, edge, ag.head_of(edge), ag.in_pos_hat(edge));
}

int Universe::x_of(int prefix) const {
  int p = prefix;
  while (pool.at(p).parent >= 0) p = pool.at(p).parent;
  return pool.at(p).edge - ag.m();
}

namespace paths {

void enumerate_routes(Universe& u, const Budget& budget) {
  if (u.routes_ready) return;
  u.routes_by_x.assign(static_cast<std::size_t>(u.ag.nx), {});
  std::uint64_t count = 0;
  for (int i = 0; i < u.ag.nx; ++i) {
    // Depth-first following the augmented out-order bottom-first yields the
    // suffix order at the half-edge's vertex.
    struct Frame {
      int prefix;
    };
    std::vector<std::pair<int, std::size_t>> stack;  // (prefix, next out index)
    stack.emplace_back(u.x_roots[static_cast<std::size_t>(i)], 0);
    while (!stack.empty()) {
      auto& [prefix, next] = stack.back();
      int v = u.end_vertex(prefix);
      if (v == u.ag.g.n) {
        if (++count > budget.max_objects) throw budget_error("route enumeration exceeded budget");
        u.routes_by_x[static_cast<std::size_t>(i)].push_back(prefix);
        stack.pop_back();
        continue;
      }
      const auto& out = u.ag.g.out_order[static_cast<std::size_t>(v)];
      if (next >= out.size()) {
        stack.pop_back();
        continue;
      }
      int e = out[next++];
      stack.emplace_back(u.extend(prefix, e), 0);
    }
  }
  u.route_pos.clear();
  for (int i = 0; i < u.ag.nx; ++i)
    for (std::size_t r = 0; r < u.routes_by_x[static_cast<std::size_t>(i)].size(); ++r)
      u.route_pos[u.routes_by_x[static_cast<std::size_t>(i)][r]] = {i, static_cast<int>(r)};
  u.routes_ready = true;
}

Cmp compare_prefix_ids(const Universe& u, int p, int q) {
  if (u.end_vertex(p) != u.end_vertex(q))
    throw invalid_error("prefixes end at different vertices");
  while (p != q) {
    const auto& np = u.pool.at(p);
    const auto& nq = u.pool.at(q);
    if (np.in_pos != nq.in_pos) return np.in_pos < nq.in_pos ? Cmp::Less : Cmp::Greater;
    p = np.parent;
    q = nq.parent;
  }
  return Cmp::SubpathRelated;
}

namespace {

// Prefix id of `route` truncated at vertex v, or -1 when the route misses v.
int prefix_at(const Universe& u, int route, int v) {
  int p = route;
  while (p >= 0 && u.pool.at(p).vertex > v) p = u.pool.at(p).parent;
  if (p < 0 || u.pool.at(p).vertex != v) return -1;
  return p;
}

}  // namespace

Cmp compare_prefixes(const Universe& u, int route1, int route2, int v) {
  int p = prefix_at(u, route1, v);
  int q = prefix_at(u, route2, v);
  if (p < 0 || q < 0) throw invalid_error("route does not pass through vertex");
  return compare_prefix_ids(u, p, q);
}

Cmp compare_suffixes(const Universe& u, int route1, int route2, int v) {
  std::vector<int> e1 = u.pool.items(route1);
  std::vector<int> e2 = u.pool.items(route2);
  // Locate the edge index leaving v on each route.
  auto leave_index = [&](const std::vector<int>& items, int route) -> std::size_t {
    int p = prefix_at(u, route, v);
    if (p < 0) throw invalid_error("route does not pass through vertex");
    return static_cast<std::size_t>(u.pool.at(p).depth) + 1;  // items index of next edge
  };
  std::size_t i1 = leave_index(e1, route1);
  std::size_t i2 = leave_index(e2, route2);
  while (i1 < e1.size() && i2 < e2.size()) {
    int f1 = e1[i1];
    int f2 = e2[i2];
    if (f1 != f2) {
      int pos1 = u.ag.out_pos_hat(f1);
      int pos2 = u.ag.out_pos_hat(f2);
      return pos1 < pos2 ? Cmp::Less : Cmp::Greater;
    }
    ++i1;
    ++i2;
  }
  return Cmp::SubpathRelated;  // both reach the sink together
}

bool conflict(const Universe& u, int route1, int route2) {
  // Walk both routes, split the common vertices into maximal shared runs,
  // and compare entering/leaving positions at the run boundaries.
  auto describe = [&](int route) {
    std::map<int, std::pair<int, int>> at;  // vertex -> (enter item, leave item)
    std::vector<int> items = u.pool.items(route);
    int prev = items[0];  // the half-edge enters the first vertex
    int v = u.ag.head_of(items[0]);
    for (std::size_t i = 1; i < items.size(); ++i) {
      at[v] = {prev, items[i]};
      prev = items[i];
      v = u.ag.head_of(items[i]);
    }
    at[v] = {prev, u.ag.y_id()};
    return at;
  };
  auto at1 = describe(route1);
  auto at2 = describe(route2);

  int run_in_sign = 0;
  bool in_run = false;
  int prev_common_leave1 = -1, prev_common_leave2 = -1;
  for (auto& [v, io1] : at1) {
    auto it = at2.find(v);
    if (it == at2.end()) continue;
    auto& io2 = it->second;
    bool continues = in_run && io1.first == io2.first && io1.first == prev_common_leave1 &&
                     io2.first == prev_common_leave2;
    if (!continues) {
      int in_sign;
      if (io1.first == io2.first) {
        in_sign = 0;  // both start here with the same half-edge
      } else {
        int p1 = u.ag.in_pos_hat(io1.first);
        int p2 = u.ag.in_pos_hat(io2.first);
        in_sign = p1 < p2 ? -1 : 1;
      }
      run_in_sign = in_sign;
      in_run = true;
    }
    // Leaving comparison at this vertex; the run ends here if the leave
    // items differ (checked lazily: a strictly opposite pair decides).
    int out_sign;
    if (io1.second == io2.second) {
      out_sign = 0;
    } else {
      int p1 = u.ag.out_pos_hat(io1.second);
      int p2 = u.ag.out_pos_hat(io2.second);
      out_sign = p1 < p2 ? -1 : 1;
    }
    if (run_in_sign * out_sign == -1) return true;
    prev_common_leave1 = io1.second;
    prev_common_leave2 = io2.second;
  }
  return false;
}

bool coherent(const Universe& u, int route1, int route2) { return !conflict(u, route1, route2); }

std::string prefix_str(const Universe& u, int prefix) {
  std::string s;
  for (int e : u.pool.items(prefix)) {
    if (!s.empty()) s += " ";
    s += graphcore::edge_name(u.ag, e);
  }
  return s;
}

std::string route_str(const Universe& u, int route) {
  return prefix_str(u, route) + " y";
}

int parse_route(Universe& u, const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  int prefix = -1;
  bool saw_y = false;
  while (ss >> tok) {
    if (saw_y) throw parse_error("route continues past y");
    if (tok == "y") {
      saw_y = true;
      continue;
    }
    int e = graphcore::edge_by_name(u.ag, tok);
    if (prefix < 0) {
      if (!u.ag.is_x(e)) throw parse_error("route must start with a half-edge x_i");
      prefix = u.x_roots[static_cast<std::size_t>(e - u.ag.m())];
    } else {
      prefix = u.extend(prefix, e);
    }
  }
  if (prefix < 0) throw parse_error("empty route");
  if (u.end_vertex(prefix) != u.ag.g.n) throw parse_error("route does not reach the sink");
  return prefix;
}

}  // namespace paths
}  // namespace pf
