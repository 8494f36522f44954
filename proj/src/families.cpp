#include "permuflow/families.hpp"

#include "permuflow/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace pf {
namespace families {

namespace {

bool prefix_less(const Universe& u, int p, int q) {
  return p != q && paths::compare_prefix_ids(u, p, q) == paths::Cmp::Less;
}

void check_route(const Universe& u, int route, int x) {
  if (route < 0 || route >= static_cast<int>(u.pool.nodes.size()))
    throw invalid_error("route id out of range");
  if (u.end_vertex(route) != u.ag.g.n) throw invalid_error("matching entry does not reach the sink");
  if (u.x_of(route) != x) throw invalid_error("matching entry starts at the wrong half-edge");
}

// Lexicographic componentwise order; total on coherent families.
bool matching_lex_less(const Universe& u, const RouteMatching& a, const RouteMatching& b) {
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] != b[x]) return route_less(u, a[x], b[x]);
  return false;
}

std::unordered_map<int, std::vector<int>> vineyard_children(const Universe& u,
                                                            const Vineyard& v) {
  std::unordered_map<int, std::vector<int>> kids;
  for (int p : v.prefixes) {
    const auto& node = u.pool.at(p);
    if (node.parent >= 0) kids[node.parent].push_back(p);
  }
  for (auto& [parent, list] : kids) {
    // order extensions by the framing at the parent's end vertex
    int v0 = u.pool.at(parent).vertex;
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return u.ag.out_pos_hat(v0, u.pool.at(a).edge) < u.ag.out_pos_hat(v0, u.pool.at(b).edge);
    });
  }
  return kids;
}

}  // namespace

bool route_less(const Universe& u, int route1, int route2) {
  if (route1 == route2) return false;
  int x = u.x_of(route1);
  if (x != u.x_of(route2)) throw invalid_error("routes from different half-edges are not comparable");
  return paths::compare_suffixes(u, route1, route2, u.ag.x_vertex[x]) == paths::Cmp::Less;
}

bool matching_leq(const Universe& u, const RouteMatching& a, const RouteMatching& b) {
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] != b[x] && route_less(u, b[x], a[x])) return false;
  return true;
}

bool matching_coherent(const Universe& u, const RouteMatching& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (paths::conflict(u, a[i], a[j])) return false;
  return true;
}

bool matchings_coherent(const Universe& u, const RouteMatching& a, const RouteMatching& b) {
  if (!matching_coherent(u, a) || !matching_coherent(u, b)) return false;
  for (int r : a)
    for (int s : b)
      if (r != s && paths::conflict(u, r, s)) return false;
  return true;
}

void validate_clique(const Universe& u, const Clique& c) {
  if (c.matchings.empty()) throw invalid_error("clique has no matchings");
  int nx = u.ag.nx;
  for (const auto& m : c.matchings) {
    if (static_cast<int>(m.size()) != nx) throw invalid_error("matching size mismatch");
    for (int x = 0; x < nx; ++x) check_route(u, m[x], x);
  }
  for (size_t i = 0; i + 1 < c.matchings.size(); ++i) {
    if (c.matchings[i] == c.matchings[i + 1]) throw invalid_error("duplicate matching in clique");
    if (!matching_leq(u, c.matchings[i], c.matchings[i + 1]))
      throw invalid_error("clique matchings are not totally ordered");
  }
  std::set<int> routes;
  for (const auto& m : c.matchings) routes.insert(m.begin(), m.end());
  std::vector<int> rs(routes.begin(), routes.end());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j)
      if (paths::conflict(u, rs[i], rs[j])) throw invalid_error("clique routes are in conflict");
}

Clique make_clique(const Universe& u, std::vector<RouteMatching> matchings) {
  std::sort(matchings.begin(), matchings.end(),
            [&](const RouteMatching& a, const RouteMatching& b) { return matching_lex_less(u, a, b); });
  matchings.erase(std::unique(matchings.begin(), matchings.end()), matchings.end());
  Clique c{std::move(matchings)};
  validate_clique(u, c);
  return c;
}

Multiclique clique_to_multiclique(const Universe& u, const Clique& c) {
  validate_clique(u, c);
  Multiclique m;
  m.rows.assign(u.ag.nx, {});
  for (const auto& matching : c.matchings)
    for (int x = 0; x < u.ag.nx; ++x) m.rows[x].push_back(matching[x]);
  return m;
}

Clique multiclique_to_clique(const Universe& u, const Multiclique& m) {
  validate_multiclique(u, m);
  std::vector<RouteMatching> cols;
  int k = m.rank();
  for (int j = 0; j <= k; ++j) {
    RouteMatching col(u.ag.nx);
    for (int x = 0; x < u.ag.nx; ++x) col[x] = m.rows[x][j];
    if (cols.empty() || cols.back() != col) cols.push_back(col);
  }
  Clique c{std::move(cols)};
  validate_clique(u, c);
  return c;
}

void validate_multiclique(const Universe& u, const Multiclique& m) {
  if (static_cast<int>(m.rows.size()) != u.ag.nx) throw invalid_error("multiclique row count mismatch");
  if (m.rows.empty() || m.rows[0].empty()) throw invalid_error("multiclique is empty");
  size_t width = m.rows[0].size();
  for (int x = 0; x < u.ag.nx; ++x) {
    const auto& row = m.rows[x];
    if (row.size() != width) throw invalid_error("multiclique rows have unequal sizes");
    for (size_t j = 0; j < row.size(); ++j) {
      check_route(u, row[j], x);
      if (j > 0 && row[j] != row[j - 1] && route_less(u, row[j], row[j - 1]))
        throw invalid_error("multiclique row is not weakly increasing");
    }
  }
  for (size_t j = 1; j < width; ++j) {
    bool differs = false;
    for (int x = 0; x < u.ag.nx && !differs; ++x) differs = m.rows[x][j] != m.rows[x][j - 1];
    if (!differs) throw invalid_error("adjacent multiclique columns coincide");
  }
  // coherence of the underlying routes
  std::set<int> routes;
  for (const auto& row : m.rows) routes.insert(row.begin(), row.end());
  std::vector<int> rs(routes.begin(), routes.end());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j)
      if (paths::conflict(u, rs[i], rs[j])) throw invalid_error("multiclique routes are in conflict");
}

bool multiclique_leq(const Universe& u, const Multiclique& a, const Multiclique& b) {
  int ka = a.rank(), kb = b.rank();
  if (ka > kb) return false;
  auto column = [&](const Multiclique& m, int j) {
    RouteMatching col(u.ag.nx);
    for (int x = 0; x < u.ag.nx; ++x) col[x] = m.rows[x][j];
    return col;
  };
  int j = 0;
  for (int i = 0; i <= ka; ++i) {
    RouteMatching want = column(a, i);
    while (j <= kb && column(b, j) != want) ++j;
    if (j > kb) return false;
    ++j;
  }
  return true;
}

Vineyard vineyard_from_matchings(const Universe& u, const std::vector<RouteMatching>& ms) {
  std::set<int> closure;
  for (const auto& m : ms)
    for (int r : m)
      for (int p = r; p >= 0; p = u.pool.at(p).parent) closure.insert(p);
  Vineyard v{std::vector<int>(closure.begin(), closure.end())};
  validate_vineyard(u, v);
  return v;
}

void validate_vineyard(const Universe& u, const Vineyard& v) {
  if (v.prefixes.empty()) throw invalid_error("vineyard is empty");
  std::set<int> present(v.prefixes.begin(), v.prefixes.end());
  if (present.size() != v.prefixes.size()) throw invalid_error("duplicate vineyard prefix");
  for (int p : v.prefixes) {
    if (p < 0 || p >= static_cast<int>(u.pool.nodes.size())) throw invalid_error("prefix id out of range");
    int parent = u.pool.at(p).parent;
    if (parent >= 0 && !present.count(parent)) throw invalid_error("vineyard is not prefix-closed");
  }
  std::set<int> with_child;
  for (int p : v.prefixes) {
    int parent = u.pool.at(p).parent;
    if (parent >= 0) with_child.insert(parent);
  }
  for (int p : v.prefixes)
    if (!with_child.count(p) && u.end_vertex(p) != u.ag.g.n)
      throw invalid_error("maximal vineyard prefix is not a route");
  for (int x = 0; x < u.ag.nx; ++x)
    if (!present.count(u.x_roots[x])) throw invalid_error("vineyard misses a half-edge root");
}

std::vector<std::vector<int>> vineyard_splits(const Universe& u, const Vineyard& v) {
  auto kids = vineyard_children(u, v);
  std::vector<std::vector<int>> chains(u.ag.nx);
  std::function<void(int, std::vector<int>&)> walk = [&](int p, std::vector<int>& out) {
    auto it = kids.find(p);
    if (it == kids.end()) return;  // route
    const auto& exts = it->second;
    walk(exts[0], out);
    for (size_t i = 1; i < exts.size(); ++i) {
      out.push_back(exts[i]);
      walk(exts[i], out);
    }
  };
  for (int x = 0; x < u.ag.nx; ++x) walk(u.x_roots[x], chains[x]);
  return chains;
}

int vineyard_minext(const Universe& u, const Vineyard& v, int prefix) {
  auto kids = vineyard_children(u, v);
  int p = prefix;
  while (true) {
    auto it = kids.find(p);
    if (it == kids.end()) {
      if (u.end_vertex(p) != u.ag.g.n) throw invalid_error("prefix has no extension in the vineyard");
      return p;
    }
    p = it->second[0];
  }
}

int vineyard_natural_label(const Universe& u, const Vineyard& v, int prefix) {
  auto kids = vineyard_children(u, v);
  std::function<int(int)> label = [&](int p) -> int {
    const auto& node = u.pool.at(p);
    if (node.parent < 0) return node.edge;  // the half-edge itself
    if (kids.at(node.parent)[0] != p) return node.edge;  // split: its last edge
    return label(node.parent);
  };
  return label(prefix);
}

Multiclique vineyard_shuffle_to_multiclique(const Universe& u, const Vineyard& v,
                                            const Shuffle& s) {
  validate_vineyard(u, v);
  auto chains = vineyard_splits(u, v);
  if (static_cast<int>(s.chains.size()) != u.ag.nx) throw invalid_error("shuffle chain count mismatch");
  std::vector<bool> hit(s.rank + 1, false);
  for (int x = 0; x < u.ag.nx; ++x) {
    if (s.chains[x].size() != chains[x].size()) throw invalid_error("shuffle chain does not match vineyard splits");
    int prev = 0;
    for (size_t i = 0; i < chains[x].size(); ++i) {
      if (s.chains[x][i].first != chains[x][i]) throw invalid_error("shuffle split key mismatch");
      int r = s.chains[x][i].second;
      if (r <= prev || r > s.rank) throw invalid_error("shuffle ranks must increase along a chain");
      hit[r] = true;
      prev = r;
    }
  }
  for (int r = 1; r <= s.rank; ++r)
    if (!hit[r]) throw invalid_error("shuffle ranks are not surjective");

  Multiclique m;
  m.rows.assign(u.ag.nx, {});
  for (int x = 0; x < u.ag.nx; ++x) {
    std::vector<int> reps;  // route of chain position i
    reps.push_back(vineyard_minext(u, v, u.x_roots[x]));
    for (int split : chains[x]) reps.push_back(vineyard_minext(u, v, split));
    for (int j = 0; j <= s.rank; ++j) {
      int i = 0;
      while (i < static_cast<int>(s.chains[x].size()) && s.chains[x][i].second <= j) ++i;
      m.rows[x].push_back(reps[i]);
    }
  }
  validate_multiclique(u, m);
  return m;
}

std::pair<Vineyard, Shuffle> multiclique_to_vineyard_shuffle(const Universe& u,
                                                             const Multiclique& m) {
  validate_multiclique(u, m);
  std::vector<RouteMatching> cols;
  for (int j = 0; j <= m.rank(); ++j) {
    RouteMatching col(u.ag.nx);
    for (int x = 0; x < u.ag.nx; ++x) col[x] = m.rows[x][j];
    cols.push_back(col);
  }
  Vineyard v = vineyard_from_matchings(u, cols);
  auto chains = vineyard_splits(u, v);
  Shuffle s;
  s.rank = m.rank();
  s.chains.assign(u.ag.nx, {});
  for (int x = 0; x < u.ag.nx; ++x) {
    std::vector<int> reps;
    reps.push_back(vineyard_minext(u, v, u.x_roots[x]));
    for (int split : chains[x]) reps.push_back(vineyard_minext(u, v, split));
    // sigma of the i-th split = first column whose row entry switches to reps[i]
    size_t i = 1;
    for (int j = 0; j <= m.rank() && i < reps.size(); ++j) {
      if (m.rows[x][j] == reps[i]) {
        s.chains[x].push_back({chains[x][i - 1], j});
        ++i;
      } else if (m.rows[x][j] != reps[i - 1]) {
        throw invalid_error("multiclique row does not follow its vineyard chain");
      }
    }
    if (i != reps.size()) throw invalid_error("multiclique row misses a vineyard route");
    for (int j = 0; j <= m.rank(); ++j) {
      size_t cnt = 0;
      for (const auto& [key, r] : s.chains[x])
        if (r <= j) ++cnt;
      if (m.rows[x][j] != reps[cnt]) throw invalid_error("multiclique rows are inconsistent");
    }
  }
  // round-trip guard
  Multiclique back = vineyard_shuffle_to_multiclique(u, v, s);
  if (!(back == m)) throw invalid_error("multiclique does not decompose as vineyard and shuffle");
  return {std::move(v), std::move(s)};
}

Grove vineyard_to_grove(const Universe& u, const Vineyard& v) {
  validate_vineyard(u, v);
  auto kids = vineyard_children(u, v);
  Grove g;
  g.at.assign(u.ag.g.n + 1, {});
  for (int p : v.prefixes) {
    int end = u.end_vertex(p);
    if (end == u.ag.g.n) {
      g.at[end].push_back({p, u.ag.y_id()});
      continue;
    }
    auto it = kids.find(p);
    if (it == kids.end()) throw invalid_error("vineyard prefix has no continuation");
    for (int c : it->second) g.at[end].push_back({p, u.pool.at(c).edge});
  }
  canonicalize_grove(u, g);
  return g;
}

Vineyard grove_to_vineyard(Universe& u, const Grove& g) {
  validate_grove(u, g);
  std::set<int> prefixes;
  for (int v = 0; v <= u.ag.g.n; ++v)
    for (const auto& [p, e] : g.at[v]) {
      prefixes.insert(p);
      if (e != u.ag.y_id()) prefixes.insert(u.extend(p, e));
    }
  Vineyard vy{std::vector<int>(prefixes.begin(), prefixes.end())};
  validate_vineyard(u, vy);
  return vy;
}

void validate_grove(const Universe& u, const Grove& g) {
  if (static_cast<int>(g.at.size()) != u.ag.g.n + 1) throw invalid_error("grove vertex count mismatch");
  int n = u.ag.g.n;
  // arriving prefixes per vertex, grown as we sweep upward
  std::vector<std::set<int>> arriving(n + 1);
  for (int x = 0; x < u.ag.nx; ++x) arriving[u.ag.x_vertex[x]].insert(u.x_roots[x]);
  for (int v = 0; v <= n; ++v) {
    std::set<std::pair<int, int>> seen;
    std::set<int> lefts;
    for (const auto& [p, e] : g.at[v]) {
      if (p < 0 || p >= static_cast<int>(u.pool.nodes.size())) throw invalid_error("grove prefix out of range");
      if (u.end_vertex(p) != v) throw invalid_error("grove edge at the wrong vertex");
      if (!arriving[v].count(p)) throw invalid_error("grove edge uses a prefix that does not arrive");
      if (v == n) {
        if (e != u.ag.y_id()) throw invalid_error("sink grove edges must use the terminal half-edge");
      } else {
        if (u.ag.out_pos_hat(v, e) < 0) throw invalid_error("grove edge uses a non-outgoing edge");
      }
      if (!seen.insert({p, e}).second) throw invalid_error("duplicate grove edge");
      lefts.insert(p);
      if (v < n) {
        int head = u.ag.head_of(e);
        // find or require the extension prefix
        auto it = u.pool.interned.find({p, e});
        if (it == u.pool.interned.end())
          throw invalid_error("grove extension prefix was never formed");
        arriving[head].insert(it->second);
      }
    }
    for (int p : arriving[v])
      if (!lefts.count(p)) throw invalid_error("arriving prefix is not continued by the grove");
    // noncrossing
    const auto& edges = g.at[v];
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j) {
        const auto& [p1, e1] = edges[i];
        const auto& [p2, e2] = edges[j];
        if (p1 == p2 || e1 == e2) continue;
        bool pl = prefix_less(u, p1, p2);
        int pos1 = v == n ? 0 : u.ag.out_pos_hat(v, e1);
        int pos2 = v == n ? 0 : u.ag.out_pos_hat(v, e2);
        if (pos1 == pos2) continue;
        if (pl != (pos1 < pos2)) throw invalid_error("grove forest has crossing edges");
      }
  }
}

bool grove_is_saturated(const Universe& u, const Grove& g) {
  validate_grove(u, g);
  int n = u.ag.g.n;
  for (int v = 0; v < n; ++v) {
    std::set<int> lefts, rights;
    for (const auto& [p, e] : g.at[v]) {
      lefts.insert(p);
      rights.insert(e);
    }
    if (rights.size() != u.ag.out_order_hat[v].size()) return false;
    if (lefts.empty()) return false;
    if (g.at[v].size() != lefts.size() + rights.size() - 1) return false;
  }
  return true;
}

void canonicalize_grove(const Universe& u, Grove& g) {
  for (int v = 0; v <= u.ag.g.n; ++v) {
    std::sort(g.at[v].begin(), g.at[v].end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return prefix_less(u, a.first, b.first);
      if (a.second == b.second) return false;
      if (v == u.ag.g.n) return a.second < b.second;
      return u.ag.out_pos_hat(v, a.second) < u.ag.out_pos_hat(v, b.second);
    });
  }
}

bool grove_subset(const Grove& a, const Grove& b) {
  if (a.at.size() != b.at.size()) return false;
  for (size_t v = 0; v < a.at.size(); ++v)
    for (const auto& edge : a.at[v])
      if (std::find(b.at[v].begin(), b.at[v].end(), edge) == b.at[v].end()) return false;
  return true;
}

std::vector<std::vector<int>> grove_splits(Universe& u, const Grove& g) {
  return vineyard_splits(u, grove_to_vineyard(u, g));
}

bool shuffle_face_leq(Universe& u, const Grove& ga, const Shuffle& sa, const Grove& gb,
                      const Shuffle& sb) {
  // Containment of the groves is necessary; the face order itself is column
  // containment of the induced multicliques (splits added by b shift the
  // chain positions, so a purely positional comparison would be too strict).
  if (!grove_subset(ga, gb)) return false;
  Multiclique ma = vineyard_shuffle_to_multiclique(u, grove_to_vineyard(u, ga), sa);
  Multiclique mb = vineyard_shuffle_to_multiclique(u, grove_to_vineyard(u, gb), sb);
  return multiclique_leq(u, ma, mb);
}

namespace {

// Complete one vertex to a noncrossing spanning tree containing the old
// edges.  Trees on ordered (lefts x rights) are monotone staircases: left i
// covers a right interval [a_i, b_i] with a_0 = 0, b_last = q-1 and
// a_{i+1} = b_i.  The minimal saturation pushes every interval as low as the
// old edges allow; the maximal one pushes them as high as possible.
std::vector<std::pair<int, int>> complete_tree(const std::vector<int>& lefts,
                                               const std::vector<int>& rights,
                                               const std::vector<std::vector<int>>& old_cols,
                                               bool take_min) {
  int p = static_cast<int>(lefts.size());
  int q = static_cast<int>(rights.size());
  std::vector<int> a(p), b(p);
  if (take_min) {
    int cur = 0;
    for (int i = 0; i < p; ++i) {
      a[i] = cur;
      b[i] = cur;
      for (int c : old_cols[i]) b[i] = std::max(b[i], c);
      if (i == p - 1) b[i] = q - 1;
      if (b[i] < a[i]) throw invalid_error("grove forest is not monotone");
      cur = b[i];
    }
  } else {
    int cur = q - 1;
    for (int i = p - 1; i >= 0; --i) {
      b[i] = cur;
      a[i] = cur;
      for (int c : old_cols[i]) a[i] = std::min(a[i], c);
      if (i == 0) a[i] = 0;
      if (b[i] < a[i]) throw invalid_error("grove forest is not monotone");
      cur = a[i];
    }
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < p; ++i)
    for (int j = a[i]; j <= b[i]; ++j) cells.push_back({i, j});
  return cells;
}

Grove saturate(Universe& u, const Grove& g, bool take_min) {
  validate_grove(u, g);
  int n = u.ag.g.n;
  Grove out;
  out.at.assign(n + 1, {});
  // arriving prefixes of the completed grove, ordered bottom to top
  std::vector<std::vector<int>> arriving(n + 1);
  auto arrive = [&](int vertex, int prefix) { arriving[vertex].push_back(prefix); };
  for (int x = 0; x < u.ag.nx; ++x) arrive(u.ag.x_vertex[x], u.x_roots[x]);
  for (int v = 0; v <= n; ++v) {
    // collect arrivals in framing order of the entering items
    std::vector<int> lefts;
    {
      std::vector<int> sorted = arriving[v];
      std::sort(sorted.begin(), sorted.end(),
                [&](int a2, int b2) { return prefix_less(u, a2, b2); });
      lefts = sorted;
    }
    if (v == n) {
      for (int p : lefts) out.at[n].push_back({p, u.ag.y_id()});
      continue;
    }
    const auto& rights = u.ag.out_order_hat[v];
    if (lefts.empty()) {
      if (!g.at[v].empty()) throw invalid_error("grove edge at unreachable vertex");
      if (!rights.empty())
        throw invalid_error("no route reaches a vertex with outgoing edges; no saturation exists");
      continue;
    }
    std::map<int, int> left_index, right_index;
    for (size_t i = 0; i < lefts.size(); ++i) left_index[lefts[i]] = static_cast<int>(i);
    for (size_t j = 0; j < rights.size(); ++j) right_index[rights[j]] = static_cast<int>(j);
    std::vector<std::vector<int>> old_cols(lefts.size());
    for (const auto& [p, e] : g.at[v]) {
      auto it = left_index.find(p);
      if (it == left_index.end()) throw invalid_error("grove prefix does not arrive in completion");
      old_cols[it->second].push_back(right_index.at(e));
    }
    auto cells = complete_tree(lefts, {rights.begin(), rights.end()}, old_cols, take_min);
    for (const auto& [i, j] : cells) {
      int p = lefts[i];
      int e = rights[j];
      out.at[v].push_back({p, e});
      arrive(u.ag.head_of(e), u.extend(p, e));
    }
  }
  canonicalize_grove(u, out);
  if (!grove_is_saturated(u, out)) throw violation_error("saturation failed to produce a saturated grove");
  if (!grove_subset(g, out)) throw violation_error("saturation does not contain its input");
  return out;
}

}  // namespace

Grove min_saturation(Universe& u, const Grove& g) { return saturate(u, g, true); }

Grove max_saturation(Universe& u, const Grove& g) { return saturate(u, g, false); }

std::vector<Shuffle> enumerate_shuffles(const std::vector<std::vector<int>>& chains,
                                        const Budget& budget) {
  std::vector<Shuffle> out;
  size_t total = 0;
  for (const auto& c : chains) total += c.size();
  std::vector<size_t> pos(chains.size(), 0);
  Shuffle cur;
  cur.chains.assign(chains.size(), {});
  std::function<void(int)> rec = [&](int rank) {
    bool done = true;
    for (size_t c = 0; c < chains.size(); ++c)
      if (pos[c] < chains[c].size()) done = false;
    if (done) {
      Shuffle s = cur;
      s.rank = rank;
      out.push_back(std::move(s));
      if (out.size() > budget.max_objects) throw budget_error("too many shuffles");
      return;
    }
    // choose a nonempty subset of chains to advance at rank+1
    std::vector<int> avail;
    for (size_t c = 0; c < chains.size(); ++c)
      if (pos[c] < chains[c].size()) avail.push_back(static_cast<int>(c));
    int k = static_cast<int>(avail.size());
    if (k >= 31) throw budget_error("too many chains to shuffle");
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      for (int t = 0; t < k; ++t)
        if (mask & (1u << t)) {
          int c = avail[t];
          cur.chains[c].push_back({chains[c][pos[c]], rank + 1});
          ++pos[c];
        }
      rec(rank + 1);
      for (int t = 0; t < k; ++t)
        if (mask & (1u << t)) {
          int c = avail[t];
          --pos[c];
          cur.chains[c].pop_back();
        }
    }
  };
  rec(0);
  return out;
}

Clique grove_shuffle_to_clique(Universe& u, const Grove& g, const Shuffle& s) {
  Vineyard v = grove_to_vineyard(u, g);
  Multiclique m = vineyard_shuffle_to_multiclique(u, v, s);
  return multiclique_to_clique(u, m);
}

std::vector<Clique> enumerate_cliques(Universe& u, const Budget& budget) {
  auto groves = triangulation::enumerate_saturated_groves(u, budget);
  std::set<Clique> faces;
  for (const auto& grove : groves) {
    auto chains = grove_splits(u, grove);
    auto shuffles = enumerate_shuffles(chains, budget);
    for (const auto& s : shuffles) {
      Clique c = grove_shuffle_to_clique(u, grove, s);
      int k = c.rank();
      if (k >= 30) throw budget_error("simplex rank too large for face enumeration");
      // all nonempty subsets of the simplex vertices are faces
      for (unsigned mask = 1; mask < (1u << (k + 1)); ++mask) {
        Clique sub;
        for (int i = 0; i <= k; ++i)
          if (mask & (1u << i)) sub.matchings.push_back(c.matchings[i]);
        faces.insert(std::move(sub));
        if (faces.size() > budget.max_objects) throw budget_error("too many faces");
      }
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace families
}  // namespace pf
