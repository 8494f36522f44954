#include "permuflow/triangulation.hpp"

#include "permuflow/permflow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace pf {
namespace triangulation {

namespace {

// d = sum over v of (outdeg(v) - 1); equals the polytope dimension.
std::vector<long long> outdeg_excess(const FramedGraph& g) {
  std::vector<long long> o(g.n);
  for (int v = 0; v < g.n; ++v) o[v] = g.outdeg(v) - 1;
  return o;
}

// Monotone staircase paths on a p x q grid; each visited cell is a tree edge.
void for_each_staircase(int p, int q, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> cells;
  std::function<void(int, int)> rec = [&](int i, int j) {
    cells.push_back({i, j});
    if (i == p - 1 && j == q - 1) {
      fn(cells);
    } else {
      if (j + 1 < q) rec(i, j + 1);
      if (i + 1 < p) rec(i + 1, j);
    }
    cells.pop_back();
  };
  rec(0, 0);
}

std::vector<int> split_edges(const AugmentedGraph& ag) {
  std::vector<int> out;
  for (size_t e = 0; e < ag.g.edges.size(); ++e)
    if (ag.out_pos_hat(ag.g.edges[e].tail, static_cast<int>(e)) > 0) out.push_back(static_cast<int>(e));
  return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

std::vector<Grove> enumerate_saturated_groves(Universe& u, const Budget& budget) {
  const auto& ag = u.ag;
  int n = ag.g.n;
  size_t m = ag.g.edges.size();
  std::vector<Grove> out;
  Grove work;
  work.at.assign(n + 1, {});
  // carried[e] = prefixes routed through edge e, already extended, in the
  // order fixed at the tail; concatenating over the augmented in-order of a
  // vertex yields its arriving prefixes in canonical order.
  std::vector<std::vector<int>> carried(m);
  auto arriving = [&](int v) {
    std::vector<int> lefts;
    for (int item : ag.in_order_hat[v]) {
      if (ag.is_x(item))
        lefts.push_back(u.x_roots[item - static_cast<int>(m)]);
      else
        lefts.insert(lefts.end(), carried[item].begin(), carried[item].end());
    }
    return lefts;
  };

  std::function<void(int)> sweep = [&](int v) {
    if (v == n) {
      Grove g = work;
      for (int p : arriving(n)) g.at[n].push_back({p, ag.y_id()});
      families::canonicalize_grove(u, g);
      out.push_back(std::move(g));
      if (out.size() > budget.max_objects) throw budget_error("too many saturated groves");
      return;
    }
    std::vector<int> lefts = arriving(v);
    const auto& rights = ag.out_order_hat[v];
    int p = static_cast<int>(lefts.size());
    int q = static_cast<int>(rights.size());
    if (p == 0) return;  // no flow reaches v, so its edges can never be covered
    for_each_staircase(p, q, [&](const std::vector<std::pair<int, int>>& cells) {
      for (const auto& [i, j] : cells) {
        work.at[v].push_back({lefts[i], rights[j]});
        carried[rights[j]].push_back(u.extend(lefts[i], rights[j]));
      }
      sweep(v + 1);
      work.at[v].clear();
      for (int e : rights) carried[e].clear();
    });
  };
  sweep(0);
  return out;
}

std::vector<Simplex> triangulate(Universe& u, const Budget& budget) {
  std::vector<Simplex> out;
  auto groves = enumerate_saturated_groves(u, budget);
  int d = u.ag.dim();
  for (const auto& grove : groves) {
    auto chains = families::grove_splits(u, grove);
    for (auto& s : families::enumerate_shuffles(chains, budget)) {
      if (s.rank != d) continue;  // only strict interleavings span top simplices
      Simplex simplex;
      simplex.grove = grove;
      simplex.shuffle = s;
      simplex.clique = families::grove_shuffle_to_clique(u, grove, s);
      for (const auto& matching : simplex.clique.matchings)
        simplex.vertices.push_back(flows::indicator_flow(u, matching));
      out.push_back(std::move(simplex));
      if (out.size() > budget.max_objects) throw budget_error("too many simplices");
    }
  }
  return out;
}

BigInt simplex_determinant(const Universe& u, const Simplex& s) {
  auto cols = split_edges(u.ag);
  size_t d = cols.size();
  if (s.vertices.size() != d + 1) throw invalid_error("simplex does not have dimension-plus-one vertices");
  std::vector<std::vector<BigInt>> mat(d, std::vector<BigInt>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      mat[i][j] = BigInt(s.vertices[i + 1][cols[j]]) - BigInt(s.vertices[0][cols[j]]);
  return bareiss_determinant(std::move(mat));
}

bool unimodular_check(Universe& u, const Budget& budget) {
  for (const auto& s : triangulate(u, budget)) {
    BigInt det = simplex_determinant(u, s);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

BigInt volume_by_count(Universe& u, const Budget& budget) {
  BigInt total = 0;
  long long d = u.ag.dim();
  for (const auto& grove : enumerate_saturated_groves(u, budget)) {
    auto chains = families::grove_splits(u, grove);
    std::vector<long long> lens;
    for (const auto& c : chains) lens.push_back(static_cast<long long>(c.size()));
    long long sum = std::accumulate(lens.begin(), lens.end(), 0LL);
    if (sum != d) throw violation_error("saturated grove does not have full rank");
    total += multinomial(lens);
  }
  return total;
}

BigInt volume_lidskii(const AugmentedGraph& ag, const Budget& budget) {
  const auto& g = ag.g;
  long long d = ag.dim();
  auto o = outdeg_excess(g);
  BigInt total = 0;
  for_each_weak_composition(d, ag.nx, [&](const std::vector<long long>& j) {
    std::vector<long long> netflow(g.n + 1, 0);
    for (int x = 0; x < ag.nx; ++x) netflow[ag.x_vertex[x]] += j[x];
    for (int v = 0; v < g.n; ++v) netflow[v] -= o[v];
    BigInt k = flows::kostant(g, netflow, budget);
    if (k != 0) total += multinomial(j) * k;
  });
  return total;
}

BigInt volume_lidskii_classic(const AugmentedGraph& ag, const Budget& budget) {
  const auto& g = ag.g;
  long long d = ag.dim();
  auto o = outdeg_excess(g);
  BigInt total = 0;
  for_each_weak_composition(d, g.n, [&](const std::vector<long long>& j) {
    if (!dominates(j, o)) return;
    std::vector<long long> netflow(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) netflow[v] = j[v] - o[v];
    BigInt k = flows::kostant(g, netflow, budget);
    if (k == 0) return;
    BigInt coeff = multinomial(j);
    for (int v = 0; v < g.n; ++v) coeff *= ipow(BigInt(ag.netflow[v]), j[v]);
    total += coeff * k;
  });
  return total;
}

BigInt volume_outdegree(const FramedGraph& g, const Budget& budget) {
  auto o = outdeg_excess(g);
  std::vector<long long> netflow(g.n + 1, 0);
  netflow[0] = g.dim() - o[0];
  for (int v = 1; v < g.n; ++v) netflow[v] = -o[v];
  return flows::kostant(g, netflow, budget);
}

BigInt volume_indegree(const FramedGraph& g, const Budget& budget) {
  std::vector<long long> netflow(g.n + 1, 0);
  long long total = 0;
  for (int v = 1; v < g.n; ++v) {
    netflow[v] = g.indeg(v) - 1;
    total += netflow[v];
  }
  netflow[g.n] = -total;
  return flows::kostant(g, netflow, budget);
}

BigInt count_unshuffled_formula(const AugmentedGraph& ag, const Budget& budget) {
  const auto& g = ag.g;
  long long d = ag.dim();
  auto o = outdeg_excess(g);
  BigInt total = 0;
  for_each_weak_composition(d, ag.nx, [&](const std::vector<long long>& j) {
    std::vector<long long> netflow(g.n + 1, 0);
    for (int x = 0; x < ag.nx; ++x) netflow[ag.x_vertex[x]] += j[x];
    for (int v = 0; v < g.n; ++v) netflow[v] -= o[v];
    total += flows::kostant(g, netflow, budget);
  });
  return total;
}

BigInt count_unshuffled_star(const AugmentedGraph& ag, const Budget& budget) {
  FramedGraph star = graphcore::build_gstar(ag);
  auto o = outdeg_excess(ag.g);
  std::vector<long long> netflow(star.n + 1, 0);
  netflow[0] = ag.dim();
  for (int v = 0; v < ag.g.n; ++v) netflow[v + 1] = -o[v];
  return flows::kostant(star, netflow, budget);
}

BigInt count_unshuffled_star_volume(const AugmentedGraph& ag, const Budget& budget) {
  FramedGraph star = graphcore::build_gstar(ag);
  std::vector<long long> unit(star.n + 1, 0);
  unit[0] = 1;
  unit[star.n] = -1;
  AugmentedGraph star_hat = graphcore::augment(star, unit, {});
  Universe su(star_hat);
  return volume_by_count(su, budget);
}

BigInt count_saturated_permflows(const Universe& u, const Budget& budget) {
  return flows::kostant(u.ag.g, permflow::shifted_netflow(u.ag), budget);
}

IntegerFlow grove_composition_flow(Universe& u, const Grove& g) {
  Vineyard v = families::grove_to_vineyard(u, g);
  auto kids_of = [&]() {
    std::map<int, std::vector<int>> kids;
    for (int p : v.prefixes) {
      const auto& node = u.pool.at(p);
      if (node.parent >= 0) kids[node.parent].push_back(p);
    }
    for (auto& [parent, list] : kids) {
      int v0 = u.pool.at(parent).vertex;
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return u.ag.out_pos_hat(v0, u.pool.at(a).edge) < u.ag.out_pos_hat(v0, u.pool.at(b).edge);
      });
    }
    return kids;
  }();
  // number of splits strictly inside the chain subtree of each prefix
  std::map<int, long long> size;
  std::function<long long(int)> subtree = [&](int p) -> long long {
    auto it = size.find(p);
    if (it != size.end()) return it->second;
    long long total = 0;
    auto kt = kids_of.find(p);
    if (kt != kids_of.end()) {
      const auto& list = kt->second;
      for (size_t i = 0; i < list.size(); ++i)
        total += subtree(list[i]) + (i == 0 ? 0 : 1);
    }
    size[p] = total;
    return total;
  };
  IntegerFlow flow(u.ag.g.edges.size(), 0);
  for (int p : v.prefixes) {
    const auto& node = u.pool.at(p);
    if (node.parent >= 0) flow[node.edge] += subtree(p);
  }
  return flow;
}

bool composition_fiber_check(Universe& u, const std::vector<long long>& j, const Budget& budget) {
  const auto& ag = u.ag;
  if (static_cast<int>(j.size()) != ag.nx) throw invalid_error("composition length must match the half-edges");
  auto o = outdeg_excess(ag.g);
  std::vector<long long> netflow(ag.g.n + 1, 0);
  for (int x = 0; x < ag.nx; ++x) netflow[ag.x_vertex[x]] += j[x];
  for (int v = 0; v < ag.g.n; ++v) netflow[v] -= o[v];

  std::set<IntegerFlow> images;
  for (const auto& grove : enumerate_saturated_groves(u, budget)) {
    auto chains = families::grove_splits(u, grove);
    bool match = true;
    for (int x = 0; x < ag.nx; ++x)
      if (static_cast<long long>(chains[x].size()) != j[x]) match = false;
    if (!match) continue;
    IntegerFlow f = grove_composition_flow(u, grove);
    if (!images.insert(f).second) return false;  // not injective
  }
  auto target = flows::enumerate_integer_flows(ag.g, netflow, budget);
  std::set<IntegerFlow> expected(target.begin(), target.end());
  return images == expected;
}

Located locate_point(Universe& u, const std::vector<BigRat>& point) {
  const auto& ag = u.ag;
  size_t m = ag.g.edges.size();
  if (point.size() != m) throw invalid_error("point length does not match the edge count");
  for (size_t e = 0; e < m; ++e)
    if (point[e] < 0) throw invalid_error("point has a negative coordinate");
  for (int v = 0; v <= ag.g.n; ++v) {
    BigRat balance = ag.netflow[v];
    for (size_t e = 0; e < m; ++e) {
      if (ag.g.edges[e].head == v) balance += point[e];
      if (ag.g.edges[e].tail == v) balance -= point[e];
    }
    if (balance != 0) throw invalid_error("point does not satisfy flow conservation");
  }

  // sweep: split arriving mass intervals across outgoing edge intervals
  std::map<int, std::vector<std::pair<int, BigRat>>> carried;  // edge -> (prefix, mass)
  std::vector<std::pair<int, BigRat>> final_routes;            // in arrival order at the sink
  for (int v = 0; v <= ag.g.n; ++v) {
    std::vector<std::pair<int, BigRat>> arriving;
    for (int item : ag.in_order_hat[v]) {
      if (ag.is_x(item)) {
        arriving.push_back({u.x_roots[item - static_cast<int>(m)], BigRat(1)});
      } else {
        for (auto& pm : carried[item]) arriving.push_back(pm);
      }
    }
    if (v == ag.g.n) {
      final_routes = arriving;
      break;
    }
    BigRat apos = 0;
    size_t oi = 0;
    BigRat bpos = 0, blen = oi < ag.out_order_hat[v].size() ? BigRat(point[ag.out_order_hat[v][oi]]) : BigRat(0);
    for (const auto& [prefix, mass] : arriving) {
      BigRat aend = apos + mass;
      while (apos < aend) {
        while (oi < ag.out_order_hat[v].size() && bpos + blen <= apos) {
          bpos += blen;
          ++oi;
          if (oi < ag.out_order_hat[v].size()) blen = point[ag.out_order_hat[v][oi]];
        }
        if (oi >= ag.out_order_hat[v].size())
          throw violation_error("mass remains after the outgoing intervals are exhausted");
        int e = ag.out_order_hat[v][oi];
        BigRat take = std::min(aend, BigRat(bpos + blen)) - apos;
        if (take > 0) carried[e].push_back({u.extend(prefix, e), take});
        if (bpos + blen <= aend && bpos + blen > apos) {
          apos = bpos + blen;
        } else {
          apos = aend;
        }
      }
      apos = aend;
    }
  }

  // per-half-edge breakpoints inside (0, 1), pooled; each half-edge's routes
  // accumulate in the route order, not in their arrival order at the sink
  std::vector<std::vector<std::pair<int, BigRat>>> per_x(ag.nx);
  for (const auto& [route, mass] : final_routes) per_x[u.x_of(route)].push_back({route, mass});
  for (auto& list : per_x)
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return families::route_less(u, a.first, b.first);
    });
  std::set<BigRat> cuts;
  for (int x = 0; x < ag.nx; ++x) {
    BigRat acc = 0;
    for (const auto& [route, mass] : per_x[x]) {
      acc += mass;
      if (acc < 1) cuts.insert(acc);
    }
    if (acc != 1) throw violation_error("half-edge mass does not add to one");
  }
  std::vector<BigRat> bounds{BigRat(0)};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(BigRat(1));

  Located loc;
  loc.multiclique.rows.assign(ag.nx, {});
  for (size_t jcol = 0; jcol + 1 < bounds.size(); ++jcol) {
    loc.weights.push_back(bounds[jcol + 1] - bounds[jcol]);
    for (int x = 0; x < ag.nx; ++x) {
      BigRat acc = 0;
      int chosen = -1;
      for (const auto& [route, mass] : per_x[x]) {
        if (acc <= bounds[jcol] && bounds[jcol + 1] <= acc + mass) {
          chosen = route;
          break;
        }
        acc += mass;
      }
      if (chosen < 0) throw violation_error("pooled interval misses a route interval");
      loc.multiclique.rows[x].push_back(chosen);
    }
  }
  families::validate_multiclique(u, loc.multiclique);
  loc.clique = families::multiclique_to_clique(u, loc.multiclique);

  // exact reconstruction guard
  std::vector<BigRat> recon(m, BigRat(0));
  for (size_t jcol = 0; jcol < loc.weights.size(); ++jcol) {
    RouteMatching col(ag.nx);
    for (int x = 0; x < ag.nx; ++x) col[x] = loc.multiclique.rows[x][jcol];
    IntegerFlow f = flows::indicator_flow(u, col);
    for (size_t e = 0; e < m; ++e) recon[e] += loc.weights[jcol] * BigRat(f[e]);
  }
  for (size_t e = 0; e < m; ++e)
    if (recon[e] != point[e]) throw violation_error("barycentric reconstruction mismatch");
  return loc;
}

std::vector<IntegerFlow> polytope_vertices(const FramedGraph& g,
                                           const std::vector<long long>& netflow,
                                           const Budget& budget) {
  size_t m = g.edges.size();
  if (m > 22) throw budget_error("too many edges for vertex enumeration");
  if (netflow.size() != static_cast<size_t>(g.n + 1)) throw invalid_error("netflow length mismatch");
  std::set<IntegerFlow> found;

  std::vector<int> chosen;
  std::vector<int> parent(g.n + 1);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };

  std::function<void(size_t)> rec = [&](size_t e) {
    if (e == m) {
      // solve the tree flows by peeling degree-one vertices
      std::vector<long long> residual(netflow.begin(), netflow.end());
      std::vector<long long> flow(m, 0);
      std::vector<bool> in_set(m, false);
      for (int idx : chosen) in_set[idx] = true;
      std::vector<int> degree(g.n + 1, 0);
      for (int idx : chosen) {
        ++degree[g.edges[idx].tail];
        ++degree[g.edges[idx].head];
      }
      std::vector<bool> solved(m, false);
      size_t remaining = chosen.size();
      bool ok = true;
      while (remaining > 0 && ok) {
        bool progress = false;
        for (int v = 0; v <= g.n && !progress; ++v) {
          if (degree[v] != 1) continue;
          for (int idx : chosen) {
            if (solved[idx]) continue;
            const auto& ed = g.edges[idx];
            if (ed.tail != v && ed.head != v) continue;
            long long value = ed.tail == v ? residual[v] : -residual[v];
            if (value < 0) {
              ok = false;
              break;
            }
            flow[idx] = value;
            solved[idx] = true;
            residual[ed.tail] -= value;
            residual[ed.head] += value;
            --degree[ed.tail];
            --degree[ed.head];
            --remaining;
            progress = true;
            break;
          }
          if (!ok) break;
        }
        if (!progress) break;
      }
      if (!ok || remaining > 0) return;
      for (int v = 0; v <= g.n; ++v)
        if (residual[v] != 0) return;
      found.insert(flow);
      if (found.size() > budget.max_objects) throw budget_error("too many polytope vertices");
      return;
    }
    rec(e + 1);  // exclude
    int a = find(g.edges[e].tail), b = find(g.edges[e].head);
    if (a != b) {  // include only when it keeps the support a forest
      std::vector<int> saved = parent;
      parent[a] = b;
      chosen.push_back(static_cast<int>(e));
      rec(e + 1);
      chosen.pop_back();
      parent = saved;
    }
  };
  for (int v = 0; v <= g.n; ++v) parent[v] = v;
  rec(0);
  return {found.begin(), found.end()};
}

}  // namespace triangulation
}  // namespace pf
