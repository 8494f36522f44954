#include "permuflow/flows.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pf {
namespace flows {

namespace {

long long netflow_sum(const std::vector<long long>& a) {
  return std::accumulate(a.begin(), a.end(), 0LL);
}

}  // namespace

BigInt kostant(const FramedGraph& g, const std::vector<long long>& netflow,
               const Budget& budget) {
  if (static_cast<int>(netflow.size()) != g.n + 1)
    throw invalid_error("netflow needs n+1 entries");
  if (netflow_sum(netflow) != 0) return 0;

  // Sweep vertices in order; a state is the accumulated inflow of the not yet
  // processed vertices v..n, so it starts with n+1 entries and loses one per
  // step.  Merge equal states and add their counts.
  using State = std::vector<long long>;
  std::map<State, BigInt> cur;
  cur[State(static_cast<std::size_t>(g.n) + 1, 0)] = 1;
  std::uint64_t states_seen = 1;

  for (int v = 0; v < g.n; ++v) {
    std::map<State, BigInt> next;
    const auto& out = g.out_order[static_cast<std::size_t>(v)];
    for (const auto& [state, ways] : cur) {
      long long supply = state[0] + netflow[static_cast<std::size_t>(v)];
      if (supply < 0) continue;
      for_each_weak_composition(supply, static_cast<int>(out.size()),
                                [&](const std::vector<long long>& parts) {
        State nxt(state.begin() + 1, state.end());
        for (std::size_t i = 0; i < out.size(); ++i) {
          int head = g.edges[static_cast<std::size_t>(out[i])].head;
          nxt[static_cast<std::size_t>(head - v - 1)] += parts[i];
        }
        auto [it, inserted] = next.emplace(std::move(nxt), ways);
        if (!inserted)
          it->second += ways;
        else if (++states_seen > budget.max_dp_states)
          throw budget_error("flow-count dynamic program exceeded state budget");
      });
    }
    cur = std::move(next);
  }

  BigInt total = 0;
  for (const auto& [state, ways] : cur)
    if (state[0] + netflow[static_cast<std::size_t>(g.n)] == 0) total += ways;
  return total;
}

namespace {

// Depth-first distribution of the arriving supply over the out-edges of each
// vertex in sweep order.  Local classes cannot hold member templates, hence
// namespace scope.
struct FlowEnumerator {
  const FramedGraph& g;
  const std::vector<long long>& netflow;
  const Budget& budget;
  IntegerFlow& flow;
  std::vector<long long>& acc;
  std::vector<IntegerFlow>& out;

  void at_vertex(int v) {
    if (v == g.n) {
      if (acc[static_cast<std::size_t>(v)] + netflow[static_cast<std::size_t>(v)] == 0) {
        if (out.size() + 1 > budget.max_objects)
          throw budget_error("flow enumeration exceeded budget");
        out.push_back(flow);
      }
      return;
    }
    long long supply = acc[static_cast<std::size_t>(v)] + netflow[static_cast<std::size_t>(v)];
    if (supply < 0) return;
    const auto& outs = g.out_order[static_cast<std::size_t>(v)];
    distribute(v, 0, supply, outs);
  }

  void distribute(int v, std::size_t i, long long rest, const std::vector<int>& outs) {
    if (i + 1 == outs.size()) {
      apply(outs[i], rest, [&] { at_vertex(v + 1); });
      return;
    }
    for (long long take = 0; take <= rest; ++take)
      apply(outs[i], take, [&] { distribute(v, i + 1, rest - take, outs); });
  }

  template <typename Fn>
  void apply(int e, long long amount, Fn&& fn) {
    int head = g.edges[static_cast<std::size_t>(e)].head;
    flow[static_cast<std::size_t>(e)] = amount;
    acc[static_cast<std::size_t>(head)] += amount;
    fn();
    acc[static_cast<std::size_t>(head)] -= amount;
    flow[static_cast<std::size_t>(e)] = 0;
  }
};

}  // namespace

std::vector<IntegerFlow> enumerate_integer_flows(const FramedGraph& g,
                                                 const std::vector<long long>& netflow,
                                                 const Budget& budget) {
  if (static_cast<int>(netflow.size()) != g.n + 1)
    throw invalid_error("netflow needs n+1 entries");
  std::vector<IntegerFlow> out_flows;
  if (netflow_sum(netflow) != 0) return out_flows;

  IntegerFlow flow(static_cast<std::size_t>(g.m()), 0);
  std::vector<long long> acc(static_cast<std::size_t>(g.n) + 1, 0);
  FlowEnumerator rec{g, netflow, budget, flow, acc, out_flows};
  rec.at_vertex(0);
  return out_flows;
}

IntegerFlow indicator_flow(const Universe& u, const std::vector<int>& matching) {
  if (static_cast<int>(matching.size()) != u.ag.nx)
    throw invalid_error("matching needs one route per half-edge");
  IntegerFlow flow(static_cast<std::size_t>(u.ag.m()), 0);
  for (int i = 0; i < u.ag.nx; ++i) {
    int route = matching[static_cast<std::size_t>(i)];
    if (u.x_of(route) != i) throw invalid_error("matching route attached to wrong half-edge");
    if (u.end_vertex(route) != u.ag.g.n) throw invalid_error("matching entry is not a route");
    for (int item : u.pool.items(route))
      if (u.ag.is_full(item)) ++flow[static_cast<std::size_t>(item)];
  }
  return flow;
}

std::vector<int> route_matching_from_flow(Universe& u, const IntegerFlow& flow) {
  const FramedGraph& g = u.ag.g;
  if (static_cast<int>(flow.size()) != g.m()) throw invalid_error("flow needs one value per edge");
  for (long long f : flow)
    if (f < 0) throw invalid_error("flow must be nonnegative");
  // Conservation against the augmented netflow.
  for (int v = 0; v <= g.n; ++v) {
    long long in = u.ag.netflow[static_cast<std::size_t>(v)];
    for (int e : g.in_order[static_cast<std::size_t>(v)]) in += flow[static_cast<std::size_t>(e)];
    long long out = 0;
    for (int e : (v < g.n ? g.out_order[static_cast<std::size_t>(v)] : std::vector<int>{}))
      out += flow[static_cast<std::size_t>(e)];
    if (v < g.n ? in != out : in != 0)
      throw invalid_error("flow does not satisfy conservation for this netflow");
  }

  // Noncrossing distribution: at each vertex the arriving prefixes, read in
  // the augmented in-order, continue along the out-edges in framing order,
  // each edge taking as many consecutive prefixes as its flow value.
  std::vector<std::vector<int>> carried(static_cast<std::size_t>(g.m()));
  std::vector<int> finished;
  for (int v = 0; v <= g.n; ++v) {
    std::vector<int> arriving;
    for (int item : u.ag.in_order_hat[static_cast<std::size_t>(v)]) {
      if (u.ag.is_x(item))
        arriving.push_back(u.x_roots[static_cast<std::size_t>(item - u.ag.m())]);
      else
        for (int p : carried[static_cast<std::size_t>(item)]) arriving.push_back(p);
    }
    if (v == g.n) {
      finished = arriving;
      break;
    }
    std::size_t pos = 0;
    for (int e : g.out_order[static_cast<std::size_t>(v)]) {
      long long take = flow[static_cast<std::size_t>(e)];
      for (long long k = 0; k < take; ++k) {
        if (pos >= arriving.size()) throw invalid_error("flow distribution ran out of prefixes");
        carried[static_cast<std::size_t>(e)].push_back(u.extend(arriving[pos++], e));
      }
    }
    if (pos != arriving.size()) throw invalid_error("flow distribution left prefixes behind");
  }

  std::vector<int> matching(static_cast<std::size_t>(u.ag.nx), -1);
  for (int route : finished) {
    int x = u.x_of(route);
    if (matching[static_cast<std::size_t>(x)] != -1)
      throw violation_error("two routes reached the sink from the same half-edge");
    matching[static_cast<std::size_t>(x)] = route;
  }
  for (int r : matching)
    if (r < 0) throw violation_error("some half-edge lost its unit of flow");
  return matching;
}

Polynomial ehrhart_hstar_oracle(const AugmentedGraph& ag, const Budget& budget) {
  int d = ag.dim();
  if (d < 0) throw invalid_error("graph has more vertices than edges");
  std::vector<BigInt> lattice(static_cast<std::size_t>(d) + 1);
  for (int t = 0; t <= d; ++t) {
    std::vector<long long> scaled(ag.netflow.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = ag.netflow[i] * t;
    lattice[static_cast<std::size_t>(t)] = kostant(ag.g, scaled, budget);
  }
  Polynomial h;
  h.coeff.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    BigInt c = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term = binomial(d + 1, i) * lattice[static_cast<std::size_t>(j - i)];
      c += (i % 2 == 0) ? term : -term;
    }
    h.coeff[static_cast<std::size_t>(j)] = c;
  }
  h.trim();
  return h;
}

}  // namespace flows
}  // namespace pf
