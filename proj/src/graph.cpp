#include "permuflow/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pf {

int FramedGraph::out_pos(int e) const {
  const auto& ord = out_order[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].tail)];
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  throw invalid_error("edge missing from out-order of its tail");
}

int FramedGraph::in_pos(int e) const {
  const auto& ord = in_order[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].head)];
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  throw invalid_error("edge missing from in-order of its head");
}

int AugmentedGraph::tail_of(int e) const {
  if (is_full(e)) return g.edges[static_cast<std::size_t>(e)].tail;
  if (is_y(e)) return g.n;
  return -1;
}

int AugmentedGraph::head_of(int e) const {
  if (is_full(e)) return g.edges[static_cast<std::size_t>(e)].head;
  if (is_x(e)) return x_vertex[static_cast<std::size_t>(e - g.m())];
  return -1;
}

int AugmentedGraph::out_pos_hat(int e) const {
  int v = tail_of(e);
  if (v < 0) throw invalid_error("half-edge x has no out position");
  const auto& ord = out_order_hat[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  throw invalid_error("edge missing from augmented out-order");
}

int AugmentedGraph::in_pos_hat(int e) const {
  int v = head_of(e);
  if (v < 0) throw invalid_error("y has no in position");
  const auto& ord = in_order_hat[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  throw invalid_error("edge missing from augmented in-order");
}

int AugmentedGraph::out_pos_hat(int v, int item) const {
  const auto& ord = out_order_hat[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == item) return static_cast<int>(i);
  return -1;
}

namespace graphcore {

FramedGraph build_framed_graph(const GraphSpec& spec) {
  if (spec.n < 1) throw parse_error("graph needs n >= 1");
  FramedGraph g;
  g.n = spec.n;
  g.edges = spec.edges;
  if (g.edges.empty()) throw parse_error("graph has no edges");

  std::map<int, int> by_id;
  for (int e = 0; e < g.m(); ++e) {
    const EdgeRec& r = g.edges[static_cast<std::size_t>(e)];
    if (r.tail < 0 || r.head > g.n) throw parse_error("edge endpoint out of range");
    if (r.tail >= r.head)
      throw invalid_error("edge " + std::to_string(r.id) +
                          " does not increase; framed graphs must be acyclic with edges "
                          "oriented from smaller to larger vertices");
    if (!by_id.emplace(r.id, e).second)
      throw parse_error("duplicate edge id " + std::to_string(r.id));
  }

  // Default framing: declaration order, bottom first.
  g.in_order.assign(static_cast<std::size_t>(g.n) + 1, {});
  g.out_order.assign(static_cast<std::size_t>(g.n) + 1, {});
  for (int e = 0; e < g.m(); ++e) {
    g.out_order[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].tail)].push_back(e);
    g.in_order[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].head)].push_back(e);
  }

  auto apply_order = [&](std::vector<std::vector<int>>& target,
                         const std::vector<std::pair<int, std::vector<int>>>& given,
                         const char* what) {
    for (const auto& [v, ids] : given) {
      if (v < 0 || v > g.n) throw parse_error(std::string(what) + " for vertex out of range");
      std::vector<int> handles;
      for (int id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end())
          throw parse_error(std::string(what) + " mentions unknown edge id " + std::to_string(id));
        handles.push_back(it->second);
      }
      auto& cur = target[static_cast<std::size_t>(v)];
      std::vector<int> a = cur, b = handles;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        throw parse_error(std::string(what) + " for vertex " + std::to_string(v) +
                          " is not a permutation of the incident edges");
      cur = handles;
    }
  };
  apply_order(g.in_order, spec.in_order, "inorder");
  apply_order(g.out_order, spec.out_order, "outorder");

  for (int v = 0; v < g.n; ++v)
    if (g.outdeg(v) == 0)
      throw invalid_error("vertex " + std::to_string(v) + " has no outgoing edge");
  if (g.outdeg(g.n) != 0) throw invalid_error("sink vertex has outgoing edges");
  return g;
}

std::vector<EdgeName> canonical_labels(const FramedGraph& g) {
  std::vector<EdgeName> names(static_cast<std::size_t>(g.m()));
  int next_split = 1;
  for (int v = 0; v < g.n; ++v) {
    const auto& out = g.out_order[static_cast<std::size_t>(v)];
    names[static_cast<std::size_t>(out[0])] = EdgeName{'s', v};
    for (std::size_t i = out.size(); i-- > 1;)
      names[static_cast<std::size_t>(out[i])] = EdgeName{'t', next_split++};
  }
  return names;
}

std::string edge_name(const AugmentedGraph& ag, int aug_id) {
  if (ag.is_full(aug_id)) return canonical_labels(ag.g)[static_cast<std::size_t>(aug_id)].str();
  if (ag.is_x(aug_id)) return "x_" + std::to_string(aug_id - ag.m() + 1);
  if (ag.is_y(aug_id)) return "y";
  throw invalid_error("bad augmented edge id");
}

std::string letter_name(const AugmentedGraph& ag, int aug_id) {
  if (ag.is_full(aug_id)) {
    EdgeName nm = canonical_labels(ag.g)[static_cast<std::size_t>(aug_id)];
    if (nm.kind != 't') throw invalid_error("slack edges cannot appear as letters");
    return std::to_string(nm.index);
  }
  if (ag.is_x(aug_id)) return "x_" + std::to_string(aug_id - ag.m() + 1);
  throw invalid_error("bad letter id");
}

int edge_by_name(const AugmentedGraph& ag, const std::string& name) {
  if (name == "y") return ag.y_id();
  if (name.size() >= 3 && name[0] == 'x' && name[1] == '_') {
    int i = std::stoi(name.substr(2));
    if (i < 1 || i > ag.nx) throw parse_error("no half-edge named " + name);
    return ag.x_id(i - 1);
  }
  auto labels = canonical_labels(ag.g);
  for (int e = 0; e < ag.m(); ++e)
    if (labels[static_cast<std::size_t>(e)].str() == name) return e;
  throw parse_error("no edge named " + name);
}

AugmentedGraph augment(const FramedGraph& g, const std::vector<long long>& netflow,
                       const std::vector<std::pair<int, int>>& placements) {
  if (static_cast<int>(netflow.size()) != g.n + 1)
    throw invalid_error("netflow needs exactly n+1 entries");
  long long total = 0;
  for (int v = 0; v <= g.n; ++v) {
    if (v < g.n && netflow[static_cast<std::size_t>(v)] < 0)
      throw invalid_error("netflow must be nonnegative away from the sink");
    total += netflow[static_cast<std::size_t>(v)];
  }
  if (total != 0) throw invalid_error("netflow entries must sum to zero");
  if (netflow[static_cast<std::size_t>(g.n)] > 0)
    throw invalid_error("sink netflow must be nonpositive");

  AugmentedGraph ag;
  ag.g = g;
  ag.netflow = netflow;

  // Decide per-vertex positions of half-edges within the augmented in-order.
  std::vector<std::vector<int>> pos_at(static_cast<std::size_t>(g.n) + 1);
  std::vector<bool> explicit_at(static_cast<std::size_t>(g.n) + 1, false);
  for (const auto& [v, p] : placements) {
    if (v < 0 || v >= g.n) throw invalid_error("half-edge placed at bad vertex");
    pos_at[static_cast<std::size_t>(v)].push_back(p);
    explicit_at[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < g.n; ++v) {
    long long a = netflow[static_cast<std::size_t>(v)];
    auto& pos = pos_at[static_cast<std::size_t>(v)];
    if (!explicit_at[static_cast<std::size_t>(v)]) {
      for (long long i = 0; i < a; ++i) pos.push_back(static_cast<int>(i));
    }
    if (static_cast<long long>(pos.size()) != a)
      throw invalid_error("vertex " + std::to_string(v) + " needs exactly " + std::to_string(a) +
                          " half-edge placements");
    std::vector<int> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      long long width = static_cast<long long>(g.indeg(v)) + a;
      if (sorted[i] < 0 || sorted[i] >= width)
        throw invalid_error("half-edge position out of range");
      if (i && sorted[i] == sorted[i - 1]) throw invalid_error("half-edge positions collide");
    }
    pos = sorted;
  }

  // Assign half-edge indices by (vertex, position), then interleave.
  ag.nx = 0;
  for (int v = 0; v < g.n; ++v) ag.nx += static_cast<int>(pos_at[static_cast<std::size_t>(v)].size());
  ag.in_order_hat.assign(static_cast<std::size_t>(g.n) + 1, {});
  ag.out_order_hat.assign(static_cast<std::size_t>(g.n) + 1, {});
  int next_x = 0;
  for (int v = 0; v <= g.n; ++v) {
    const auto& base = g.in_order[static_cast<std::size_t>(v)];
    const auto& pos = pos_at[static_cast<std::size_t>(v)];
    std::size_t width = base.size() + pos.size();
    auto& hat = ag.in_order_hat[static_cast<std::size_t>(v)];
    hat.assign(width, -1);
    for (int p : pos) {
      hat[static_cast<std::size_t>(p)] = g.m() + next_x;
      ag.x_vertex.push_back(v);
      ++next_x;
    }
    std::size_t bi = 0;
    for (std::size_t i = 0; i < width; ++i)
      if (hat[i] == -1) hat[i] = base[bi++];
  }
  for (int v = 0; v < g.n; ++v) ag.out_order_hat[static_cast<std::size_t>(v)] = g.out_order[static_cast<std::size_t>(v)];
  ag.out_order_hat[static_cast<std::size_t>(g.n)].push_back(ag.y_id());
  return ag;
}

FramedGraph build_gstar(const AugmentedGraph& ag) {
  // New source 0; old vertex v becomes v+1; half-edges become real edges.
  FramedGraph s;
  s.n = ag.g.n + 1;
  int next_id = 0;
  std::map<int, int> handle_of_aug;  // augmented id -> new handle
  for (int e = 0; e < ag.m(); ++e) {
    const EdgeRec& r = ag.g.edges[static_cast<std::size_t>(e)];
    handle_of_aug[e] = static_cast<int>(s.edges.size());
    s.edges.push_back(EdgeRec{next_id++, r.tail + 1, r.head + 1});
  }
  for (int i = 0; i < ag.nx; ++i) {
    handle_of_aug[ag.x_id(i)] = static_cast<int>(s.edges.size());
    s.edges.push_back(EdgeRec{next_id++, 0, ag.x_vertex[static_cast<std::size_t>(i)] + 1});
  }
  s.in_order.assign(static_cast<std::size_t>(s.n) + 1, {});
  s.out_order.assign(static_cast<std::size_t>(s.n) + 1, {});
  // Source out-order: half-edges in their canonical order.
  for (int i = 0; i < ag.nx; ++i) s.out_order[0].push_back(handle_of_aug[ag.x_id(i)]);
  for (int v = 0; v <= ag.g.n; ++v) {
    for (int e : ag.in_order_hat[static_cast<std::size_t>(v)])
      s.in_order[static_cast<std::size_t>(v) + 1].push_back(handle_of_aug[e]);
    if (v < ag.g.n)
      for (int e : ag.g.out_order[static_cast<std::size_t>(v)])
        s.out_order[static_cast<std::size_t>(v) + 1].push_back(handle_of_aug[e]);
  }
  if (s.out_order[0].empty()) throw invalid_error("source contraction needs positive supply");
  return s;
}

namespace {

GraphSpec oru_spec(const std::vector<int>& s) {
  GraphSpec spec;
  spec.n = static_cast<int>(s.size());
  int id = 0;
  for (int i = 1; i <= spec.n; ++i) {
    int copies = s[static_cast<std::size_t>(i - 1)] + 1;
    if (copies < 1) throw usage_error("oru composition entries must be nonnegative");
    for (int c = 0; c < copies; ++c) spec.edges.push_back(EdgeRec{id++, i - 1, i});
  }
  return spec;
}

GraphSpec car_spec(int n) {
  if (n < 2) throw usage_error("car needs n >= 2");
  GraphSpec spec;
  spec.n = n;
  int id = 0;
  std::vector<int> path(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    path[static_cast<std::size_t>(i - 1)] = id;
    spec.edges.push_back(EdgeRec{id++, i - 1, i});
  }
  std::vector<int> fan_out, fan_in;
  for (int i = 2; i <= n - 1; ++i) {
    fan_out.push_back(id);
    spec.edges.push_back(EdgeRec{id++, 0, i});
  }
  for (int i = 1; i <= n - 2; ++i) {
    fan_in.push_back(id);
    spec.edges.push_back(EdgeRec{id++, i, n});
  }
  // Planar framing: path edges at the bottom, arcs above, nested arcs from
  // the inside out.
  auto push_order = [](std::vector<std::pair<int, std::vector<int>>>& tgt, int v,
                       std::vector<int> ids) { tgt.emplace_back(v, std::move(ids)); };
  {
    std::vector<int> out0 = {path[0]};
    out0.insert(out0.end(), fan_out.begin(), fan_out.end());
    push_order(spec.out_order, 0, out0);
  }
  for (int i = 1; i <= n - 2; ++i)
    push_order(spec.out_order, i, {path[static_cast<std::size_t>(i)], fan_in[static_cast<std::size_t>(i - 1)]});
  for (int i = 2; i <= n - 1; ++i)
    push_order(spec.in_order, i, {path[static_cast<std::size_t>(i - 1)], fan_out[static_cast<std::size_t>(i - 2)]});
  {
    std::vector<int> inn = {path[static_cast<std::size_t>(n - 1)]};
    for (int i = n - 2; i >= 1; --i) inn.push_back(fan_in[static_cast<std::size_t>(i - 1)]);
    push_order(spec.in_order, n, inn);
  }
  return spec;
}

GraphSpec ps_spec(int n) {
  if (n < 1) throw usage_error("ps needs n >= 1");
  GraphSpec spec;
  spec.n = n;
  int id = 0;
  std::vector<int> path, chord;
  for (int i = 1; i <= n; ++i) {
    path.push_back(id);
    spec.edges.push_back(EdgeRec{id++, i - 1, i});
    chord.push_back(id);
    spec.edges.push_back(EdgeRec{id++, i - 1, n});
  }
  for (int i = 0; i < n; ++i)
    spec.out_order.emplace_back(i, std::vector<int>{path[static_cast<std::size_t>(i)], chord[static_cast<std::size_t>(i)]});
  {
    std::vector<int> inn = {path[static_cast<std::size_t>(n - 1)], chord[static_cast<std::size_t>(n - 1)]};
    for (int i = n - 2; i >= 0; --i) inn.push_back(chord[static_cast<std::size_t>(i)]);
    spec.in_order.emplace_back(n, inn);
  }
  return spec;
}

GraphSpec complete_spec(int mv) {
  if (mv < 2) throw usage_error("complete needs at least 2 vertices");
  GraphSpec spec;
  spec.n = mv - 1;
  int id = 0;
  std::map<std::pair<int, int>, int> handle;
  for (int i = 0; i < mv; ++i)
    for (int j = i + 1; j < mv; ++j) {
      handle[{i, j}] = id;
      spec.edges.push_back(EdgeRec{id++, i, j});
    }
  for (int i = 0; i < mv - 1; ++i) {
    std::vector<int> out;
    for (int j = i + 1; j < mv; ++j) out.push_back(handle[{i, j}]);
    spec.out_order.emplace_back(i, out);
  }
  for (int j = 1; j < mv; ++j) {
    std::vector<int> inn;
    for (int i = j - 1; i >= 0; --i) inn.push_back(handle[{i, j}]);
    spec.in_order.emplace_back(j, inn);
  }
  return spec;
}

}  // namespace

GraphSpec named_graph(const std::string& family, const std::vector<int>& params) {
  if (family == "oru") {
    if (params.size() == 1) return oru_spec(std::vector<int>(static_cast<std::size_t>(params[0]), 1));
    if (params.size() >= 2) return oru_spec(params);
    throw usage_error("oru needs n or a composition");
  }
  if (family == "car") {
    if (params.size() != 1) throw usage_error("car needs exactly one parameter");
    return car_spec(params[0]);
  }
  if (family == "ps") {
    if (params.size() != 1) throw usage_error("ps needs exactly one parameter");
    return ps_spec(params[0]);
  }
  if (family == "complete") {
    if (params.size() != 1) throw usage_error("complete needs exactly one parameter");
    return complete_spec(params[0]);
  }
  throw usage_error("unknown named family '" + family + "'");
}

GraphSpec named_graph(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw usage_error("named graph must look like family:params");
  std::string family = descriptor.substr(0, colon);
  std::vector<int> params;
  std::string rest = descriptor.substr(colon + 1);
  std::stringstream ss(rest);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw usage_error("empty parameter in named graph descriptor");
    params.push_back(std::stoi(tok));
  }
  return named_graph(family, params);
}

void twist_in_orders(FramedGraph& g) {
  for (auto& ord : g.in_order) std::reverse(ord.begin(), ord.end());
}

GraphSpec parse_fg(std::istream& in) {
  GraphSpec spec;
  std::string line;
  int lineno = 0;
  bool saw_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::stringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    auto want_int = [&](const char* what) {
      long long v;
      if (!(ss >> v))
        throw parse_error("line " + std::to_string(lineno) + ": expected " + what);
      return v;
    };
    if (key == "n") {
      spec.n = static_cast<int>(want_int("vertex count"));
      saw_n = true;
    } else if (key == "edge") {
      EdgeRec r;
      r.id = static_cast<int>(want_int("edge id"));
      r.tail = static_cast<int>(want_int("edge tail"));
      r.head = static_cast<int>(want_int("edge head"));
      spec.edges.push_back(r);
    } else if (key == "inorder" || key == "outorder") {
      int v = static_cast<int>(want_int("vertex"));
      std::vector<int> ids;
      long long id;
      while (ss >> id) ids.push_back(static_cast<int>(id));
      if (key == "inorder")
        spec.in_order.emplace_back(v, ids);
      else
        spec.out_order.emplace_back(v, ids);
    } else if (key == "netflow") {
      std::vector<long long> a;
      long long v;
      while (ss >> v) a.push_back(v);
      if (a.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty netflow");
      spec.netflow = a;
    } else if (key == "halfedge") {
      GraphSpec::HalfEdge h;
      h.id = static_cast<int>(want_int("half-edge id"));
      h.vertex = static_cast<int>(want_int("half-edge vertex"));
      h.position = static_cast<int>(want_int("half-edge position"));
      spec.halfedges.push_back(h);
    } else {
      throw parse_error("line " + std::to_string(lineno) + ": unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ss >> extra)
      throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (!saw_n) throw parse_error("missing 'n' line");
  return spec;
}

GraphSpec parse_fg_string(const std::string& text) {
  std::stringstream ss(text);
  return parse_fg(ss);
}

AugmentedGraph build_augmented(const GraphSpec& spec) {
  FramedGraph g = build_framed_graph(spec);
  std::vector<long long> a;
  if (spec.netflow) {
    a = *spec.netflow;
    if (static_cast<int>(a.size()) != g.n + 1)
      throw parse_error("netflow needs n+1 entries");
  } else {
    a.assign(static_cast<std::size_t>(g.n) + 1, 0);
    a[0] = 1;
    a[static_cast<std::size_t>(g.n)] = -1;
  }
  std::vector<std::pair<int, int>> placements;
  for (const auto& h : spec.halfedges) placements.emplace_back(h.vertex, h.position);
  return augment(g, a, placements);
}

std::string write_fg(const AugmentedGraph& ag) {
  std::stringstream out;
  out << "n " << ag.g.n << "\n";
  for (const EdgeRec& r : ag.g.edges)
    out << "edge " << r.id << " " << r.tail << " " << r.head << "\n";
  for (int v = 0; v <= ag.g.n; ++v) {
    if (ag.g.indeg(v) == 0) continue;
    out << "inorder " << v;
    for (int e : ag.g.in_order[static_cast<std::size_t>(v)])
      out << " " << ag.g.edges[static_cast<std::size_t>(e)].id;
    out << "\n";
  }
  for (int v = 0; v < ag.g.n; ++v) {
    out << "outorder " << v;
    for (int e : ag.g.out_order[static_cast<std::size_t>(v)])
      out << " " << ag.g.edges[static_cast<std::size_t>(e)].id;
    out << "\n";
  }
  out << "netflow";
  for (long long a : ag.netflow) out << " " << a;
  out << "\n";
  for (int i = 0; i < ag.nx; ++i) {
    int v = ag.x_vertex[static_cast<std::size_t>(i)];
    out << "halfedge " << i << " " << v << " " << ag.in_pos_hat(ag.x_id(i)) << "\n";
  }
  return out.str();
}

}  // namespace graphcore
}  // namespace pf
