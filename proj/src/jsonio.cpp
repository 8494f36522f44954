#include "permuflow/jsonio.hpp"

#include <limits>
#include <sstream>

namespace pf {
namespace jsonio {

json bigint_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

json rational_json(const BigRat& v) {
  std::stringstream ss;
  ss << numerator(v);
  if (denominator(v) != 1) ss << "/" << denominator(v);
  return ss.str();
}

BigRat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw parse_error("bad rational '" + text + "'");
  }
}

json graph_json(const AugmentedGraph& ag) {
  json j;
  j["n"] = ag.g.n;
  j["m"] = ag.g.m();
  j["dim"] = ag.g.dim();
  j["netflow"] = ag.netflow;
  json edges = json::array();
  for (size_t i = 0; i < ag.g.edges.size(); ++i) {
    const auto& r = ag.g.edges[i];
    json e;
    e["id"] = r.id;
    e["tail"] = r.tail;
    e["head"] = r.head;
    e["name"] = graphcore::edge_name(ag, static_cast<int>(i));
    edges.push_back(e);
  }
  j["edges"] = edges;
  json inorder = json::object(), outorder = json::object();
  for (int v = 0; v <= ag.g.n; ++v) {
    json names = json::array();
    for (int e : ag.in_order_hat[v]) names.push_back(graphcore::edge_name(ag, e));
    inorder[std::to_string(v)] = names;
    names = json::array();
    for (int e : ag.out_order_hat[v]) names.push_back(graphcore::edge_name(ag, e));
    outorder[std::to_string(v)] = names;
  }
  j["inorder"] = inorder;
  j["outorder"] = outorder;
  return j;
}

json flow_json(const IntegerFlow& f) { return json(f); }

json polynomial_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeff) arr.push_back(bigint_json(c));
  return arr;
}

json routes_json(const Universe& u) {
  json per_x = json::array();
  for (int x = 0; x < u.ag.nx; ++x) {
    json routes = json::array();
    for (int r : u.routes_by_x[x]) routes.push_back(paths::route_str(u, r));
    per_x.push_back(routes);
  }
  return per_x;
}

json matching_json(const Universe& u, const RouteMatching& m) {
  json arr = json::array();
  for (int r : m) arr.push_back(paths::route_str(u, r));
  return arr;
}

json clique_json(const Universe& u, const Clique& c) {
  json j;
  j["rank"] = c.rank();
  json ms = json::array();
  for (const auto& m : c.matchings) ms.push_back(matching_json(u, m));
  j["matchings"] = ms;
  return j;
}

json multiclique_json(const Universe& u, const Multiclique& m) {
  json j;
  j["rank"] = m.rank();
  json rows = json::array();
  for (const auto& row : m.rows) {
    json r = json::array();
    for (int route : row) r.push_back(paths::route_str(u, route));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

json grove_json(const Universe& u, const Grove& g) {
  json at = json::array();
  for (size_t v = 0; v < g.at.size(); ++v) {
    json list = json::array();
    for (const auto& [p, e] : g.at[v]) {
      json edge;
      edge["prefix"] = paths::prefix_str(u, p);
      edge["edge"] = graphcore::edge_name(u.ag, e);
      list.push_back(edge);
    }
    at.push_back(list);
  }
  json j;
  j["at"] = at;
  return j;
}

json shuffle_json(const Universe& u, const Shuffle& s) {
  json j;
  j["rank"] = s.rank;
  json chains = json::array();
  for (const auto& chain : s.chains) {
    json c = json::array();
    for (const auto& [split, sigma] : chain) {
      json entry;
      entry["split"] = paths::prefix_str(u, split);
      entry["sigma"] = sigma;
      c.push_back(entry);
    }
    chains.push_back(c);
  }
  j["chains"] = chains;
  return j;
}

json permflow_json(const Universe& u, const PermutationFlow& p) {
  json words = json::object();
  for (size_t e = 0; e < p.words.size(); ++e)
    words[graphcore::edge_name(u.ag, static_cast<int>(e))] =
        permflow::word_str(u, p.words[e]);
  json j;
  j["words"] = words;
  j["summary"] = permflow::word_str(u, permflow::final_summary(u, p));
  return j;
}

json simplex_json(const Universe& u, const triangulation::Simplex& s) {
  json j;
  j["grove"] = grove_json(u, s.grove);
  j["shuffle"] = shuffle_json(u, s.shuffle);
  j["clique"] = clique_json(u, s.clique);
  json verts = json::array();
  for (const auto& f : s.vertices) verts.push_back(flow_json(f));
  j["vertices"] = verts;
  return j;
}

json located_json(const Universe& u, const triangulation::Located& loc) {
  json j;
  j["multiclique"] = multiclique_json(u, loc.multiclique);
  j["clique"] = clique_json(u, loc.clique);
  json ws = json::array();
  for (const auto& w : loc.weights) ws.push_back(rational_json(w));
  j["weights"] = ws;
  return j;
}

json weak_order_json(const Universe& u, const weakorder::WeakOrder& wo) {
  json j;
  j["elements"] = json::array();
  for (const auto& p : wo.elements) j["elements"].push_back(permflow_json(u, p));
  json covers = json::array();
  for (size_t i = 0; i < wo.up.size(); ++i)
    for (const auto& [split, k] : wo.up[i]) {
      json c;
      c["lower"] = i;
      c["upper"] = k;
      c["split"] = graphcore::edge_name(u.ag, split);
      covers.push_back(c);
    }
  j["covers"] = covers;
  j["bottom"] = wo.bottom;
  j["top"] = wo.top;
  j["descents"] = wo.des;
  return j;
}

std::string hasse_dot(const Universe& u, const weakorder::WeakOrder& wo) {
  std::stringstream out;
  out << "digraph weak_order {\n  rankdir=BT;\n";
  for (size_t i = 0; i < wo.elements.size(); ++i)
    out << "  n" << i << " [label=\""
        << permflow::word_str(u, permflow::final_summary(u, wo.elements[i])) << "\"];\n";
  for (size_t i = 0; i < wo.up.size(); ++i)
    for (const auto& [split, k] : wo.up[i])
      out << "  n" << i << " -> n" << k << " [label=\""
          << graphcore::edge_name(u.ag, split) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace jsonio
}  // namespace pf
