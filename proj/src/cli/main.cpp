// Command-line front end: loads a framed graph (from a .fg file or a named
// family), runs one verb, prints JSON to stdout.  Diagnostics go to stderr.
// Exit codes: 0 success, 1 internal error, 2 usage/parse/input/budget
// problems, 3 a structural identity failed on this instance (the instance is
// dumped to stderr so the failure can be replayed).

#include "permuflow/families.hpp"
#include "permuflow/flows.hpp"
#include "permuflow/graph.hpp"
#include "permuflow/jsonio.hpp"
#include "permuflow/paths.hpp"
#include "permuflow/permflow.hpp"
#include "permuflow/triangulation.hpp"
#include "permuflow/weakorder.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using pf::AugmentedGraph;
using pf::BigInt;
using pf::BigRat;
using pf::Budget;
using pf::FramedGraph;
using pf::GraphSpec;
using pf::IntegerFlow;
using pf::Universe;
using json = pf::jsonio::json;

struct Options {
  std::string graph_file;
  std::string named;
  std::string netflow;
  std::string framing = "planar";
  std::uint64_t max_objects = Budget{}.max_objects;
  std::uint64_t max_dp_states = Budget{}.max_dp_states;
  std::uint64_t seed = 0;
  int jobs = 1;  // accepted for interface stability; enumeration is sequential

  std::string family = "groves";
  std::string method = "all";
  bool export_dot = false;
  std::string point;
  int random_points = 0;
  std::string descriptor;  // `named` verb
};

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--graph", opt.graph_file, "framed graph file (.fg)");
  cmd->add_option("--named", opt.named, "named family, e.g. oru:3, car:5, ps:3, complete:4");
  cmd->add_option("--netflow", opt.netflow, "comma-separated netflow override, e.g. 1,1,1,-3");
  cmd->add_option("--framing", opt.framing, "planar (default) or twisted (in-orders reversed)");
  cmd->add_option("--budget", opt.max_objects, "cap on enumerated objects");
  cmd->add_option("--dp-budget", opt.max_dp_states, "cap on dynamic-program states");
  cmd->add_option("--jobs", opt.jobs, "worker count (output is order-independent)");
}

std::vector<long long> parse_netflow(const std::string& text) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw pf::parse_error("bad netflow entry '" + item + "'");
    }
    pos = comma + 1;
  }
  return out;
}

AugmentedGraph load_instance(const Options& opt) {
  GraphSpec spec;
  if (!opt.graph_file.empty() && !opt.named.empty())
    throw pf::usage_error("give either --graph or --named, not both");
  if (!opt.graph_file.empty()) {
    std::ifstream in(opt.graph_file);
    if (!in) throw pf::usage_error("cannot open '" + opt.graph_file + "'");
    spec = pf::graphcore::parse_fg(in);
  } else if (!opt.named.empty()) {
    spec = pf::graphcore::named_graph(opt.named);
  } else {
    throw pf::usage_error("one of --graph or --named is required");
  }
  if (!opt.netflow.empty()) spec.netflow = parse_netflow(opt.netflow);
  if (opt.framing == "twisted") {
    if (!spec.halfedges.empty())
      throw pf::usage_error("twisted framing cannot honor explicit half-edge placements");
    FramedGraph g = pf::graphcore::build_framed_graph(spec);
    pf::graphcore::twist_in_orders(g);
    std::vector<long long> a;
    if (spec.netflow) {
      a = *spec.netflow;
    } else {
      a.assign(static_cast<size_t>(g.n) + 1, 0);
      a[0] = 1;
      a[static_cast<size_t>(g.n)] = -1;
    }
    return pf::graphcore::augment(g, a);
  }
  if (opt.framing != "planar")
    throw pf::usage_error("unknown framing '" + opt.framing + "'");
  return pf::graphcore::build_augmented(spec);
}

bool has_unit_netflow(const AugmentedGraph& ag) {
  for (int v = 0; v <= ag.g.n; ++v) {
    long long want = v == 0 ? 1 : v == ag.g.n ? -1 : 0;
    if (ag.netflow[static_cast<size_t>(v)] != want) return false;
  }
  return true;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json run_validate(const AugmentedGraph& ag) {
  json j;
  j["graph"] = pf::jsonio::graph_json(ag);
  return j;
}

json run_routes(const AugmentedGraph& ag, const Budget& budget) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  size_t count = 0;
  for (const auto& rs : u.routes_by_x) count += rs.size();
  json j;
  j["count"] = count;
  j["routes"] = pf::jsonio::routes_json(u);
  return j;
}

json run_enumerate(const AugmentedGraph& ag, const Options& opt, const Budget& budget) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  json j;
  if (opt.family == "groves" || opt.family == "permflows") {
    auto groves = pf::triangulation::enumerate_saturated_groves(u, budget);
    json arr = json::array();
    for (const auto& g : groves) {
      if (opt.family == "groves")
        arr.push_back(pf::jsonio::grove_json(u, g));
      else
        arr.push_back(pf::jsonio::permflow_json(u, pf::permflow::grove_to_permflow(u, g)));
    }
    j["count"] = arr.size();
    j[opt.family] = arr;
    return j;
  }
  if (opt.family == "cliques") {
    auto cliques = pf::families::enumerate_cliques(u, budget);
    json arr = json::array();
    for (const auto& c : cliques) arr.push_back(pf::jsonio::clique_json(u, c));
    j["count"] = arr.size();
    j["cliques"] = arr;
    return j;
  }
  if (opt.family == "shuffles") {
    auto sims = pf::triangulation::triangulate(u, budget);
    json arr = json::array();
    for (const auto& s : sims) {
      json e;
      e["grove"] = pf::jsonio::grove_json(u, s.grove);
      e["shuffle"] = pf::jsonio::shuffle_json(u, s.shuffle);
      arr.push_back(e);
    }
    j["count"] = arr.size();
    j["shuffles"] = arr;
    return j;
  }
  throw pf::usage_error("unknown family '" + opt.family + "'");
}

json run_triangulate(const AugmentedGraph& ag, const Budget& budget) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  auto sims = pf::triangulation::triangulate(u, budget);
  for (const auto& s : sims) {
    BigInt det = pf::triangulation::simplex_determinant(u, s);
    if (det != 1 && det != -1)
      throw pf::violation_error("top simplex has determinant " + det.str());
  }
  json j;
  j["dim"] = ag.dim();
  j["count"] = sims.size();
  json arr = json::array();
  for (const auto& s : sims) arr.push_back(pf::jsonio::simplex_json(u, s));
  j["simplices"] = arr;
  return j;
}

json run_volume(const AugmentedGraph& ag, const Options& opt, const Budget& budget) {
  bool unit = has_unit_netflow(ag);
  auto require_unit = [&](const std::string& method) {
    if (!unit)
      throw pf::usage_error("method '" + method + "' applies to the unit netflow e_0 - e_n only");
  };
  json j;
  if (opt.method != "all") {
    BigInt vol;
    if (opt.method == "count") {
      Universe u(ag);
      pf::paths::enumerate_routes(u, budget);
      vol = pf::triangulation::volume_by_count(u, budget);
    } else if (opt.method == "lidskii") {
      vol = pf::triangulation::volume_lidskii(ag, budget);
    } else if (opt.method == "lidskii-classic") {
      vol = pf::triangulation::volume_lidskii_classic(ag, budget);
    } else if (opt.method == "kostant") {
      require_unit(opt.method);
      vol = pf::triangulation::volume_outdegree(ag.g, budget);
    } else if (opt.method == "indegree") {
      require_unit(opt.method);
      vol = pf::triangulation::volume_indegree(ag.g, budget);
    } else if (opt.method == "gstar") {
      require_unit(opt.method);
      vol = pf::triangulation::count_unshuffled_star(ag, budget);
    } else {
      throw pf::usage_error("unknown volume method '" + opt.method + "'");
    }
    j["method"] = opt.method;
    j["volume"] = pf::jsonio::bigint_json(vol);
    return j;
  }
  std::vector<std::pair<std::string, BigInt>> values;
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  values.emplace_back("simplices", BigInt(pf::triangulation::triangulate(u, budget).size()));
  values.emplace_back("count", pf::triangulation::volume_by_count(u, budget));
  values.emplace_back("lidskii", pf::triangulation::volume_lidskii(ag, budget));
  values.emplace_back("lidskii-classic", pf::triangulation::volume_lidskii_classic(ag, budget));
  pf::Polynomial h = pf::flows::ehrhart_hstar_oracle(ag, budget);
  BigInt h1 = 0;
  for (const auto& c : h.coeff) h1 += c;
  values.emplace_back("hstar1", h1);
  if (unit) {
    values.emplace_back("kostant", pf::triangulation::volume_outdegree(ag.g, budget));
    values.emplace_back("indegree", pf::triangulation::volume_indegree(ag.g, budget));
    values.emplace_back("gstar", pf::triangulation::count_unshuffled_star(ag, budget));
  }
  for (const auto& [name, v] : values)
    if (v != values.front().second) {
      std::string msg = "volume formulas disagree:";
      for (const auto& [n2, v2] : values) msg += " " + n2 + "=" + v2.str();
      throw pf::violation_error(msg);
    }
  j["volume"] = pf::jsonio::bigint_json(values.front().second);
  json methods;
  for (const auto& [name, v] : values) methods[name] = pf::jsonio::bigint_json(v);
  j["methods"] = methods;
  return j;
}

json run_hstar(const AugmentedGraph& ag, const Budget& budget) {
  pf::Polynomial h = pf::flows::ehrhart_hstar_oracle(ag, budget);
  return pf::jsonio::polynomial_json(h);
}

json run_weak_order(const AugmentedGraph& ag, const Options& opt, const Budget& budget,
                    std::string* dot_out) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  auto wo = pf::weakorder::build_weak_order(u, budget);
  if (opt.export_dot) {
    *dot_out = pf::jsonio::hasse_dot(u, wo);
    return {};
  }
  json j = pf::jsonio::weak_order_json(u, wo);
  j["eulerian"] = pf::jsonio::polynomial_json(pf::weakorder::eulerian_polynomial(wo));
  return j;
}

json run_lattice_check(const AugmentedGraph& ag, const Budget& budget) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  auto wo = pf::weakorder::build_weak_order(u, budget);
  std::pair<int, int> witness{-1, -1};
  if (!pf::weakorder::lattice_check(wo, &witness)) {
    const auto& pa = wo.elements[static_cast<size_t>(witness.first)];
    const auto& pb = wo.elements[static_cast<size_t>(witness.second)];
    throw pf::violation_error(
        "weak order is not a lattice: elements " + std::to_string(witness.first) + " (" +
        pf::permflow::word_str(u, pf::permflow::final_summary(u, pa)) + ") and " +
        std::to_string(witness.second) + " (" +
        pf::permflow::word_str(u, pf::permflow::final_summary(u, pb)) +
        ") lack a meet or a join");
  }
  json j;
  j["elements"] = wo.elements.size();
  j["lattice"] = true;
  return j;
}

json run_locate(const AugmentedGraph& ag, const Options& opt, const Budget& budget) {
  if (opt.point.empty() == (opt.random_points == 0))
    throw pf::usage_error("give exactly one of --point or --random");
  std::vector<std::vector<BigRat>> points;
  if (!opt.point.empty()) {
    std::vector<BigRat> p;
    size_t pos = 0;
    while (pos <= opt.point.size()) {
      size_t comma = opt.point.find(',', pos);
      if (comma == std::string::npos) comma = opt.point.size();
      p.push_back(pf::jsonio::parse_rational(opt.point.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    points.push_back(std::move(p));
  } else {
    auto verts = pf::triangulation::polytope_vertices(ag.g, ag.netflow, budget);
    if (verts.empty()) throw pf::invalid_error("the flow polytope is empty");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> draw(0, 9);
    for (int k = 0; k < opt.random_points; ++k) {
      std::vector<long long> w(verts.size());
      long long total = 0;
      do {
        total = 0;
        for (auto& wi : w) {
          wi = draw(rng);
          total += wi;
        }
      } while (total == 0);
      std::vector<BigRat> p(ag.g.edges.size(), BigRat(0));
      for (size_t i = 0; i < verts.size(); ++i)
        for (size_t e = 0; e < p.size(); ++e) p[e] += BigRat(w[i] * verts[i][e], total);
      points.push_back(std::move(p));
    }
  }
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  json arr = json::array();
  for (const auto& p : points) {
    auto loc = pf::triangulation::locate_point(u, p);
    json e;
    json coords = json::array();
    for (const auto& c : p) coords.push_back(pf::jsonio::rational_json(c));
    e["point"] = coords;
    e["located"] = pf::jsonio::located_json(u, loc);
    arr.push_back(e);
  }
  json j;
  j["points"] = arr;
  return j;
}

json run_faces(const AugmentedGraph& ag, const Budget& budget) {
  Universe u(ag);
  pf::paths::enumerate_routes(u, budget);
  auto cliques = pf::families::enumerate_cliques(u, budget);
  std::vector<size_t> rank_sizes(static_cast<size_t>(ag.dim()) + 1, 0);
  for (const auto& c : cliques) {
    size_t r = c.matchings.size();  // rank + 1
    if (r < 1 || r > rank_sizes.size())
      throw pf::violation_error("face of rank " + std::to_string(c.rank()) +
                                " outside 0.." + std::to_string(rank_sizes.size() - 1));
    ++rank_sizes[r - 1];
  }
  json j;
  j["count"] = cliques.size();
  j["rank_sizes"] = rank_sizes;
  json arr = json::array();
  for (const auto& c : cliques) arr.push_back(pf::jsonio::clique_json(u, c));
  j["faces"] = arr;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of flow polytopes on framed graphs"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* validate = app.add_subcommand("validate", "parse and echo the instance");
  add_common_options(validate, opt);
  CLI::App* routes = app.add_subcommand("routes", "routes of the augmented graph per half-edge");
  add_common_options(routes, opt);
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate a combinatorial family");
  add_common_options(enumerate, opt);
  enumerate->add_option("--family", opt.family, "cliques | groves | permflows | shuffles");
  CLI::App* triangulate = app.add_subcommand("triangulate", "top simplices of the triangulation");
  add_common_options(triangulate, opt);
  CLI::App* volume = app.add_subcommand("volume", "normalized volume of the flow polytope");
  add_common_options(volume, opt);
  volume->add_option("--method", opt.method,
                     "count | lidskii | lidskii-classic | kostant | indegree | gstar | all");
  CLI::App* hstar = app.add_subcommand("hstar", "h* polynomial coefficients");
  add_common_options(hstar, opt);
  CLI::App* weak_order = app.add_subcommand("weak-order", "weak order on saturated flows");
  add_common_options(weak_order, opt);
  weak_order->add_flag("--export-dot", opt.export_dot, "print the cover diagram as DOT");
  CLI::App* lattice = app.add_subcommand("lattice-check", "verify the weak order is a lattice");
  add_common_options(lattice, opt);
  CLI::App* locate = app.add_subcommand("locate", "locate rational points in the triangulation");
  add_common_options(locate, opt);
  locate->add_option("--point", opt.point, "comma-separated rational coordinates, one per edge");
  locate->add_option("--random", opt.random_points, "number of random points to sample");
  locate->add_option("--seed", opt.seed, "seed for --random");
  CLI::App* faces = app.add_subcommand("faces", "all faces of the triangulation, graded by rank");
  add_common_options(faces, opt);
  CLI::App* export_dot = app.add_subcommand("export-dot", "weak order cover diagram as DOT");
  add_common_options(export_dot, opt);
  CLI::App* named = app.add_subcommand("named", "print a named family as .fg text");
  named->add_option("descriptor", opt.descriptor, "e.g. oru:3, car:5, ps:3, complete:4")
      ->required();
  named->add_option("--netflow", opt.netflow, "comma-separated netflow override");
  named->add_option("--framing", opt.framing, "planar (default) or twisted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<AugmentedGraph> instance;
  try {
    Budget budget{opt.max_objects, opt.max_dp_states};
    if (named->parsed()) {
      Options nopt = opt;
      nopt.named = opt.descriptor;
      instance = load_instance(nopt);
      std::cout << pf::graphcore::write_fg(*instance);
      return 0;
    }
    instance = load_instance(opt);
    AugmentedGraph& ag = *instance;
    if (validate->parsed()) {
      emit(run_validate(ag));
    } else if (routes->parsed()) {
      emit(run_routes(ag, budget));
    } else if (enumerate->parsed()) {
      emit(run_enumerate(ag, opt, budget));
    } else if (triangulate->parsed()) {
      emit(run_triangulate(ag, budget));
    } else if (volume->parsed()) {
      emit(run_volume(ag, opt, budget));
    } else if (hstar->parsed()) {
      std::cout << run_hstar(ag, budget).dump() << "\n";
    } else if (weak_order->parsed() || export_dot->parsed()) {
      if (export_dot->parsed()) opt.export_dot = true;
      std::string dot;
      json j = run_weak_order(ag, opt, budget, &dot);
      if (opt.export_dot)
        std::cout << dot;
      else
        emit(j);
    } else if (lattice->parsed()) {
      emit(run_lattice_check(ag, budget));
    } else if (locate->parsed()) {
      emit(run_locate(ag, opt, budget));
    } else if (faces->parsed()) {
      emit(run_faces(ag, budget));
    }
    return 0;
  } catch (const pf::Error& e) {
    if (e.kind == pf::Error::Kind::Violation) {
      std::cerr << "theorem violation: " << e.what() << "\n";
      if (instance) std::cerr << pf::graphcore::write_fg(*instance);
      return 3;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
