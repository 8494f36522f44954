#pragma once

// Shared hand-checked fixtures.
//
// Two worked instances are frozen here:
//  - tower12: unit netflow, n = 5, m = 12.  Carries a full cast of
//    permutation flows (a partial one, a saturated one, the bottom and top
//    elements, and the results of specific raisings/lowerings), their route
//    sets, summaries, ascents and descents.
//  - general14: netflow (2,1,0,1,0,-4), n = 5, m = 14, with explicitly
//    placed half-edges.  Carries a grove/permutation-flow pair, its
//    saturation, two multicliques (one a face of the other), and their
//    shuffles.
// Plus the small named instances used by the goldens (oru:2, oru:3, ps:3).
//
// Every object was worked out by hand on paper drawings of the two graphs;
// tests treat them as ground truth.

#include "permuflow/families.hpp"
#include "permuflow/flows.hpp"
#include "permuflow/graph.hpp"
#include "permuflow/paths.hpp"
#include "permuflow/permflow.hpp"

#include <array>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fx {

// ---- small builders -------------------------------------------------------

inline int edge(const pf::Universe& u, const std::string& name) {
  return pf::graphcore::edge_by_name(u.ag, name);
}

// Space-separated edge/half-edge names -> augmented ids.
inline std::vector<int> word(const pf::Universe& u, const std::string& names) {
  std::vector<int> w;
  std::stringstream ss(names);
  std::string tok;
  while (ss >> tok) w.push_back(edge(u, tok));
  return w;
}

// Interns the prefix "x_1 t_3 t_4" (no trailing y).
inline int prefix(pf::Universe& u, const std::string& items) {
  std::stringstream ss(items);
  std::string tok;
  int p = -1;
  while (ss >> tok) {
    int e = edge(u, tok);
    if (p < 0)
      p = u.x_roots[static_cast<std::size_t>(e - u.ag.m())];
    else
      p = u.extend(p, e);
  }
  return p;
}

inline int route(pf::Universe& u, const std::string& items) {
  return pf::paths::parse_route(u, items);
}

inline pf::RouteMatching matching(pf::Universe& u, const std::vector<std::string>& routes) {
  pf::RouteMatching m;
  for (const auto& r : routes) m.push_back(route(u, r));
  return m;
}

using WordTable = std::vector<std::pair<std::string, std::string>>;

// Flow from (edge name, word) pairs; unlisted edges get empty words.
inline pf::PermutationFlow make_flow(const pf::Universe& u, const WordTable& table) {
  pf::PermutationFlow p;
  p.words.assign(static_cast<std::size_t>(u.ag.m()), {});
  for (const auto& [name, letters] : table)
    p.words[static_cast<std::size_t>(edge(u, name))] = word(u, letters);
  return p;
}

inline pf::PermutationFlow patch_flow(const pf::Universe& u, pf::PermutationFlow p,
                                      const WordTable& table) {
  for (const auto& [name, letters] : table)
    p.words[static_cast<std::size_t>(edge(u, name))] = word(u, letters);
  return p;
}

// Grove from (prefix items, outgoing edge name) pairs.
inline pf::Grove make_grove(pf::Universe& u,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
  pf::Grove g;
  g.at.assign(static_cast<std::size_t>(u.ag.g.n) + 1, {});
  for (const auto& [items, out] : edges) {
    int p = prefix(u, items);
    g.at[static_cast<std::size_t>(u.end_vertex(p))].emplace_back(p, edge(u, out));
  }
  pf::families::canonicalize_grove(u, g);
  return g;
}

// ---- tower12: unit netflow, n = 5, m = 12 ---------------------------------
//
// Out-orders (bottom first): 0:(s_0,t_2,t_1) 1:(s_1,t_4,t_3) 2:(s_2,t_5)
// 3:(s_3,t_6) 4:(s_4,t_7); in-orders: 1:(s_0,t_2) 2:(t_4,t_1) 3:(t_3,s_1)
// 4:(s_2,s_3,t_5) 5:(s_4,t_7,t_6).  The lone half-edge x_1 enters vertex 0.

namespace tower12 {

inline pf::GraphSpec spec() {
  pf::GraphSpec s;
  s.n = 5;
  auto add = [&](int id, int tail, int head) { s.edges.push_back(pf::EdgeRec{id, tail, head}); };
  add(0, 0, 1);   // s_0
  add(1, 0, 1);   // t_2
  add(2, 0, 2);   // t_1
  add(3, 1, 3);   // s_1
  add(4, 1, 2);   // t_4
  add(5, 1, 3);   // t_3
  add(6, 2, 4);   // s_2
  add(7, 2, 4);   // t_5
  add(8, 3, 4);   // s_3
  add(9, 3, 5);   // t_6
  add(10, 4, 5);  // s_4
  add(11, 4, 5);  // t_7
  s.out_order = {{0, {0, 1, 2}}, {1, {3, 4, 5}}, {2, {6, 7}}, {3, {8, 9}}, {4, {10, 11}}};
  s.in_order = {{1, {0, 1}}, {2, {4, 2}}, {3, {5, 3}}, {4, {6, 8, 7}}, {5, {10, 11, 9}}};
  return s;
}

// A valid but unsaturated flow with splits {t_1, t_3, t_5}.
inline pf::PermutationFlow partial(const pf::Universe& u) {
  return make_flow(u, {{"t_2", "x_1"},
                       {"t_1", "t_1"},
                       {"t_4", "x_1"},
                       {"t_3", "t_3"},
                       {"s_2", "x_1"},
                       {"t_5", "t_5 t_1"},
                       {"s_3", "t_3"},
                       {"s_4", "x_1"},
                       {"t_7", "t_3 t_5 t_1"}});
}

// A saturated flow in mid weak order, the main raise/lower testbed.
inline pf::PermutationFlow sat(const pf::Universe& u) {
  return make_flow(u, {{"s_0", "x_1"},
                       {"t_2", "t_2"},
                       {"t_1", "t_1"},
                       {"s_1", "x_1"},
                       {"t_4", "t_4 t_2"},
                       {"t_3", "t_3"},
                       {"s_2", "t_4 t_2"},
                       {"t_5", "t_5 t_1"},
                       {"s_3", "t_3 x_1"},
                       {"t_6", "t_6"},
                       {"s_4", "t_4 t_2 t_3"},
                       {"t_7", "t_7 x_1 t_5 t_1"}});
}

// The minimum of the weak order: splits own bare singletons, every carried
// letter rides each slack in arrival order.
inline pf::PermutationFlow bottom(const pf::Universe& u) {
  return make_flow(u, {{"s_0", "x_1"},
                       {"t_1", "t_1"},
                       {"t_2", "t_2"},
                       {"s_1", "x_1 t_2"},
                       {"t_3", "t_3"},
                       {"t_4", "t_4"},
                       {"s_2", "t_4 t_1"},
                       {"t_5", "t_5"},
                       {"s_3", "t_3 x_1 t_2"},
                       {"t_6", "t_6"},
                       {"s_4", "t_4 t_1 t_3 x_1 t_2 t_5"},
                       {"t_7", "t_7"}});
}

// The maximum of the weak order.
inline pf::PermutationFlow top(const pf::Universe& u) {
  return make_flow(u, {{"s_0", "x_1"},
                       {"t_2", "t_2"},
                       {"t_1", "t_1"},
                       {"s_1", "x_1"},
                       {"t_4", "t_4"},
                       {"t_3", "t_3 t_2"},
                       {"s_2", "t_4"},
                       {"t_5", "t_5 t_1"},
                       {"s_3", "t_3"},
                       {"t_6", "t_6 t_2 x_1"},
                       {"s_4", "t_4"},
                       {"t_7", "t_7 t_3 t_5 t_1"}});
}

inline pf::PermutationFlow sat_raised_t5(const pf::Universe& u) {
  return patch_flow(u, sat(u),
                    {{"t_7", "t_7 x_1 t_5 t_2 t_1"},
                     {"t_5", "t_5 t_2 t_1"},
                     {"s_4", "t_4 t_3"},
                     {"s_2", "t_4"}});
}

inline pf::PermutationFlow sat_raised_t6(const pf::Universe& u) {
  return patch_flow(u, sat(u),
                    {{"t_6", "t_6 x_1"}, {"t_7", "t_7 t_5 t_1"}, {"s_3", "t_3"}});
}

inline pf::PermutationFlow sat_raised_t7(const pf::Universe& u) {
  return patch_flow(u, sat(u), {{"t_7", "t_7 t_3 x_1 t_5 t_1"}, {"s_4", "t_4 t_2"}});
}

inline pf::PermutationFlow sat_lowered_t4(const pf::Universe& u) {
  return patch_flow(u, sat(u),
                    {{"t_4", "t_4"},
                     {"s_2", "t_4"},
                     {"s_4", "t_4 t_3"},
                     {"s_1", "x_1 t_2"},
                     {"t_6", "t_6 t_2"}});
}

inline pf::PermutationFlow sat_lowered_t5(const pf::Universe& u) {
  return patch_flow(u, sat(u),
                    {{"t_5", "t_5"},
                     {"t_7", "t_7 x_1 t_5"},
                     {"s_2", "t_4 t_2 t_1"},
                     {"s_4", "t_4 t_2 t_1 t_3"}});
}

// Letters entering each vertex, x letters included (the vertex summaries).
inline std::vector<std::vector<int>> sat_in_perms(const pf::Universe& u) {
  return {word(u, "x_1"),
          word(u, "x_1 t_2"),
          word(u, "t_4 t_2 t_1"),
          word(u, "t_3 x_1"),
          word(u, "t_4 t_2 t_3 x_1 t_5 t_1"),
          word(u, "t_4 t_2 t_3 t_7 x_1 t_5 t_1 t_6")};
}

inline std::vector<int> sat_summary(const pf::Universe& u) {
  return word(u, "t_4 t_2 t_3 t_7 x_1 t_5 t_1 t_6");
}

inline std::vector<std::string> partial_route_names() {
  return {"x_1 t_1 t_5 t_7 y", "x_1 s_0 t_4 s_2 s_4 y", "x_1 t_2 t_4 t_5 t_7 y",
          "x_1 t_2 t_3 s_3 t_7 y"};
}

inline std::vector<std::string> sat_route_names() {
  auto r = partial_route_names();
  r.insert(r.end(), {"x_1 s_0 s_1 s_3 t_7 y", "x_1 t_2 t_4 s_2 s_4 y",
                     "x_1 t_2 t_3 s_3 s_4 y", "x_1 s_0 s_1 t_6 y"});
  return r;
}

// (split, letter, carrier) of every ascent of sat(), by split.
inline std::vector<std::array<std::string, 3>> sat_ascents() {
  return {{"t_5", "t_2", "s_2"}, {"t_6", "x_1", "s_3"}, {"t_7", "t_3", "s_4"}};
}

// (split, letter) of every descent of sat(), by split.
inline std::vector<std::array<std::string, 2>> sat_descents() {
  return {{"t_4", "t_2"}, {"t_5", "t_1"}, {"t_7", "x_1"}};
}

}  // namespace tower12

// ---- general14: netflow (2,1,0,1,0,-4), n = 5, m = 14 ----------------------
//
// Out-orders: 0:(s_0,t_3,t_2,t_1) 1:(s_1,t_5,t_4) 2:(s_2,t_6) 3:(s_3,t_8,t_7)
// 4:(s_4,t_9); in-orders with half-edges: 0:(x_1,x_2) 1:(x_3,s_0,t_3)
// 2:(t_2,t_5) 3:(t_4,t_1,x_4,s_1) 4:(t_8,s_2,t_6) 5:(s_4,s_3,t_9,t_7).

namespace general14 {

inline pf::GraphSpec spec() {
  pf::GraphSpec s;
  s.n = 5;
  auto add = [&](int id, int tail, int head) { s.edges.push_back(pf::EdgeRec{id, tail, head}); };
  add(0, 0, 1);   // s_0
  add(1, 0, 1);   // t_3
  add(2, 0, 2);   // t_2
  add(3, 0, 3);   // t_1
  add(4, 1, 3);   // s_1
  add(5, 1, 2);   // t_5
  add(6, 1, 3);   // t_4
  add(7, 2, 4);   // s_2
  add(8, 2, 4);   // t_6
  add(9, 3, 5);   // s_3
  add(10, 3, 4);  // t_8
  add(11, 3, 5);  // t_7
  add(12, 4, 5);  // s_4
  add(13, 4, 5);  // t_9
  s.out_order = {{0, {0, 1, 2, 3}}, {1, {4, 5, 6}}, {2, {7, 8}}, {3, {9, 10, 11}}, {4, {12, 13}}};
  s.in_order = {{1, {0, 1}}, {2, {2, 5}}, {3, {6, 3, 4}}, {4, {10, 7, 8}}, {5, {12, 9, 13, 11}}};
  s.netflow = std::vector<long long>{2, 1, 0, 1, 0, -4};
  s.halfedges = {{0, 0, 0}, {1, 0, 1}, {2, 1, 0}, {3, 3, 2}};
  return s;
}

// The unsaturated grove of the worked example.
inline pf::Grove grove(pf::Universe& u) {
  std::vector<std::pair<std::string, std::string>> e = {
      {"x_2", "t_1"},          {"x_2", "t_2"},          {"x_1", "t_2"},
      {"x_1", "t_3"},          {"x_1", "s_0"},          {"x_1 t_3", "t_4"},
      {"x_1 t_3", "t_5"},      {"x_1 s_0", "s_1"},      {"x_3", "s_1"},
      {"x_1 t_3 t_5", "t_6"},  {"x_2 t_2", "t_6"},      {"x_2 t_2", "s_2"},
      {"x_1 t_2", "s_2"},      {"x_1 s_0 s_1", "t_7"},  {"x_3 s_1", "t_8"},
      {"x_4", "t_8"},          {"x_2 t_1", "s_3"},      {"x_1 t_3 t_4", "s_3"}};
  for (const char* p : {"x_1 t_3 t_5 t_6", "x_2 t_2 t_6", "x_2 t_2 s_2", "x_1 t_2 s_2",
                        "x_3 s_1 t_8", "x_4 t_8"})
    e.emplace_back(p, "t_9");
  for (const char* p :
       {"x_1 s_0 s_1 t_7", "x_2 t_1 s_3", "x_1 t_3 t_4 s_3", "x_1 t_3 t_5 t_6 t_9",
        "x_2 t_2 t_6 t_9", "x_2 t_2 s_2 t_9", "x_1 t_2 s_2 t_9", "x_3 s_1 t_8 t_9", "x_4 t_8 t_9"})
    e.emplace_back(p, "y");
  return make_grove(u, e);
}

// Its saturation used throughout: every vertex carries a full staircase.
inline pf::Grove sat_grove(pf::Universe& u) {
  std::vector<std::pair<std::string, std::string>> e = {
      {"x_2", "t_1"},         {"x_2", "t_2"},         {"x_1", "t_2"},
      {"x_1", "t_3"},         {"x_1", "s_0"},         {"x_1 t_3", "t_4"},
      {"x_1 t_3", "t_5"},     {"x_1 s_0", "t_5"},     {"x_1 s_0", "s_1"},
      {"x_3", "s_1"},         {"x_1 t_3 t_5", "t_6"}, {"x_1 s_0 t_5", "t_6"},
      {"x_2 t_2", "t_6"},     {"x_2 t_2", "s_2"},     {"x_1 t_2", "s_2"},
      {"x_1 s_0 s_1", "t_7"}, {"x_1 s_0 s_1", "t_8"}, {"x_3 s_1", "t_8"},
      {"x_4", "t_8"},         {"x_2 t_1", "t_8"},     {"x_2 t_1", "s_3"},
      {"x_1 t_3 t_4", "s_3"}, {"x_2 t_1 t_8", "s_4"}, {"x_4 t_8", "s_4"}};
  for (const char* p : {"x_1 t_3 t_5 t_6", "x_1 s_0 t_5 t_6", "x_2 t_2 t_6", "x_2 t_2 s_2",
                        "x_1 t_2 s_2", "x_1 s_0 s_1 t_8", "x_3 s_1 t_8", "x_4 t_8"})
    e.emplace_back(p, "t_9");
  for (const char* p :
       {"x_1 s_0 s_1 t_7", "x_2 t_1 s_3", "x_1 t_3 t_4 s_3", "x_2 t_1 t_8 s_4", "x_4 t_8 s_4",
        "x_1 t_3 t_5 t_6 t_9", "x_1 s_0 t_5 t_6 t_9", "x_2 t_2 t_6 t_9", "x_2 t_2 s_2 t_9",
        "x_1 t_2 s_2 t_9", "x_1 s_0 s_1 t_8 t_9", "x_3 s_1 t_8 t_9", "x_4 t_8 t_9"})
    e.emplace_back(p, "y");
  return make_grove(u, e);
}

// Permutation flow of grove().
inline pf::PermutationFlow partial(const pf::Universe& u) {
  return make_flow(u, {{"s_0", "x_1"},
                       {"t_3", "t_3"},
                       {"t_2", "t_2 x_2"},
                       {"t_1", "t_1"},
                       {"s_1", "x_3 x_1"},
                       {"t_5", "t_3"},
                       {"t_4", "t_4"},
                       {"s_2", "t_2 x_2"},
                       {"t_6", "t_6 t_3"},
                       {"s_3", "t_4 t_1"},
                       {"t_8", "x_4 x_3"},
                       {"t_7", "x_1"},
                       {"t_9", "x_4 x_3 t_2 x_2 t_6 t_3"}});
}

// Permutation flow of sat_grove().
inline pf::PermutationFlow sat(const pf::Universe& u) {
  return patch_flow(u, partial(u),
                    {{"t_5", "t_5 t_3"},
                     {"t_6", "t_6 t_5 t_3"},
                     {"t_7", "t_7"},
                     {"t_8", "t_8 x_4 x_3 x_1"},
                     {"t_9", "t_9 x_3 x_1 t_2 x_2 t_6 t_5 t_3"},
                     {"s_4", "t_8 x_4"}});
}

inline std::vector<int> partial_summary(const pf::Universe& u) {
  return word(u, "t_4 t_1 x_4 x_3 t_2 x_2 t_6 t_3 x_1");
}

inline std::vector<int> sat_summary(const pf::Universe& u) {
  return word(u, "t_8 x_4 t_4 t_1 t_9 x_3 x_1 t_2 x_2 t_6 t_5 t_3 t_7");
}

// |word(e)| - 1 per edge handle, a flow with the shifted netflow.
inline pf::IntegerFlow sat_shifted_flow() {
  return {0, 0, 1, 0, 1, 1, 0, 1, 2, 1, 3, 0, 1, 7};
}

inline std::vector<long long> shifted_netflow() { return {1, 2, 1, 3, 2, -9}; }

// Rank-4 multiclique (5 columns), a face of sat_multiclique().
inline pf::Multiclique multiclique(pf::Universe& u) {
  pf::Multiclique m;
  auto row = [&](const std::vector<std::string>& rs) { m.rows.push_back(matching(u, rs)); };
  row({"x_1 s_0 s_1 t_7 y", "x_1 s_0 s_1 t_7 y", "x_1 t_3 t_5 t_6 t_9 y", "x_1 t_3 t_4 s_3 y",
       "x_1 t_2 s_2 t_9 y"});
  row({"x_2 t_2 s_2 t_9 y", "x_2 t_2 t_6 t_9 y", "x_2 t_2 t_6 t_9 y", "x_2 t_1 s_3 y",
       "x_2 t_1 s_3 y"});
  row(std::vector<std::string>(5, "x_3 s_1 t_8 t_9 y"));
  row(std::vector<std::string>(5, "x_4 t_8 t_9 y"));
  return m;
}

// Rank-9 multiclique (10 columns) of the saturated grove, a top simplex.
inline pf::Multiclique sat_multiclique(pf::Universe& u) {
  pf::Multiclique m;
  auto row = [&](const std::vector<std::string>& rs) { m.rows.push_back(matching(u, rs)); };
  row({"x_1 s_0 s_1 t_8 t_9 y", "x_1 s_0 s_1 t_7 y", "x_1 s_0 s_1 t_7 y", "x_1 s_0 s_1 t_7 y",
       "x_1 s_0 t_5 t_6 t_9 y", "x_1 t_3 t_5 t_6 t_9 y", "x_1 t_3 t_5 t_6 t_9 y",
       "x_1 t_3 t_4 s_3 y", "x_1 t_2 s_2 t_9 y", "x_1 t_2 s_2 t_9 y"});
  row({"x_2 t_2 s_2 t_9 y", "x_2 t_2 s_2 t_9 y", "x_2 t_2 s_2 t_9 y", "x_2 t_2 t_6 t_9 y",
       "x_2 t_2 t_6 t_9 y", "x_2 t_2 t_6 t_9 y", "x_2 t_1 s_3 y", "x_2 t_1 s_3 y",
       "x_2 t_1 s_3 y", "x_2 t_1 t_8 s_4 y"});
  row(std::vector<std::string>(10, "x_3 s_1 t_8 t_9 y"));
  row({"x_4 t_8 s_4 y", "x_4 t_8 s_4 y", "x_4 t_8 t_9 y", "x_4 t_8 t_9 y", "x_4 t_8 t_9 y",
       "x_4 t_8 t_9 y", "x_4 t_8 t_9 y", "x_4 t_8 t_9 y", "x_4 t_8 t_9 y", "x_4 t_8 t_9 y"});
  return m;
}

// Columns of multiclique() inside sat_multiclique().
inline std::vector<int> face_columns() { return {2, 3, 5, 7, 8}; }

// Shuffle of grove(), rank 4.
inline pf::Shuffle shuffle(pf::Universe& u) {
  pf::Shuffle s;
  s.rank = 4;
  s.chains.resize(4);
  s.chains[0] = {{prefix(u, "x_1 t_3"), 2}, {prefix(u, "x_1 t_3 t_4"), 3}, {prefix(u, "x_1 t_2"), 4}};
  s.chains[1] = {{prefix(u, "x_2 t_2 t_6"), 1}, {prefix(u, "x_2 t_1"), 3}};
  return s;
}

// Shuffle of sat_grove(), bijective of rank 9.
inline pf::Shuffle sat_shuffle(pf::Universe& u) {
  pf::Shuffle s;
  s.rank = 9;
  s.chains.resize(4);
  s.chains[0] = {{prefix(u, "x_1 s_0 s_1 t_7"), 1},
                 {prefix(u, "x_1 s_0 t_5"), 4},
                 {prefix(u, "x_1 t_3"), 5},
                 {prefix(u, "x_1 t_3 t_4"), 7},
                 {prefix(u, "x_1 t_2"), 8}};
  s.chains[1] = {{prefix(u, "x_2 t_2 t_6"), 3},
                 {prefix(u, "x_2 t_1"), 6},
                 {prefix(u, "x_2 t_1 t_8"), 9}};
  s.chains[3] = {{prefix(u, "x_4 t_8 t_9"), 2}};
  return s;
}

// Per-half-edge chain lengths of sat_grove().
inline std::vector<long long> sat_composition() { return {5, 3, 0, 1}; }

}  // namespace general14

// ---- ps3: ps:3 with netflow (1,1,1,-3) -------------------------------------

namespace ps3 {

inline pf::GraphSpec spec() {
  pf::GraphSpec s = pf::graphcore::named_graph("ps:3");
  s.netflow = std::vector<long long>{1, 1, 1, -3};
  return s;
}

// One top simplex of the triangulation, built by hand from its shuffle: the
// chain starts at the clique's lowest matching and swaps one route per step.
inline pf::Clique clique(pf::Universe& u) {
  std::vector<pf::RouteMatching> ms;
  ms.push_back(matching(u, {"x_1 s_0 s_1 t_3 y", "x_2 s_1 t_3 y", "x_3 s_2 y"}));
  ms.push_back(matching(u, {"x_1 s_0 t_2 y", "x_2 s_1 t_3 y", "x_3 s_2 y"}));
  ms.push_back(matching(u, {"x_1 s_0 t_2 y", "x_2 s_1 t_3 y", "x_3 t_3 y"}));
  ms.push_back(matching(u, {"x_1 t_1 y", "x_2 s_1 t_3 y", "x_3 t_3 y"}));
  return pf::families::make_clique(u, std::move(ms));
}

}  // namespace ps3

}  // namespace fx
