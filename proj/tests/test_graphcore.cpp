#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "permuflow/graph.hpp"

#include <map>
#include <sstream>

using namespace pf;

TEST_CASE("canonical labels name slacks and splits by framing position") {
  FramedGraph g = graphcore::build_framed_graph(fx::tower12::spec());
  auto labels = graphcore::canonical_labels(g);
  std::map<std::string, int> by_name;
  for (int e = 0; e < g.m(); ++e) by_name[labels[static_cast<size_t>(e)].str()] = e;
  CHECK(by_name.size() == 12);
  CHECK(by_name["s_0"] == 0);
  CHECK(by_name["t_2"] == 1);
  CHECK(by_name["t_1"] == 2);
  CHECK(by_name["s_1"] == 3);
  CHECK(by_name["t_4"] == 4);
  CHECK(by_name["t_3"] == 5);
  CHECK(by_name["s_2"] == 6);
  CHECK(by_name["t_5"] == 7);
  CHECK(by_name["s_3"] == 8);
  CHECK(by_name["t_6"] == 9);
  CHECK(by_name["s_4"] == 10);
  CHECK(by_name["t_7"] == 11);
  CHECK(g.dim() == 7);
  CHECK(g.out_pos(2) == 2);
  CHECK(g.in_pos(2) == 1);  // t_1 sits above t_4 entering vertex 2
}

TEST_CASE("augmenting the unit netflow attaches one x at the source") {
  AugmentedGraph ag = graphcore::build_augmented(fx::tower12::spec());
  CHECK(ag.nx == 1);
  CHECK(ag.x_vertex == std::vector<int>{0});
  CHECK(ag.in_order_hat[0] == std::vector<int>{ag.x_id(0)});
  CHECK(ag.out_order_hat[5] == std::vector<int>{ag.y_id()});
  CHECK(ag.tail_of(ag.x_id(0)) == -1);
  CHECK(ag.head_of(ag.x_id(0)) == 0);
  CHECK(ag.tail_of(ag.y_id()) == 5);
  CHECK(graphcore::edge_name(ag, ag.x_id(0)) == "x_1");
  CHECK(graphcore::edge_name(ag, ag.y_id()) == "y");
  for (int e = 0; e < ag.m() + ag.nx + 1; ++e)
    CHECK(graphcore::edge_by_name(ag, graphcore::edge_name(ag, e)) == e);
}

TEST_CASE("explicit half-edge placements land at the requested positions") {
  AugmentedGraph ag = graphcore::build_augmented(fx::general14::spec());
  CHECK(ag.nx == 4);
  CHECK(ag.x_vertex == std::vector<int>{0, 0, 1, 3});
  auto name_list = [&](const std::vector<int>& ids) {
    std::string s;
    for (int e : ids) s += graphcore::edge_name(ag, e) + " ";
    return s;
  };
  CHECK(name_list(ag.in_order_hat[0]) == "x_1 x_2 ");
  CHECK(name_list(ag.in_order_hat[1]) == "x_3 s_0 t_3 ");
  CHECK(name_list(ag.in_order_hat[3]) == "t_4 t_1 x_4 s_1 ");
  CHECK(name_list(ag.in_order_hat[5]) == "s_4 s_3 t_9 t_7 ");
  CHECK(name_list(ag.out_order_hat[0]) == "s_0 t_3 t_2 t_1 ");
  CHECK(ag.out_pos_hat(0, graphcore::edge_by_name(ag, "t_2")) == 2);
  CHECK(ag.out_pos_hat(0, graphcore::edge_by_name(ag, "t_9")) == -1);
  CHECK(ag.in_pos_hat(ag.x_id(3)) == 2);
}

TEST_CASE("fg text round-trips through the parser") {
  AugmentedGraph ag = graphcore::build_augmented(fx::general14::spec());
  std::string text = graphcore::write_fg(ag);
  GraphSpec back = graphcore::parse_fg_string(text);
  AugmentedGraph ag2 = graphcore::build_augmented(back);
  CHECK(ag2.g.n == ag.g.n);
  CHECK(ag2.g.edges.size() == ag.g.edges.size());
  CHECK(ag2.netflow == ag.netflow);
  CHECK(ag2.in_order_hat == ag.in_order_hat);
  CHECK(ag2.out_order_hat == ag.out_order_hat);
  CHECK(ag2.g.in_order == ag.g.in_order);
  CHECK(ag2.g.out_order == ag.g.out_order);
}

TEST_CASE("fg parser reports malformed input") {
  auto build = [](const std::string& text) {
    return graphcore::build_framed_graph(graphcore::parse_fg_string(text));
  };
  CHECK_THROWS_AS(graphcore::parse_fg_string("edge 0 0 1\n"), Error);  // no n
  CHECK_THROWS_AS(build("n 2\nedge 0 1 0\n"), Error);                 // decreasing
  CHECK_THROWS_AS(build("n 2\nedge 0 0 1\nedge 0 1 2\n"), Error);     // duplicate id
  CHECK_THROWS_AS(build("n 2\nedge 0 0 2\n"), Error);                 // vertex 1 dangling
  GraphSpec bad = fx::tower12::spec();
  bad.netflow = std::vector<long long>{1, -1, 0, 0, 0, 0};  // negative away from sink
  CHECK_THROWS_AS(graphcore::build_augmented(bad), Error);
  GraphSpec sum = fx::tower12::spec();
  sum.netflow = std::vector<long long>{1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(graphcore::build_augmented(sum), Error);
}

TEST_CASE("named families produce the pinned shapes") {
  GraphSpec oru = graphcore::named_graph("oru:3");
  CHECK(oru.n == 3);
  CHECK(oru.edges.size() == 6);
  GraphSpec oru_comp = graphcore::named_graph("oru:2,1");
  CHECK(oru_comp.edges.size() == 5);  // 3 + 2 parallel edges
  GraphSpec car = graphcore::named_graph("car:5");
  CHECK(car.n == 5);
  CHECK(car.edges.size() == 11);  // 5 path + 3 fan-out + 3 fan-in
  GraphSpec ps = graphcore::named_graph("ps:3");
  CHECK(ps.n == 3);
  CHECK(ps.edges.size() == 6);
  GraphSpec full = graphcore::named_graph("complete:5");
  CHECK(full.n == 4);
  CHECK(full.edges.size() == 10);
  CHECK_THROWS_AS(graphcore::named_graph("zigzag:3"), Error);
  CHECK_THROWS_AS(graphcore::named_graph("oru"), Error);

  AugmentedGraph ag = graphcore::build_augmented(ps);
  auto labels = graphcore::canonical_labels(ag.g);
  CHECK(labels[0].str() == "s_0");
  CHECK(labels[1].str() == "t_1");
  CHECK(labels[5].str() == "t_3");
}

TEST_CASE("twisting reverses every in-order and nothing else") {
  FramedGraph g = graphcore::build_framed_graph(fx::tower12::spec());
  FramedGraph t = g;
  graphcore::twist_in_orders(t);
  CHECK(t.out_order == g.out_order);
  for (int v = 0; v <= g.n; ++v) {
    std::vector<int> rev = g.in_order[static_cast<size_t>(v)];
    std::reverse(rev.begin(), rev.end());
    CHECK(t.in_order[static_cast<size_t>(v)] == rev);
  }
}

TEST_CASE("the source-extended graph grafts one edge per unit of inflow") {
  AugmentedGraph ag = graphcore::build_augmented(fx::general14::spec());
  FramedGraph star = graphcore::build_gstar(ag);
  CHECK(star.n == 6);
  CHECK(star.m() == 14 + 4);
  // new source has out-degree nx, and the grafted edges land where the x's sat
  CHECK(star.outdeg(0) == 4);
  CHECK(star.indeg(1) == 2);  // x_1, x_2 both entered old vertex 0
  CHECK(star.indeg(2) == 3);  // x_3 plus the two old in-edges of vertex 1
  CHECK(star.in_order[1] == std::vector<int>{14, 15});
  CHECK(star.in_order[2][0] == 16);  // grafted edge keeps the x_3 slot at the bottom
}
