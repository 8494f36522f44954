#pragma once

// The unimodular triangulation of the flow polytope induced by saturated
// groves and their shuffles, together with the independent volume formulas
// it must agree with.

#include "permuflow/families.hpp"

#include <vector>

namespace pf {
namespace triangulation {

struct Simplex {
  Grove grove;
  Shuffle shuffle;
  Clique clique;
  std::vector<IntegerFlow> vertices;  // indicator flows of the matchings
};

// All saturated groves, by sweeping vertices upward and interleaving
// noncrossing spanning trees (monotone staircases) at every vertex.
std::vector<Grove> enumerate_saturated_groves(Universe& u, const Budget& budget = {});

// Top-dimensional simplices: saturated groves with strict shuffles.
std::vector<Simplex> triangulate(Universe& u, const Budget& budget = {});

// Determinant of the simplex on the split-edge coordinates; +-1 when the
// simplex is unimodular.
BigInt simplex_determinant(const Universe& u, const Simplex& s);
bool unimodular_check(Universe& u, const Budget& budget = {});

// Volume = number of top simplices, summed without expanding the shuffles.
BigInt volume_by_count(Universe& u, const Budget& budget = {});
// Volume as a sum of Kostant numbers over half-edge indexed compositions.
BigInt volume_lidskii(const AugmentedGraph& ag, const Budget& budget = {});
// Classic form: binomials times powers of the netflow times Kostant numbers.
BigInt volume_lidskii_classic(const AugmentedGraph& ag, const Budget& budget = {});
// Volume of the unit-netflow polytope via the shifted outdegree vector.
BigInt volume_outdegree(const FramedGraph& g, const Budget& budget = {});
// ... and via the shifted indegree vector.
BigInt volume_indegree(const FramedGraph& g, const Budget& budget = {});

// Number of saturated groves (equivalently vineyards or permutation flows):
// sum of Kostant numbers over half-edge indexed compositions,
BigInt count_unshuffled_formula(const AugmentedGraph& ag, const Budget& budget = {});
// the same count as one Kostant number on the source-extended graph,
BigInt count_unshuffled_star(const AugmentedGraph& ag, const Budget& budget = {});
// and as the unit-netflow volume of the source-extended graph, computed by
// enumerating its own triangulation.
BigInt count_unshuffled_star_volume(const AugmentedGraph& ag, const Budget& budget = {});
// Saturated permutation flows counted through the shifted-netflow bijection.
BigInt count_saturated_permflows(const Universe& u, const Budget& budget = {});

// Integer flow recording how many splits hang beyond each edge of a grove.
IntegerFlow grove_composition_flow(Universe& u, const Grove& g);
// Saturated groves with the given per-half-edge chain lengths biject onto
// the integer flows for the corresponding composition netflow.
bool composition_fiber_check(Universe& u, const std::vector<long long>& j,
                             const Budget& budget = {});

// Exact location of a rational point: the unique face containing it in its
// relative interior, with positive barycentric weights summing to one.
struct Located {
  Multiclique multiclique;
  Clique clique;
  std::vector<BigRat> weights;  // one per multiclique column
};
Located locate_point(Universe& u, const std::vector<BigRat>& point);

// Vertices of the flow polytope: feasible flows with forest support.
std::vector<IntegerFlow> polytope_vertices(const FramedGraph& g,
                                           const std::vector<long long>& netflow,
                                           const Budget& budget = {});

}  // namespace triangulation
}  // namespace pf
