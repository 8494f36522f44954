#pragma once

// Integer flows on framed graphs: Kostant-style counting by vertex-sweep
// dynamic programming, explicit enumeration, and the correspondence between
// integer points of the flow polytope and coherent route matchings.

#include "permuflow/paths.hpp"

#include <vector>

namespace pf {

// Value per full edge handle.
using IntegerFlow = std::vector<long long>;

namespace flows {

// Number of nonnegative integer flows on g with the given netflow (any
// integer vector summing to zero; nonpositive supplies simply give 0).
BigInt kostant(const FramedGraph& g, const std::vector<long long>& netflow,
               const Budget& budget = {});

// All nonnegative integer flows with the given netflow.
std::vector<IntegerFlow> enumerate_integer_flows(const FramedGraph& g,
                                                 const std::vector<long long>& netflow,
                                                 const Budget& budget = {});

// Sum of route indicator vectors of a matching (one route per half-edge).
IntegerFlow indicator_flow(const Universe& u, const std::vector<int>& matching);

// Unique coherent route matching with the given indicator flow (the flow
// must lie in the polytope of the universe's netflow).  Returns one route
// prefix id per half-edge.
std::vector<int> route_matching_from_flow(Universe& u, const IntegerFlow& flow);

// Ehrhart-based h* polynomial: counts lattice points of the t-th dilate for
// t = 0..dim and takes the alternating binomial transform.
Polynomial ehrhart_hstar_oracle(const AugmentedGraph& ag, const Budget& budget = {});

}  // namespace flows
}  // namespace pf
