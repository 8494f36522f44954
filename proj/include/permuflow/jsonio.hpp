#pragma once

// JSON views of every object the command line prints.  Keys keep insertion
// order so identical inputs serialize byte-identically; big integers render
// as JSON numbers when they fit in 64 bits and as decimal strings otherwise;
// rationals always render as strings ("3", "1/2").

#include "permuflow/triangulation.hpp"
#include "permuflow/weakorder.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace pf {
namespace jsonio {

using json = nlohmann::ordered_json;

json bigint_json(const BigInt& v);
json rational_json(const BigRat& v);
BigRat parse_rational(const std::string& text);

json graph_json(const AugmentedGraph& ag);
json flow_json(const IntegerFlow& f);
json polynomial_json(const Polynomial& p);

json routes_json(const Universe& u);
json matching_json(const Universe& u, const RouteMatching& m);
json clique_json(const Universe& u, const Clique& c);
json multiclique_json(const Universe& u, const Multiclique& m);
json grove_json(const Universe& u, const Grove& g);
json shuffle_json(const Universe& u, const Shuffle& s);
json permflow_json(const Universe& u, const PermutationFlow& p);
json simplex_json(const Universe& u, const triangulation::Simplex& s);
json located_json(const Universe& u, const triangulation::Located& loc);
json weak_order_json(const Universe& u, const weakorder::WeakOrder& wo);

// Graphviz view of the cover diagram, edges labeled by their splits.
std::string hasse_dot(const Universe& u, const weakorder::WeakOrder& wo);

}  // namespace jsonio
}  // namespace pf
