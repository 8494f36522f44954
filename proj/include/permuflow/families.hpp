#pragma once

// The equivalent combinatorial families living over an augmented framed
// graph: route matchings and cliques, multicliques, vineyards with shuffles,
// and groves.  All objects reference interned prefix ids of a Universe.

#include "permuflow/flows.hpp"

#include <utility>
#include <vector>

namespace pf {

// One route (prefix id ending at the sink) per half-edge, indexed by x.
using RouteMatching = std::vector<int>;

// Pairwise coherent matchings, kept sorted in the componentwise route order
// (which is total on a clique).  rank = matchings.size() - 1.
struct Clique {
  std::vector<RouteMatching> matchings;
  int rank() const { return static_cast<int>(matchings.size()) - 1; }
  bool operator==(const Clique& o) const { return matchings == o.matchings; }
  bool operator<(const Clique& o) const { return matchings < o.matchings; }
};

// Rows of routes per half-edge, all of size rank+1, weakly increasing in the
// suffix order; column j collects the j-th entry of every row.
struct Multiclique {
  std::vector<std::vector<int>> rows;
  int rank() const { return rows.empty() ? -1 : static_cast<int>(rows[0].size()) - 1; }
  bool operator==(const Multiclique& o) const { return rows == o.rows; }
};

// Prefix-closed set of prefixes whose maximal elements are routes.
struct Vineyard {
  std::vector<int> prefixes;  // sorted ids
  bool operator==(const Vineyard& o) const { return prefixes == o.prefixes; }
};

// Per-vertex noncrossing forests; an edge joins an arriving prefix to an
// outgoing augmented edge id (y at the sink).
struct Grove {
  std::vector<std::vector<std::pair<int, int>>> at;  // size n+1, canonically sorted
  bool operator==(const Grove& o) const { return at == o.at; }
  bool operator<(const Grove& o) const { return at < o.at; }
};

// A shuffle assigns ranks 1..rank to the splits of an object, strictly
// increasing along each half-edge chain and jointly surjective.  Splits are
// identified by the interned prefix they cut out.
struct Shuffle {
  std::vector<std::vector<std::pair<int, int>>> chains;  // per x: (split prefix, sigma)
  int rank = 0;
  bool operator==(const Shuffle& o) const { return chains == o.chains && rank == o.rank; }
};

namespace families {

// ---- routes and matchings ----

// Suffix order at the common half-edge vertex; routes must share their x.
bool route_less(const Universe& u, int route1, int route2);
// Componentwise comparability of matchings (subpath-related counts as equal).
bool matching_leq(const Universe& u, const RouteMatching& a, const RouteMatching& b);
// All routes of one matching pairwise coherent?
bool matching_coherent(const Universe& u, const RouteMatching& a);
// Union of two matchings coherent and nowhere strictly crosswise?
bool matchings_coherent(const Universe& u, const RouteMatching& a, const RouteMatching& b);

void validate_clique(const Universe& u, const Clique& c);
Clique make_clique(const Universe& u, std::vector<RouteMatching> matchings);

// ---- clique <-> multiclique ----

Multiclique clique_to_multiclique(const Universe& u, const Clique& c);
Clique multiclique_to_clique(const Universe& u, const Multiclique& m);
void validate_multiclique(const Universe& u, const Multiclique& m);
// Face order: the columns of a must appear among the columns of b in order.
bool multiclique_leq(const Universe& u, const Multiclique& a, const Multiclique& b);

// ---- vineyards ----

Vineyard vineyard_from_matchings(const Universe& u, const std::vector<RouteMatching>& ms);
void validate_vineyard(const Universe& u, const Vineyard& v);
// Split chains per half-edge, in chain order (tail part first, then each
// direct split followed by its own subtree, bottom split first).
std::vector<std::vector<int>> vineyard_splits(const Universe& u, const Vineyard& v);
// Minimal route extension of a prefix inside the vineyard.
int vineyard_minext(const Universe& u, const Vineyard& v, int prefix);
// Natural labeling: letter (augmented id of split edge or half-edge)
// attached to every prefix of the vineyard.
int vineyard_natural_label(const Universe& u, const Vineyard& v, int prefix);

Multiclique vineyard_shuffle_to_multiclique(const Universe& u, const Vineyard& v,
                                            const Shuffle& s);
std::pair<Vineyard, Shuffle> multiclique_to_vineyard_shuffle(const Universe& u,
                                                             const Multiclique& m);

// ---- groves ----

Grove vineyard_to_grove(const Universe& u, const Vineyard& v);
Vineyard grove_to_vineyard(Universe& u, const Grove& g);
void validate_grove(const Universe& u, const Grove& g);
bool grove_is_saturated(const Universe& u, const Grove& g);
void canonicalize_grove(const Universe& u, Grove& g);
bool grove_subset(const Grove& a, const Grove& b);
// Split chains of a grove (same convention as vineyard_splits; a split is
// identified by the prefix it creates).
std::vector<std::vector<int>> grove_splits(Universe& u, const Grove& g);

// Shuffle face order: a's grove must be contained in b's and the columns of
// a's multiclique must appear, in order, among the columns of b's.
bool shuffle_face_leq(Universe& u, const Grove& ga, const Shuffle& sa, const Grove& gb,
                      const Shuffle& sb);

// Unique smallest/largest saturated groves containing g in the face order.
Grove min_saturation(Universe& u, const Grove& g);
Grove max_saturation(Universe& u, const Grove& g);

// All cliques (faces of the triangulation complex), deduplicated; the empty
// face is not included.
std::vector<Clique> enumerate_cliques(Universe& u, const Budget& budget = {});

// Clique of a saturated grove under a shuffle (columns of the multiclique).
Clique grove_shuffle_to_clique(Universe& u, const Grove& g, const Shuffle& s);

// All shuffles of a grove/vineyard with the given chains.
std::vector<Shuffle> enumerate_shuffles(const std::vector<std::vector<int>>& chains,
                                        const Budget& budget = {});

}  // namespace families
}  // namespace pf
