#pragma once

// The weak order on saturated permutation flows: raising/lowering operators
// indexed by splits, the full cover diagram built from the bottom element,
// the lattice property, descent statistics, and line shellings of the
// triangulation read off from linear extensions.

#include "permuflow/permflow.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pf {
namespace weakorder {

// A raising site: the split t hangs off `letter` on `carrier`, the letter is
// free to move up behind t.
struct Ascent {
  int split;
  int letter;
  int carrier;
};

// A lowering site: `letter` rides immediately behind the split t.
struct Descent {
  int split;
  int letter;
};

std::vector<Ascent> ascents(const Universe& u, const PermutationFlow& p);
std::vector<Descent> descents(const Universe& u, const PermutationFlow& p);

// Cover moves of the weak order; both throw unless t names a valid site.
PermutationFlow raise_at(const Universe& u, const PermutationFlow& p, int t);
PermutationFlow lower_at(const Universe& u, const PermutationFlow& p, int t);

// Closed forms for the extreme saturated flows.
PermutationFlow bottom_flow(const Universe& u);
PermutationFlow top_flow(const Universe& u);

struct WeakOrder {
  std::vector<PermutationFlow> elements;              // breadth-first from the bottom
  std::vector<std::vector<std::pair<int, int>>> up;   // (split, higher element)
  std::vector<std::vector<std::pair<int, int>>> down; // (split, lower element)
  std::vector<int> des;                               // descent counts
  int bottom = 0;
  int top = -1;
  std::map<PermutationFlow, int> index;
};

// Breadth-first closure of the bottom element under raisings; verifies the
// element count against the shifted-netflow flow count and the uniqueness of
// the maximal element.
WeakOrder build_weak_order(const Universe& u, const Budget& budget = {});

// Every pair of elements has a meet and a join; on failure the offending
// pair is reported through `witness` when given.
bool lattice_check(const WeakOrder& wo, std::pair<int, int>* witness = nullptr);

// Sum of t^descents over the elements.
Polynomial eulerian_polynomial(const WeakOrder& wo);

// Uniformly random linear extension of the cover diagram.
std::vector<int> linear_extension(const WeakOrder& wo, std::uint64_t seed);

// Shelling check for a linear extension (unit netflow only): every earlier
// intersection must sit inside a codimension-one one, and the restriction
// sets are returned so they can be compared to the descent counts.
struct Shelling {
  bool ok = false;
  std::vector<int> restriction_sizes;  // aligned with `order`
};
Shelling shelling_check(Universe& u, const WeakOrder& wo, const std::vector<int>& order);

}  // namespace weakorder
}  // namespace pf
