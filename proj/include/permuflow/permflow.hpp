#pragma once

// Permutation flows: words of letters attached to the full edges of an
// augmented framed graph.  Letters are augmented ids of half-edges (x's) and
// of split edges; the terminal word at the sink is derived, never stored.

#include "permuflow/families.hpp"

#include <vector>

namespace pf {

struct PermutationFlow {
  std::vector<std::vector<int>> words;  // indexed by full edge id
  bool operator==(const PermutationFlow& o) const { return words == o.words; }
  bool operator<(const PermutationFlow& o) const { return words < o.words; }
};

namespace permflow {

struct DirectSplit {
  int letter;   // augmented id the split hangs off
  int carrier;  // edge whose word ends with that letter, just below the split
};

// Concatenated letters entering / leaving a vertex (x items contribute their
// own letter; the word of the minimal edge comes first in leaving order).
std::vector<int> in_perm(const Universe& u, const PermutationFlow& p, int v);
std::vector<int> out_perm(const Universe& u, const PermutationFlow& p, int v);

void validate(const Universe& u, const PermutationFlow& p);
bool is_saturated(const Universe& u, const PermutationFlow& p);

// Edges whose word begins with their own letter.
std::vector<int> splits(const Universe& u, const PermutationFlow& p);
DirectSplit direct_split_of(const Universe& u, const PermutationFlow& p, int t);
// Split letters hanging off `letter` strictly beyond the carrier `from`.
bool has_later_splits(const Universe& u, const PermutationFlow& p, int letter, int from);
// Ordered split chains per half-edge (tail of a letter first, then each
// direct split followed by its own subtree, lowest split first).
std::vector<std::vector<int>> split_chains(const Universe& u, const PermutationFlow& p);

PermutationFlow grove_to_permflow(const Universe& u, const Grove& g);
Grove permflow_to_grove(Universe& u, const PermutationFlow& p);

// Face order on permutation flows via containment of their groves.
bool split_reduction_leq(Universe& u, const PermutationFlow& a, const PermutationFlow& b);

std::vector<int> final_summary(const Universe& u, const PermutationFlow& p);
PermutationFlow from_final_summary(const Universe& u, const std::vector<int>& word);

// Bijection between saturated flows and integer flows with the shifted
// netflow (entry v is a_v + indeg(v) - 1).
std::vector<long long> shifted_netflow(const AugmentedGraph& ag);
IntegerFlow to_shifted_flow(const Universe& u, const PermutationFlow& p);
PermutationFlow from_shifted_flow(const Universe& u, const IntegerFlow& flow);

// Prefix carrying the given letter into the given vertex.
int recover_prefix(Universe& u, const PermutationFlow& p, int letter, int vertex);
// Routes in final-summary order.
std::vector<int> routes_of(Universe& u, const PermutationFlow& p);

std::string word_str(const Universe& u, const std::vector<int>& word);
std::string flow_str(const Universe& u, const PermutationFlow& p);

}  // namespace permflow
}  // namespace pf
