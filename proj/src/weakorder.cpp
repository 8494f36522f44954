#include "permuflow/weakorder.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pf {
namespace weakorder {

namespace {

// Out edge at v riding the letter (a newborn's leading occurrence is a
// birth, not a ride).
int carrier_of(const Universe& u, const PermutationFlow& p, int letter, int v) {
  for (int e : u.ag.out_order_hat[v]) {
    if (e == u.ag.y_id()) continue;
    const auto& w = p.words[e];
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != letter) continue;
      if (i == 0 && w[0] == e) continue;
      return e;
    }
  }
  return -1;
}

bool newborn(const PermutationFlow& p, int e) {
  return !p.words[e].empty() && p.words[e][0] == e;
}

}  // namespace

std::vector<Ascent> ascents(const Universe& u, const PermutationFlow& p) {
  std::vector<Ascent> out;
  for (int t : permflow::splits(u, p)) {
    permflow::DirectSplit ds = permflow::direct_split_of(u, p, t);
    if (p.words[ds.carrier].size() < 2) continue;  // the letter is all the carrier has
    if (permflow::has_later_splits(u, p, ds.letter, ds.carrier)) continue;
    out.push_back({t, ds.letter, ds.carrier});
  }
  std::sort(out.begin(), out.end(), [](const Ascent& a, const Ascent& b) { return a.split < b.split; });
  return out;
}

std::vector<Descent> descents(const Universe& u, const PermutationFlow& p) {
  std::vector<Descent> out;
  for (int t : permflow::splits(u, p)) {
    if (p.words[t].size() < 2) continue;
    if (permflow::has_later_splits(u, p, t, t)) continue;
    out.push_back({t, p.words[t][1]});
  }
  std::sort(out.begin(), out.end(), [](const Descent& a, const Descent& b) { return a.split < b.split; });
  return out;
}

PermutationFlow raise_at(const Universe& u, const PermutationFlow& p, int t) {
  permflow::DirectSplit ds = permflow::direct_split_of(u, p, t);
  int e = ds.letter;
  if (p.words[ds.carrier].size() < 2)
    throw invalid_error("raising would leave the carrier below the split empty");
  if (permflow::has_later_splits(u, p, e, ds.carrier))
    throw invalid_error("the letter below the split still carries splits of its own");

  PermutationFlow q = p;
  // the letter leaves its old ride: drop it below t and on every later carrier
  q.words[ds.carrier].pop_back();
  int v = u.ag.head_of(ds.carrier);
  while (v != u.ag.g.n) {
    int c = carrier_of(u, p, e, v);
    if (c < 0) throw violation_error("letter vanished before the sink while raising");
    auto& w = q.words[c];
    auto it = std::find(w.begin(), w.end(), e);
    if (it == w.end()) throw violation_error("raising lost track of the moved letter");
    w.erase(it);
    v = u.ag.head_of(c);
  }
  // ... and rides immediately behind t from now on
  q.words[t].insert(q.words[t].begin() + 1, e);
  v = u.ag.head_of(t);
  while (v != u.ag.g.n) {
    int c = carrier_of(u, p, t, v);
    if (c < 0) throw violation_error("split vanished before the sink while raising");
    auto& w = q.words[c];
    auto it = std::find(w.begin(), w.end(), t);
    if (it == w.end()) throw violation_error("raising lost track of the split");
    w.insert(it + 1, e);
    v = u.ag.head_of(c);
  }
  if (!permflow::is_saturated(u, q)) throw violation_error("raising left the saturated flows");
  return q;
}

PermutationFlow lower_at(const Universe& u, const PermutationFlow& p, int t) {
  if (!newborn(p, t) || p.words[t].size() < 2)
    throw invalid_error("split has no letter riding behind it");
  if (permflow::has_later_splits(u, p, t, t))
    throw invalid_error("the split still carries splits of its own");
  int e = p.words[t][1];

  PermutationFlow q = p;
  // the letter stops riding behind t
  q.words[t].erase(q.words[t].begin() + 1);
  int v = u.ag.head_of(t);
  while (v != u.ag.g.n) {
    int c = carrier_of(u, p, t, v);
    if (c < 0) throw violation_error("split vanished before the sink while lowering");
    auto& w = q.words[c];
    auto it = std::find(w.begin(), w.end(), t);
    if (it == w.end() || it + 1 == w.end() || *(it + 1) != e)
      throw violation_error("letter does not ride immediately behind the split");
    w.erase(it + 1);
    v = u.ag.head_of(c);
  }
  // ... and rejoins the letter the split hangs off, just below it
  permflow::DirectSplit ds = permflow::direct_split_of(u, q, t);
  q.words[ds.carrier].push_back(e);
  int cur = ds.letter;
  v = u.ag.head_of(ds.carrier);
  while (v != u.ag.g.n) {
    int promote = -1;  // highest split hanging off cur at v, mid-edit
    for (int s : u.ag.out_order_hat[v]) {
      if (s == u.ag.y_id() || !newborn(q, s)) continue;
      if (permflow::direct_split_of(u, q, s).letter == cur) promote = s;
    }
    if (promote >= 0) {
      q.words[promote].insert(q.words[promote].begin() + 1, e);
      cur = promote;
      v = u.ag.head_of(promote);
    } else {
      int c = carrier_of(u, q, cur, v);
      if (c < 0) throw violation_error("letter vanished before the sink while lowering");
      auto& w = q.words[c];
      auto it = std::find(w.begin(), w.end(), cur);
      w.insert(it + 1, e);
      v = u.ag.head_of(c);
    }
  }
  if (!permflow::is_saturated(u, q)) throw violation_error("lowering left the saturated flows");
  return q;
}

PermutationFlow bottom_flow(const Universe& u) {
  PermutationFlow p;
  p.words.assign(u.ag.g.edges.size(), {});
  for (int v = 0; v < u.ag.g.n; ++v) {
    std::vector<int> in = permflow::in_perm(u, p, v);
    if (in.empty())
      throw invalid_error("no letter reaches vertex " + std::to_string(v) +
                          "; no saturated flow exists");
    const auto& outs = u.ag.out_order_hat[v];
    for (size_t i = 1; i < outs.size(); ++i) p.words[outs[i]] = {outs[i]};
    p.words[outs[0]] = in;
  }
  if (!permflow::is_saturated(u, p)) throw violation_error("bottom flow is not saturated");
  return p;
}

PermutationFlow top_flow(const Universe& u) {
  PermutationFlow p;
  p.words.assign(u.ag.g.edges.size(), {});
  for (int v = 0; v < u.ag.g.n; ++v) {
    std::vector<int> in = permflow::in_perm(u, p, v);
    if (in.empty())
      throw invalid_error("no letter reaches vertex " + std::to_string(v) +
                          "; no saturated flow exists");
    const auto& outs = u.ag.out_order_hat[v];
    if (outs.size() == 1) {
      p.words[outs[0]] = in;
      continue;
    }
    p.words[outs[0]] = {in[0]};
    for (size_t i = 1; i + 1 < outs.size(); ++i) p.words[outs[i]] = {outs[i]};
    int high = outs.back();
    p.words[high] = {high};
    p.words[high].insert(p.words[high].end(), in.begin() + 1, in.end());
  }
  if (!permflow::is_saturated(u, p)) throw violation_error("top flow is not saturated");
  return p;
}

WeakOrder build_weak_order(const Universe& u, const Budget& budget) {
  // The order lives on saturated flows of the unit netflow e_0 - e_n; shuffled
  // instances only carry the face order.
  for (int v = 0; v <= u.ag.g.n; ++v) {
    long long want = v == 0 ? 1 : v == u.ag.g.n ? -1 : 0;
    if (u.ag.netflow[static_cast<size_t>(v)] != want)
      throw usage_error("weak order requires the unit netflow e_0 - e_n");
  }
  WeakOrder wo;
  PermutationFlow bot = bottom_flow(u);
  wo.elements.push_back(bot);
  wo.index[bot] = 0;
  wo.up.emplace_back();
  wo.down.emplace_back();
  wo.des.push_back(static_cast<int>(descents(u, bot).size()));

  for (size_t i = 0; i < wo.elements.size(); ++i) {
    PermutationFlow cur = wo.elements[i];
    for (const auto& a : ascents(u, cur)) {
      PermutationFlow nxt = raise_at(u, cur, a.split);
      int j;
      auto it = wo.index.find(nxt);
      if (it != wo.index.end()) {
        j = it->second;
      } else {
        j = static_cast<int>(wo.elements.size());
        if (wo.elements.size() + 1 > budget.max_objects)
          throw budget_error("weak order exceeded the object budget");
        wo.index[nxt] = j;
        wo.elements.push_back(std::move(nxt));
        wo.up.emplace_back();
        wo.down.emplace_back();
        wo.des.push_back(static_cast<int>(descents(u, wo.elements[j]).size()));
      }
      wo.up[i].push_back({a.split, j});
      wo.down[j].push_back({a.split, static_cast<int>(i)});
    }
  }

  BigInt expect = flows::kostant(u.ag.g, permflow::shifted_netflow(u.ag), budget);
  if (BigInt(static_cast<unsigned long long>(wo.elements.size())) != expect)
    throw violation_error("weak order does not reach every saturated flow");
  for (size_t i = 0; i < wo.elements.size(); ++i) {
    if (!wo.up[i].empty()) continue;
    if (wo.top >= 0) throw violation_error("weak order has two maximal elements");
    wo.top = static_cast<int>(i);
  }
  if (wo.top < 0 || !(wo.elements[wo.top] == top_flow(u)))
    throw violation_error("maximal element differs from its closed form");
  return wo;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, int i) { b[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }

int popcount(const Bits& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

std::vector<int> topological(const WeakOrder& wo) {
  size_t n = wo.elements.size();
  std::vector<int> indeg(n, 0), order;
  for (size_t i = 0; i < n; ++i) indeg[i] = static_cast<int>(wo.down[i].size());
  std::vector<int> ready;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
  while (!ready.empty()) {
    int i = ready.back();
    ready.pop_back();
    order.push_back(i);
    for (const auto& [t, j] : wo.up[i])
      if (--indeg[j] == 0) ready.push_back(j);
  }
  if (order.size() != n) throw violation_error("cover diagram has a cycle");
  return order;
}

// Unique greatest element of the intersection of two principal down-sets
// (or least of up-sets); -1 when there is none.
int bound_of(const std::vector<Bits>& closure, const std::vector<int>& sizes, const Bits& a,
             const Bits& b) {
  size_t words = a.size();
  Bits inter(words);
  for (size_t w = 0; w < words; ++w) inter[w] = a[w] & b[w];
  int best = -1, best_size = -1;
  for (size_t w = 0; w < words; ++w) {
    std::uint64_t bits = inter[w];
    while (bits) {
      int i = static_cast<int>(w * 64) + __builtin_ctzll(bits);
      bits &= bits - 1;
      if (sizes[i] > best_size) {
        best = i;
        best_size = sizes[i];
      }
    }
  }
  if (best < 0) return -1;
  return closure[best] == inter ? best : -1;
}

}  // namespace

bool lattice_check(const WeakOrder& wo, std::pair<int, int>* witness) {
  size_t n = wo.elements.size();
  size_t words = (n + 63) / 64;
  std::vector<int> order = topological(wo);
  std::vector<Bits> below(n, Bits(words, 0)), above(n, Bits(words, 0));
  for (int i : order) {
    set_bit(below[i], i);
    for (const auto& [t, j] : wo.down[i])
      for (size_t w = 0; w < words; ++w) below[i][w] |= below[j][w];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    set_bit(above[i], i);
    for (const auto& [t, j] : wo.up[i])
      for (size_t w = 0; w < words; ++w) above[i][w] |= above[j][w];
  }
  std::vector<int> bsize(n), asize(n);
  for (size_t i = 0; i < n; ++i) {
    bsize[i] = popcount(below[i]);
    asize[i] = popcount(above[i]);
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (bound_of(below, bsize, below[a], below[b]) < 0 ||
          bound_of(above, asize, above[a], above[b]) < 0) {
        if (witness) *witness = {static_cast<int>(a), static_cast<int>(b)};
        return false;
      }
    }
  return true;
}

Polynomial eulerian_polynomial(const WeakOrder& wo) {
  Polynomial poly;
  for (int d : wo.des) {
    if (static_cast<size_t>(d) >= poly.coeff.size()) poly.coeff.resize(d + 1, 0);
    poly.coeff[d] += 1;
  }
  poly.trim();
  return poly;
}

std::vector<int> linear_extension(const WeakOrder& wo, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t n = wo.elements.size();
  std::vector<int> indeg(n, 0), out;
  for (size_t i = 0; i < n; ++i) indeg[i] = static_cast<int>(wo.down[i].size());
  std::vector<int> ready;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
  while (!ready.empty()) {
    std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
    size_t at = pick(rng);
    int i = ready[at];
    ready[at] = ready.back();
    ready.pop_back();
    out.push_back(i);
    for (const auto& [t, j] : wo.up[i])
      if (--indeg[j] == 0) ready.push_back(j);
  }
  if (out.size() != n) throw violation_error("cover diagram has a cycle");
  return out;
}

Shelling shelling_check(Universe& u, const WeakOrder& wo, const std::vector<int>& order) {
  if (u.ag.nx != 1) throw usage_error("shelling requires a unit-netflow instance");
  size_t n = wo.elements.size();
  if (order.size() != n) throw usage_error("order must list every element exactly once");
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < n; ++i) {
    int e = order[i];
    if (e < 0 || static_cast<size_t>(e) >= n || pos[e] >= 0)
      throw usage_error("order is not a permutation of the elements");
    pos[e] = static_cast<int>(i);
  }
  for (size_t j = 0; j < n; ++j)
    for (const auto& [t, i] : wo.down[j])
      if (pos[i] > pos[j]) throw usage_error("order is not a linear extension");

  std::vector<std::vector<int>> facets(n);
  size_t width = 0;
  for (size_t k = 0; k < n; ++k) {
    facets[k] = permflow::routes_of(u, wo.elements[order[k]]);
    std::sort(facets[k].begin(), facets[k].end());
    if (k == 0) width = facets[k].size();
    if (facets[k].size() != width) throw violation_error("facets differ in size");
  }
  if (width > 60) throw budget_error("facet too large for shelling masks");
  int d = static_cast<int>(width) - 1;

  Shelling res;
  res.ok = true;
  for (size_t k = 0; k < n && res.ok; ++k) {
    std::map<int, int> bit;
    for (size_t r = 0; r < width; ++r) bit[facets[k][r]] = static_cast<int>(r);
    std::vector<std::uint64_t> inters(k);
    std::set<std::uint64_t> ridges;  // earlier intersections of full codimension one
    for (size_t i = 0; i < k; ++i) {
      std::uint64_t mask = 0;
      for (int r : facets[i]) {
        auto it = bit.find(r);
        if (it != bit.end()) mask |= 1ULL << it->second;
      }
      inters[i] = mask;
      if (__builtin_popcountll(mask) == d) ridges.insert(mask);
    }
    if (k > 0 && ridges.empty()) res.ok = false;
    for (size_t i = 0; i < k && res.ok; ++i) {
      bool covered = false;
      for (std::uint64_t rm : ridges)
        if ((inters[i] & ~rm) == 0) {
          covered = true;
          break;
        }
      if (!covered) res.ok = false;
    }
    res.restriction_sizes.push_back(static_cast<int>(ridges.size()));
  }
  return res;
}

}  // namespace weakorder
}  // namespace pf
