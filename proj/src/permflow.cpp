#include "permuflow/permflow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pf {
namespace permflow {

namespace {

bool legal_letter(const AugmentedGraph& ag, int id) {
  if (ag.is_x(id)) return true;
  if (id < 0 || id >= static_cast<int>(ag.g.edges.size())) return false;
  const auto& e = ag.g.edges[id];
  return ag.out_pos_hat(e.tail, id) > 0;  // non-minimal edges only
}

bool is_newborn(const PermutationFlow& p, int e) {
  return !p.words[e].empty() && p.words[e][0] == e;
}

// Out edge at v whose word carries the letter (excluding a newborn's leading
// occurrence, which is a birth, not a ride).
int carrier_at(const Universe& u, const PermutationFlow& p, int letter, int v) {
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

}  // namespace

std::vector<int> in_perm(const Universe& u, const PermutationFlow& p, int v) {
  std::vector<int> out;
  for (int item : u.ag.in_order_hat[v]) {
    if (u.ag.is_x(item))
      out.push_back(item);
    else
      out.insert(out.end(), p.words[item].begin(), p.words[item].end());
  }
  return out;
}

std::vector<int> out_perm(const Universe& u, const PermutationFlow& p, int v) {
  if (v == u.ag.g.n) return in_perm(u, p, v);
  std::vector<int> out;
  for (int e : u.ag.out_order_hat[v])
    out.insert(out.end(), p.words[e].begin(), p.words[e].end());
  return out;
}

void validate(const Universe& u, const PermutationFlow& p) {
  size_t m = u.ag.g.edges.size();
  if (p.words.size() != m) throw invalid_error("word count does not match the edge count");
  for (size_t e = 0; e < m; ++e)
    for (int letter : p.words[e])
      if (!legal_letter(u.ag, letter))
        throw invalid_error("word letter is neither a half-edge nor a non-minimal edge");
  for (int v = 0; v <= u.ag.g.n; ++v) {
    std::vector<int> in = in_perm(u, p, v);
    std::set<int> seen(in.begin(), in.end());
    if (seen.size() != in.size()) throw invalid_error("entering letters repeat at a vertex");
    if (v == u.ag.g.n) continue;
    std::vector<int> out = out_perm(u, p, v);
    std::set<int> oseen(out.begin(), out.end());
    if (oseen.size() != out.size()) throw invalid_error("leaving letters repeat at a vertex");
    // drop newborn letters; the remainder must equal the entering sequence
    std::vector<int> carried;
    std::set<int> born;
    for (int e : u.ag.out_order_hat[v])
      if (is_newborn(p, e)) born.insert(e);
    for (int e : u.ag.out_order_hat[v]) {
      const auto& w = p.words[e];
      for (size_t i = 0; i < w.size(); ++i) {
        if (i == 0 && born.count(w[0]) && w[0] == e) continue;
        if (born.count(w[i])) throw invalid_error("a letter is born and carried at the same vertex");
        carried.push_back(w[i]);
      }
    }
    if (carried != in) throw invalid_error("leaving letters do not unshuffle to the entering ones");
  }
  for (int t : splits(u, p)) direct_split_of(u, p, t);  // must resolve
}

bool is_saturated(const Universe& u, const PermutationFlow& p) {
  validate(u, p);
  for (size_t e = 0; e < p.words.size(); ++e) {
    if (p.words[e].empty()) return false;
    const auto& rec = u.ag.g.edges[e];
    if (u.ag.out_pos_hat(rec.tail, static_cast<int>(e)) > 0 && !is_newborn(p, static_cast<int>(e)))
      return false;
  }
  return true;
}

std::vector<int> splits(const Universe& u, const PermutationFlow& p) {
  std::vector<int> out;
  for (size_t e = 0; e < p.words.size(); ++e)
    if (is_newborn(p, static_cast<int>(e))) out.push_back(static_cast<int>(e));
  (void)u;
  return out;
}

DirectSplit direct_split_of(const Universe& u, const PermutationFlow& p, int t) {
  if (!is_newborn(p, t)) throw invalid_error("edge is not a split of the flow");
  int v = u.ag.g.edges[t].tail;
  const auto& order = u.ag.out_order_hat[v];
  int pos = u.ag.out_pos_hat(v, t);
  for (int q = pos - 1; q >= 0; --q) {
    int e = order[q];
    const auto& w = p.words[e];
    if (w.empty()) continue;
    if (w.size() == 1 && w[0] == e) continue;  // a bare newborn carries nothing yet
    return {w.back(), e};
  }
  throw invalid_error("split has no letter below it to hang off");
}

bool has_later_splits(const Universe& u, const PermutationFlow& p, int letter, int from) {
  int v = u.ag.head_of(from);
  while (v >= 0 && v != u.ag.g.n) {
    for (int e : u.ag.out_order_hat[v]) {
      if (e == u.ag.y_id() || !is_newborn(p, e)) continue;
      if (direct_split_of(u, p, e).letter == letter) return true;
    }
    int c = carrier_at(u, p, letter, v);
    if (c < 0) throw invalid_error("letter vanishes before the sink");
    v = u.ag.head_of(c);
  }
  return false;
}

std::vector<std::vector<int>> split_chains(const Universe& u, const PermutationFlow& p) {
  std::vector<std::vector<int>> chains(u.ag.nx);
  std::function<void(int, int, std::vector<int>&)> walk = [&](int letter, int at,
                                                              std::vector<int>& out) {
    int v = u.ag.head_of(at);
    if (v < 0 || v == u.ag.g.n) return;
    std::vector<int> ts;
    for (int e : u.ag.out_order_hat[v]) {
      if (e == u.ag.y_id() || !is_newborn(p, e)) continue;
      if (direct_split_of(u, p, e).letter == letter) ts.push_back(e);
    }
    int c = carrier_at(u, p, letter, v);
    if (c < 0) throw invalid_error("letter vanishes before the sink");
    walk(letter, c, out);
    for (int t : ts) {
      out.push_back(t);
      walk(t, t, out);
    }
  };
  for (int x = 0; x < u.ag.nx; ++x) walk(u.ag.x_id(x), u.ag.x_id(x), chains[x]);
  return chains;
}

PermutationFlow grove_to_permflow(const Universe& u, const Grove& g) {
  families::validate_grove(u, g);
  PermutationFlow p;
  p.words.assign(u.ag.g.edges.size(), {});
  // minimal incident edge of every left prefix
  std::map<int, int> min_pos;  // prefix -> smallest out position used
  for (int v = 0; v < u.ag.g.n; ++v)
    for (const auto& [pre, e] : g.at[v]) {
      int pos = u.ag.out_pos_hat(v, e);
      auto it = min_pos.find(pre);
      if (it == min_pos.end() || pos < it->second) min_pos[pre] = pos;
    }
  std::map<int, int> label_memo;
  std::function<int(int)> label = [&](int pre) -> int {
    auto it = label_memo.find(pre);
    if (it != label_memo.end()) return it->second;
    const auto& node = u.pool.at(pre);
    int result;
    if (node.parent < 0) {
      result = node.edge;  // half-edge letter
    } else {
      int v0 = u.pool.at(node.parent).vertex;
      bool split = u.ag.out_pos_hat(v0, node.edge) != min_pos.at(node.parent);
      result = split ? node.edge : label(node.parent);
    }
    label_memo[pre] = result;
    return result;
  };
  Grove canon = g;
  families::canonicalize_grove(u, canon);
  for (int v = 0; v < u.ag.g.n; ++v)
    for (const auto& [pre, e] : canon.at[v]) {
      bool split = u.ag.out_pos_hat(v, e) != min_pos.at(pre);
      // canonical order sorts by prefix first, so words grow bottom to top
      auto child = u.pool.interned.find({pre, e});
      if (child == u.pool.interned.end()) throw invalid_error("grove extension prefix was never formed");
      p.words[e].push_back(split ? e : label(pre));
    }
  validate(u, p);
  return p;
}

Grove permflow_to_grove(Universe& u, const PermutationFlow& p) {
  validate(u, p);
  Grove g;
  g.at.assign(u.ag.g.n + 1, {});
  std::map<int, int> cur;  // letter -> prefix arriving at its current vertex
  for (int x = 0; x < u.ag.nx; ++x) cur[u.ag.x_id(x)] = u.x_roots[x];
  for (int v = 0; v < u.ag.g.n; ++v) {
    std::vector<std::pair<int, int>> updates;
    for (int e : u.ag.out_order_hat[v]) {
      const auto& w = p.words[e];
      if (w.empty()) continue;
      size_t start = 0;
      if (w[0] == e) {  // split born here, hanging off its parent letter
        int parent = direct_split_of(u, p, e).letter;
        int pre = cur.at(parent);
        g.at[v].push_back({pre, e});
        updates.push_back({e, u.extend(pre, e)});
        start = 1;
      }
      for (size_t i = start; i < w.size(); ++i) {
        int pre = cur.at(w[i]);
        g.at[v].push_back({pre, e});
        updates.push_back({w[i], u.extend(pre, e)});
      }
    }
    for (const auto& [letter, pre] : updates) cur[letter] = pre;
  }
  for (int letter : in_perm(u, p, u.ag.g.n)) g.at[u.ag.g.n].push_back({cur.at(letter), u.ag.y_id()});
  families::canonicalize_grove(u, g);
  families::validate_grove(u, g);
  return g;
}

bool split_reduction_leq(Universe& u, const PermutationFlow& a, const PermutationFlow& b) {
  return families::grove_subset(permflow_to_grove(u, a), permflow_to_grove(u, b));
}

std::vector<int> final_summary(const Universe& u, const PermutationFlow& p) {
  return in_perm(u, p, u.ag.g.n);
}

PermutationFlow from_final_summary(const Universe& u, const std::vector<int>& word) {
  const auto& ag = u.ag;
  size_t m = ag.g.edges.size();
  // expected letters: every half-edge and every non-minimal edge, once each
  std::set<int> expected;
  for (int x = 0; x < ag.nx; ++x) expected.insert(ag.x_id(x));
  for (size_t e = 0; e < m; ++e)
    if (ag.out_pos_hat(ag.g.edges[e].tail, static_cast<int>(e)) > 0) expected.insert(static_cast<int>(e));
  std::set<int> given(word.begin(), word.end());
  if (given.size() != word.size() || given != expected)
    throw invalid_error("terminal word must list every half-edge and split letter once");

  // first letters of every edge word, bottom up
  std::vector<int> first(m, -1);
  for (int v = 0; v < ag.g.n; ++v) {
    for (int e : ag.out_order_hat[v])
      if (ag.out_pos_hat(v, e) > 0) first[e] = e;
    if (ag.in_order_hat[v].empty())
      throw invalid_error("a vertex receives nothing; no saturated flow exists");
    int lead = ag.in_order_hat[v][0];
    first[ag.out_order_hat[v][0]] = ag.is_x(lead) ? lead : first[lead];
  }

  PermutationFlow p;
  p.words.assign(m, {});
  for (int v = ag.g.n; v >= 0; --v) {
    std::vector<int> seq;
    if (v == ag.g.n) {
      seq = word;
    } else {
      for (int e : ag.out_order_hat[v]) {
        const auto& w = p.words[e];
        size_t start = ag.out_pos_hat(v, e) > 0 ? 1 : 0;  // drop the newborn letter
        seq.insert(seq.end(), w.begin() + start, w.end());
      }
    }
    const auto& items = ag.in_order_hat[v];
    if (items.empty()) {
      if (!seq.empty()) throw invalid_error("letters arrive at a vertex with no entries");
      continue;
    }
    std::vector<size_t> cut(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
      int lead = ag.is_x(items[i]) ? items[i] : first[items[i]];
      auto it = std::find(seq.begin(), seq.end(), lead);
      if (it == seq.end()) throw invalid_error("terminal word does not contain an expected leading letter");
      cut[i] = static_cast<size_t>(it - seq.begin());
      if (i > 0 && cut[i] <= cut[i - 1]) throw invalid_error("entering blocks are out of order");
    }
    if (cut[0] != 0) throw invalid_error("entering blocks do not start the sequence");
    for (size_t i = 0; i < items.size(); ++i) {
      size_t end = i + 1 < items.size() ? cut[i + 1] : seq.size();
      if (ag.is_x(items[i])) {
        if (end != cut[i] + 1) throw invalid_error("a half-edge block must be a single letter");
      } else {
        p.words[items[i]].assign(seq.begin() + cut[i], seq.begin() + end);
      }
    }
  }
  validate(u, p);
  if (final_summary(u, p) != word) throw violation_error("terminal word reconstruction failed");
  return p;
}

std::vector<long long> shifted_netflow(const AugmentedGraph& ag) {
  std::vector<long long> d(ag.g.n + 1, 0);
  long long total = 0;
  for (int v = 0; v < ag.g.n; ++v) {
    long long xs = 0;
    for (int x = 0; x < ag.nx; ++x)
      if (ag.x_vertex[x] == v) ++xs;
    d[v] = xs + ag.g.indeg(v) - 1;
    total += d[v];
  }
  d[ag.g.n] = -total;
  return d;
}

IntegerFlow to_shifted_flow(const Universe& u, const PermutationFlow& p) {
  if (!is_saturated(u, p)) throw invalid_error("only saturated flows map to shifted integer flows");
  IntegerFlow f(p.words.size());
  for (size_t e = 0; e < p.words.size(); ++e) f[e] = static_cast<long long>(p.words[e].size()) - 1;
  return f;
}

PermutationFlow from_shifted_flow(const Universe& u, const IntegerFlow& flow) {
  const auto& ag = u.ag;
  size_t m = ag.g.edges.size();
  if (flow.size() != m) throw invalid_error("flow length does not match the edge count");
  auto d = shifted_netflow(ag);
  for (int v = 0; v <= ag.g.n; ++v) {
    long long balance = d[v];
    for (size_t e = 0; e < m; ++e) {
      if (flow[e] < 0) throw invalid_error("shifted flow must be nonnegative");
      if (ag.g.edges[e].head == v) balance += flow[e];
      if (ag.g.edges[e].tail == v) balance -= flow[e];
    }
    if (balance != 0) throw invalid_error("shifted flow violates conservation");
  }
  PermutationFlow p;
  p.words.assign(m, {});
  for (int v = 0; v < ag.g.n; ++v) {
    std::vector<int> queue;
    for (int item : ag.in_order_hat[v]) {
      if (ag.is_x(item))
        queue.push_back(item);
      else
        queue.insert(queue.end(), p.words[item].begin(), p.words[item].end());
    }
    size_t idx = 0;
    for (int e : ag.out_order_hat[v]) {
      size_t take = static_cast<size_t>(flow[e]) + 1;
      if (ag.out_pos_hat(v, e) > 0) {
        p.words[e].push_back(e);
        --take;
      }
      if (idx + take > queue.size()) throw invalid_error("shifted flow consumes more letters than arrive");
      p.words[e].insert(p.words[e].end(), queue.begin() + idx, queue.begin() + idx + take);
      idx += take;
    }
    if (idx != queue.size()) throw invalid_error("shifted flow leaves letters behind");
  }
  validate(u, p);
  return p;
}

int recover_prefix(Universe& u, const PermutationFlow& p, int letter, int vertex) {
  int cur, v;
  if (u.ag.is_x(letter)) {
    int x = letter - static_cast<int>(u.ag.g.edges.size());
    cur = u.x_roots[x];
    v = u.ag.x_vertex[x];
  } else {
    if (!is_newborn(p, letter)) throw invalid_error("letter is not a split of the flow");
    int parent = direct_split_of(u, p, letter).letter;
    int base = recover_prefix(u, p, parent, u.ag.g.edges[letter].tail);
    cur = u.extend(base, letter);
    v = u.ag.g.edges[letter].head;
  }
  while (v != vertex) {
    if (v > vertex || v == u.ag.g.n) throw invalid_error("letter does not pass through the vertex");
    int c = carrier_at(u, p, letter, v);
    if (c < 0) throw invalid_error("letter vanishes before the vertex");
    cur = u.extend(cur, c);
    v = u.ag.head_of(c);
  }
  return cur;
}

std::vector<int> routes_of(Universe& u, const PermutationFlow& p) {
  std::vector<int> out;
  for (int letter : final_summary(u, p)) out.push_back(recover_prefix(u, p, letter, u.ag.g.n));
  return out;
}

std::string word_str(const Universe& u, const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << graphcore::letter_name(u.ag, word[i]);
  }
  return os.str();
}

std::string flow_str(const Universe& u, const PermutationFlow& p) {
  std::ostringstream os;
  for (size_t e = 0; e < p.words.size(); ++e) {
    if (e) os << '\n';
    os << graphcore::edge_name(u.ag, static_cast<int>(e)) << ": " << word_str(u, p.words[e]);
  }
  return os.str();
}

}  // namespace permflow
}  // namespace pf
