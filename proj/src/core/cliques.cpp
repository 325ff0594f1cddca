#include "core/cliques.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace gcg {

namespace {

std::vector<ObjectId> intersect_sorted(const std::vector<ObjectId>& a,
                                       const std::vector<ObjectId>& b) {
  std::vector<ObjectId> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::size_t count_common(const std::vector<ObjectId>& a,
                         const std::vector<ObjectId>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Pivoting recursive enumeration. R is the growing clique, P the candidates,
// X the already-expanded vertices; a clique is maximal when both P and X
// are exhausted.
void enumerate_pivot(const NeighborGraph& g, std::vector<ObjectId>& r,
                     std::vector<ObjectId> p, std::vector<ObjectId> x,
                     CliqueSet& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  ObjectId pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (const auto* set : {&p, &x}) {
    for (ObjectId u : *set) {
      const std::size_t c = count_common(p, g.adj[u]);
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    }
  }
  std::vector<ObjectId> ext;
  for (ObjectId v : p) {
    if (!std::binary_search(g.adj[pivot].begin(), g.adj[pivot].end(), v)) {
      ext.push_back(v);
    }
  }
  for (ObjectId v : ext) {
    r.push_back(v);
    enumerate_pivot(g, r, intersect_sorted(p, g.adj[v]),
                    intersect_sorted(x, g.adj[v]), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

// Drops every clique that is a strict subset of another. Size-descending
// sweep with a per-object membership index over kept cliques.
CliqueSet filter_subsets(CliqueSet cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const Clique& a, const Clique& b) {
    return a.size() > b.size();
  });
  CliqueSet kept;
  std::unordered_map<ObjectId, std::vector<std::size_t>> member_of;
  for (Clique& c : cs) {
    std::unordered_map<std::size_t, std::size_t> hits;
    bool subset = false;
    for (ObjectId m : c) {
      auto it = member_of.find(m);
      if (it == member_of.end()) continue;
      for (std::size_t k : it->second) {
        if (++hits[k] == c.size()) {
          subset = true;
          break;
        }
      }
      if (subset) break;
    }
    if (subset) continue;
    const std::size_t idx = kept.size();
    for (ObjectId m : c) member_of[m].push_back(idx);
    kept.push_back(std::move(c));
  }
  return kept;
}

// Maximal cliques of the subgraph induced by `list` that contain its center.
void mine_one_list(const NeighborGraph& g, const NeighborhoodList& list,
                   CliqueSet& out) {
  std::vector<ObjectId> r{list.center};
  enumerate_pivot(g, r, g.adj[list.center], {}, out);
}

}  // namespace

std::vector<NeighborhoodList> build_neighborhoods(const NeighborGraph& g) {
  std::vector<NeighborhoodList> lists;
  for (std::size_t i = 0; i < g.adj.size(); ++i) {
    if (g.adj[i].empty()) continue;  // isolated objects form no relationship
    NeighborhoodList nl;
    nl.center = static_cast<ObjectId>(i);
    nl.members = g.adj[i];
    nl.members.insert(
        std::upper_bound(nl.members.begin(), nl.members.end(), nl.center),
        nl.center);
    lists.push_back(std::move(nl));
  }
  return lists;
}

void canonicalize(CliqueSet& cs) {
  for (Clique& c : cs) std::sort(c.begin(), c.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

CliqueSet mine_maximal_cliques(const NeighborGraph& g,
                               const CliqueMinerOptions& opts) {
  const auto lists = build_neighborhoods(g);

  if (opts.faithful_prune) {
    CliqueSet out;
    for (const auto& nl : lists) {
      if (nl.members.size() >= 2 && g.is_complete(nl.members)) {
        out.push_back(nl.members);
      }
    }
    canonicalize(out);
    return out;
  }

  const int threads = std::max(1, opts.threads);
  std::vector<CliqueSet> partial(lists.size());
  if (threads == 1 || lists.size() < 2) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      mine_one_list(g, lists[i], partial[i]);
    }
  } else {
    // Per-list results land in slots indexed by list position, so the
    // merged order is independent of scheduling.
    std::vector<std::thread> pool;
    const std::size_t nw = std::min<std::size_t>(threads, lists.size());
    for (std::size_t w = 0; w < nw; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < lists.size(); i += nw) {
          mine_one_list(g, lists[i], partial[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  CliqueSet merged;
  for (auto& part : partial) {
    for (auto& c : part) {
      if (c.size() >= 2) merged.push_back(std::move(c));
    }
  }
  canonicalize(merged);
  merged = filter_subsets(std::move(merged));
  canonicalize(merged);
  return merged;
}

CliqueSet brute_force_maximal_cliques(const NeighborGraph& g,
                                      std::size_t limit) {
  if (g.size() > limit) {
    throw input_error("brute_force_maximal_cliques: graph exceeds oracle limit");
  }
  std::vector<ObjectId> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = static_cast<ObjectId>(i);
  CliqueSet out;
  std::vector<ObjectId> r;
  enumerate_pivot(g, r, std::move(all), {}, out);
  std::erase_if(out, [](const Clique& c) { return c.size() < 2; });
  canonicalize(out);
  return out;
}

std::map<std::size_t, std::size_t> cardinality_histogram(const CliqueSet& cs) {
  std::map<std::size_t, std::size_t> h;
  for (const Clique& c : cs) ++h[c.size()];
  return h;
}

}  // namespace gcg
