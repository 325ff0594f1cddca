#include "core/itemsets.hpp"

#include <algorithm>

namespace gcg {

namespace {

std::vector<std::uint32_t> intersect_sorted(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void sort_patterns(std::vector<InterestingPattern>& out) {
  std::sort(out.begin(), out.end(),
            [](const InterestingPattern& a, const InterestingPattern& b) {
              if (a.items.size() != b.items.size()) {
                return a.items.size() < b.items.size();
              }
              return a.items < b.items;
            });
}

}  // namespace

TransactionDB TransactionDB::build(
    const std::vector<std::vector<Item>>& input) {
  TransactionDB db;
  std::vector<Item> all;
  for (const auto& t : input) all.insert(all.end(), t.begin(), t.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  db.items = std::move(all);
  db.tidlists.resize(db.items.size());
  for (std::size_t tid = 0; tid < input.size(); ++tid) {
    std::vector<std::uint32_t> row;
    for (const Item& it : input[tid]) {
      const auto pos = std::lower_bound(db.items.begin(), db.items.end(), it) -
                       db.items.begin();
      row.push_back(static_cast<std::uint32_t>(pos));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (std::uint32_t i : row) {
      db.tidlists[i].push_back(static_cast<std::uint32_t>(tid));
    }
    db.txns.push_back(std::move(row));
  }
  return db;
}

std::int64_t TransactionDB::item_index(const Item& it) const {
  const auto pos = std::lower_bound(items.begin(), items.end(), it);
  if (pos == items.end() || !(*pos == it)) return -1;
  return pos - items.begin();
}

std::uint64_t support(std::span<const std::uint32_t> itemset,
                      const TransactionDB& db) {
  if (itemset.empty()) throw input_error("support: empty itemset");
  for (std::uint32_t i : itemset) {
    if (i >= db.items.size()) return 0;
  }
  std::vector<std::uint32_t> tids = db.tidlists[itemset[0]];
  for (std::size_t k = 1; k < itemset.size() && !tids.empty(); ++k) {
    tids = intersect_sorted(tids, db.tidlists[itemset[k]]);
  }
  return tids.size();
}

double min_pi(std::span<const std::uint32_t> itemset,
              const TransactionDB& db) {
  const std::uint64_t sup = support(itemset, db);
  std::uint64_t max_singleton = 0;
  for (std::uint32_t i : itemset) {
    if (i >= db.items.size() || db.tidlists[i].empty()) {
      throw input_error("min_pi: item with zero singleton support");
    }
    max_singleton = std::max<std::uint64_t>(max_singleton,
                                            db.tidlists[i].size());
  }
  return static_cast<double>(sup) / static_cast<double>(max_singleton);
}

namespace {

// DFS over items with index greater than the last chosen one. `tids` is the
// running intersection for `prefix`; `max_singleton` the largest singleton
// support among chosen items (minPI denominator).
void dfs(const TransactionDB& db, std::vector<std::uint32_t>& prefix,
         const std::vector<std::uint32_t>& tids, std::uint64_t max_singleton,
         std::uint64_t min_support, double min_minpi,
         std::vector<InterestingPattern>& out) {
  const std::uint32_t first =
      prefix.empty() ? 0 : prefix.back() + 1;
  for (std::uint32_t i = first; i < db.items.size(); ++i) {
    if (db.tidlists[i].empty()) continue;
    const auto child_tids = prefix.empty()
                                ? db.tidlists[i]
                                : intersect_sorted(tids, db.tidlists[i]);
    const std::uint64_t sup = child_tids.size();
    if (sup < min_support) continue;
    const std::uint64_t den =
        std::max<std::uint64_t>(max_singleton, db.tidlists[i].size());
    const double pi = static_cast<double>(sup) / static_cast<double>(den);
    if (pi < min_minpi) continue;
    prefix.push_back(i);
    out.push_back({prefix, sup, pi});
    dfs(db, prefix, child_tids, den, min_support, min_minpi, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<InterestingPattern> mine_interesting(const TransactionDB& db,
                                                 std::uint64_t min_support,
                                                 double min_minpi) {
  if (min_support < 1) throw input_error("min_support must be >= 1");
  if (min_minpi < 0.0 || min_minpi > 1.0) {
    throw input_error("min_minpi must lie in [0, 1]");
  }
  std::vector<InterestingPattern> out;
  std::vector<std::uint32_t> prefix;
  dfs(db, prefix, {}, 0, min_support, min_minpi, out);
  sort_patterns(out);
  return out;
}

std::vector<InterestingPattern> brute_force_itemsets(
    const TransactionDB& db, std::uint64_t min_support, double min_minpi,
    std::size_t limit) {
  std::vector<std::uint32_t> present;
  for (std::uint32_t i = 0; i < db.items.size(); ++i) {
    if (!db.tidlists[i].empty()) present.push_back(i);
  }
  if (present.size() > limit) {
    throw input_error("brute_force_itemsets: too many distinct items");
  }
  std::vector<InterestingPattern> out;
  const std::uint64_t masks = 1ull << present.size();
  for (std::uint64_t mask = 1; mask < masks; ++mask) {
    std::vector<std::uint32_t> itemset;
    for (std::size_t b = 0; b < present.size(); ++b) {
      if (mask & (1ull << b)) itemset.push_back(present[b]);
    }
    const std::uint64_t sup = support(itemset, db);
    if (sup < min_support) continue;
    const double pi = min_pi(itemset, db);
    if (pi < min_minpi) continue;
    out.push_back({std::move(itemset), sup, pi});
  }
  sort_patterns(out);
  return out;
}

}  // namespace gcg
