#ifndef GCG_CORE_ITEMSETS_HPP
#define GCG_CORE_ITEMSETS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "core/relations.hpp"

namespace gcg {

// Transaction database with an inverted index. Items are interned in
// canonical item order; tid lists are sorted. Immutable after build.
struct TransactionDB {
  std::vector<Item> items;                          // canonical order
  std::vector<std::vector<std::uint32_t>> txns;     // item indices, sorted
  std::vector<std::vector<std::uint32_t>> tidlists; // per item, sorted tids

  static TransactionDB build(const std::vector<std::vector<Item>>& txns);

  std::size_t transaction_count() const { return txns.size(); }

  // Index of an item, or nullopt-like -1 when absent.
  std::int64_t item_index(const Item& it) const;
};

struct InterestingPattern {
  std::vector<std::uint32_t> items;  // indices into db.items, sorted
  std::uint64_t support = 0;
  double minpi = 0.0;
};

// Number of transactions containing every item of `itemset`. Items absent
// from the db give support 0.
std::uint64_t support(std::span<const std::uint32_t> itemset,
                      const TransactionDB& db);

// min over items of support(itemset) / support({item}), i.e.
// support(itemset) divided by the largest singleton support involved.
// Requires each singleton support > 0.
double min_pi(std::span<const std::uint32_t> itemset,
              const TransactionDB& db);

// Exactly the itemsets with support >= min_support and minPI >= min_minpi,
// in canonical order (size, then lexicographic on item indices).
// Depth-first over the fixed item order; both measures are anti-monotone,
// so a branch is cut as soon as either falls below its threshold.
std::vector<InterestingPattern> mine_interesting(const TransactionDB& db,
                                                 std::uint64_t min_support,
                                                 double min_minpi);

// Powerset enumeration oracle. Refuses dbs with more than `limit` items.
std::vector<InterestingPattern> brute_force_itemsets(
    const TransactionDB& db, std::uint64_t min_support, double min_minpi,
    std::size_t limit = 20);

}  // namespace gcg

#endif
