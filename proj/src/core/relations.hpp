#ifndef GCG_CORE_RELATIONS_HPP
#define GCG_CORE_RELATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "core/cliques.hpp"
#include "core/types.hpp"

namespace gcg {

// An item over a base type: the type itself ("A"), the positive type
// "more than one present" ("A+"), or the negative type "absent" ("-A").
struct Item {
  enum class Polarity { Present, Plus, Minus };

  std::string base;
  Polarity polarity = Polarity::Present;

  std::string render() const;
  static Item parse(const std::string& text);  // throws input_error

  bool operator==(const Item&) const = default;

  // Transaction order: present/plus items alphabetically by base
  // (base before base+), then negatives alphabetically.
  bool operator<(const Item& o) const;
};

// The item-set encoding of one maximal clique. Items are kept sorted.
struct ComplexRelationship {
  std::vector<Item> items;
  std::size_t source = 0;  // index of the originating clique
};

// The multiset of member types of a clique ("raw maximal complete graph"),
// as counts per type label.
std::map<std::string, std::size_t> strip_identifiers(const Clique& clique,
                                                     const Dataset& ds);

// For each type t in `universe`: count >= 1 adds t, count >= 2 also adds
// t+, count == 0 adds -t. When `negatives` is false the -t items are
// dropped.
ComplexRelationship extract_relationship(
    const std::map<std::string, std::size_t>& raw,
    const std::vector<std::string>& universe, bool negatives = true);

// Transaction line: items space-separated in canonical item order.
std::string render_transaction(const ComplexRelationship& rel);
std::vector<Item> parse_transaction(const std::string& line);

}  // namespace gcg

#endif
