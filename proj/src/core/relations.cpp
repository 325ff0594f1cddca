#include "core/relations.hpp"

#include <algorithm>
#include <sstream>

namespace gcg {

std::string Item::render() const {
  switch (polarity) {
    case Polarity::Present:
      return base;
    case Polarity::Plus:
      return base + "+";
    case Polarity::Minus:
      return "-" + base;
  }
  throw internal_error("unreachable polarity");
}

Item Item::parse(const std::string& text) {
  Item it;
  if (text.size() >= 2 && text.front() == '-') {
    it.polarity = Polarity::Minus;
    it.base = text.substr(1);
  } else if (text.size() >= 2 && text.back() == '+') {
    it.polarity = Polarity::Plus;
    it.base = text.substr(0, text.size() - 1);
  } else {
    it.polarity = Polarity::Present;
    it.base = text;
  }
  if (!valid_type_label(it.base)) {
    throw input_error("cannot parse item '" + text + "'");
  }
  return it;
}

bool Item::operator<(const Item& o) const {
  const bool neg_a = polarity == Polarity::Minus;
  const bool neg_b = o.polarity == Polarity::Minus;
  if (neg_a != neg_b) return neg_b;
  if (base != o.base) return base < o.base;
  return polarity < o.polarity;
}

std::map<std::string, std::size_t> strip_identifiers(const Clique& clique,
                                                     const Dataset& ds) {
  std::map<std::string, std::size_t> counts;
  for (ObjectId m : clique) {
    if (m >= ds.objects.size()) {
      throw input_error("strip_identifiers: unknown object id");
    }
    ++counts[ds.type_of(m)];
  }
  return counts;
}

ComplexRelationship extract_relationship(
    const std::map<std::string, std::size_t>& raw,
    const std::vector<std::string>& universe, bool negatives) {
  for (const auto& [type, count] : raw) {
    if (count > 0 &&
        std::find(universe.begin(), universe.end(), type) == universe.end()) {
      throw input_error("type '" + type + "' outside the universe");
    }
  }
  ComplexRelationship rel;
  for (const std::string& t : universe) {
    const auto it = raw.find(t);
    const std::size_t count = it == raw.end() ? 0 : it->second;
    if (count >= 1) rel.items.push_back({t, Item::Polarity::Present});
    if (count >= 2) rel.items.push_back({t, Item::Polarity::Plus});
    if (count == 0 && negatives) rel.items.push_back({t, Item::Polarity::Minus});
  }
  std::sort(rel.items.begin(), rel.items.end());
  return rel;
}

std::string render_transaction(const ComplexRelationship& rel) {
  std::string out;
  for (const Item& it : rel.items) {
    if (!out.empty()) out += ' ';
    out += it.render();
  }
  return out;
}

std::vector<Item> parse_transaction(const std::string& line) {
  std::vector<Item> items;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) items.push_back(Item::parse(tok));
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace gcg
