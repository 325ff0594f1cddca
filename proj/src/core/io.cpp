#include "core/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "core/csv.hpp"
#include "core/version.hpp"

namespace gcg {

void write_config_header(std::ostream& out, const std::string& config) {
  out << "# gcg " << kVersion << "\n";
  if (!config.empty()) out << "# config: " << config << "\n";
}

void write_points_csv(std::ostream& out, const Dataset& ds,
                      const std::string& config) {
  write_config_header(out, config);
  out << (ds.dims == 3 ? "id,type,x,y,z\n" : "id,type,x,y\n");
  out << std::setprecision(17);
  for (const auto& o : ds.objects) {
    out << o.id << ',' << ds.type_names[o.type];
    for (int d = 0; d < ds.dims; ++d) out << ',' << o.coords[d];
    out << '\n';
  }
}

Dataset read_points_csv(std::istream& in) {
  CsvReader csv(in);
  const auto c_id = csv.column("id");
  const auto c_type = csv.column("type");
  const auto c_x = csv.column("x");
  const auto c_y = csv.column("y");
  if (!c_id || !c_type || !c_x || !c_y) {
    throw input_error("points CSV must have columns id,type,x,y[,z]");
  }
  const auto c_z = csv.column("z");

  Dataset ds;
  ds.dims = c_z ? 3 : 2;
  std::vector<std::string> fields;
  while (csv.next(fields)) {
    SpatialObject o;
    o.id = fields[*c_id];
    o.type = ds.intern_type(fields[*c_type]);
    o.coords[0] = csv.as_double(fields, *c_x);
    o.coords[1] = csv.as_double(fields, *c_y);
    if (c_z) o.coords[2] = csv.as_double(fields, *c_z);
    ds.objects.push_back(std::move(o));
  }
  ds.check_valid();
  return ds;
}

Dataset read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open points file '" + path + "'");
  return read_points_csv(in);
}

void write_cliques_jsonl(std::ostream& out, const CliqueSet& cs,
                         const Dataset& ds, const std::string& config) {
  write_config_header(out, config);
  for (const Clique& c : cs) {
    nlohmann::json j;
    auto& members = j["members"] = nlohmann::json::array();
    auto& types = j["types"] = nlohmann::json::array();
    for (ObjectId m : c) {
      if (m >= ds.objects.size()) {
        throw internal_error("clique references unknown object");
      }
      members.push_back(ds.objects[m].id);
      types.push_back(ds.type_of(m));
    }
    j["size"] = c.size();
    out << j.dump() << '\n';
  }
}

std::vector<NamedClique> read_cliques_jsonl(std::istream& in) {
  std::vector<NamedClique> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw input_error("cliques line " + std::to_string(lineno) + ": " +
                        e.what());
    }
    NamedClique nc;
    for (const auto& m : j.at("members")) nc.members.push_back(m);
    for (const auto& t : j.at("types")) nc.types.push_back(t);
    if (nc.members.size() != nc.types.size()) {
      throw input_error("cliques line " + std::to_string(lineno) +
                        ": members/types length mismatch");
    }
    out.push_back(std::move(nc));
  }
  return out;
}

std::vector<NamedClique> read_cliques_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open cliques file '" + path + "'");
  return read_cliques_jsonl(in);
}

void write_histogram_csv(std::ostream& out,
                         const std::map<std::size_t, std::size_t>& hist,
                         const std::string& config) {
  write_config_header(out, config);
  out << "cardinality,count\n";
  for (const auto& [card, count] : hist) {
    out << card << ',' << count << '\n';
  }
}

void write_transactions(std::ostream& out,
                        const std::vector<ComplexRelationship>& rels,
                        const std::string& config) {
  write_config_header(out, config);
  for (const auto& rel : rels) out << render_transaction(rel) << '\n';
}

std::vector<std::vector<Item>> read_transactions(std::istream& in) {
  std::vector<std::vector<Item>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_transaction(line));
  }
  return out;
}

std::vector<std::vector<Item>> read_transactions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open transactions file '" + path + "'");
  return read_transactions(in);
}

void write_patterns_csv(std::ostream& out,
                        const std::vector<InterestingPattern>& patterns,
                        const TransactionDB& db, const std::string& config) {
  write_config_header(out, config);
  out << "items,support,minpi\n";
  for (const auto& p : patterns) {
    std::string items;
    for (std::uint32_t i : p.items) {
      if (!items.empty()) items += ';';
      items += db.items[i].render();
    }
    out << items << ',' << p.support << ',' << std::fixed
        << std::setprecision(6) << p.minpi << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace gcg
