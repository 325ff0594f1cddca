#ifndef GCG_CORE_IO_HPP
#define GCG_CORE_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "core/cliques.hpp"
#include "core/itemsets.hpp"
#include "core/relations.hpp"
#include "core/types.hpp"

namespace gcg {

// Stage outputs all start with '#'-prefixed comment lines recording the
// tool version and the configuration that produced them. Readers skip
// comment lines, so any stage output can feed the next stage.
void write_config_header(std::ostream& out, const std::string& config);

// Points file: id,type,x,y[,z] in Mpc.
void write_points_csv(std::ostream& out, const Dataset& ds,
                      const std::string& config);
Dataset read_points_csv(std::istream& in);
Dataset read_points_file(const std::string& path);

// Cliques: one JSON object per line,
// {"members":[ids...],"types":[labels...],"size":n}.
void write_cliques_jsonl(std::ostream& out, const CliqueSet& cs,
                         const Dataset& ds, const std::string& config);

// A clique read back from JSONL, ids and types as written.
struct NamedClique {
  std::vector<std::string> members;
  std::vector<std::string> types;
};
std::vector<NamedClique> read_cliques_jsonl(std::istream& in);
std::vector<NamedClique> read_cliques_file(const std::string& path);

// Histogram CSV: cardinality,count.
void write_histogram_csv(std::ostream& out,
                         const std::map<std::size_t, std::size_t>& hist,
                         const std::string& config);

// Transactions: one line per relationship, items space-separated.
void write_transactions(std::ostream& out,
                        const std::vector<ComplexRelationship>& rels,
                        const std::string& config);
std::vector<std::vector<Item>> read_transactions(std::istream& in);
std::vector<std::vector<Item>> read_transactions_file(const std::string& path);

// Patterns CSV: items (semicolon-joined),support,minpi with minpi printed
// to 6 decimal digits.
void write_patterns_csv(std::ostream& out,
                        const std::vector<InterestingPattern>& patterns,
                        const TransactionDB& db, const std::string& config);

}  // namespace gcg

#endif
