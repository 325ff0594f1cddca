#include "gcg/gcg.h"

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/cliques.hpp"
#include "core/grid.hpp"
#include "core/ingest.hpp"
#include "core/io.hpp"
#include "core/itemsets.hpp"
#include "core/relations.hpp"
#include "core/synth.hpp"
#include "core/types.hpp"
#include "core/version.hpp"

struct gcg_dataset {
  gcg::Dataset ds;
};

struct gcg_cliqueset {
  gcg::Dataset ds;  // owning copy; cliques index into it
  gcg::CliqueSet cliques;
};

struct gcg_transactions {
  std::vector<gcg::ComplexRelationship> rels;
};

struct gcg_patterns {
  gcg::TransactionDB db;
  std::vector<gcg::InterestingPattern> patterns;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return GCG_OK;
  } catch (const gcg::input_error& e) {
    g_last_error = e.what();
    return GCG_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GCG_ERR_INTERNAL;
  }
}

std::ofstream open_out(const char* path) {
  std::ofstream out(path);
  if (!out) {
    throw gcg::input_error("cannot open output file '" + std::string(path) +
                           "'");
  }
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw gcg::input_error(std::string(what) + " is NULL");
}

std::vector<std::string> universe_from_args(const char* const* universe,
                                            size_t universe_count) {
  std::vector<std::string> out;
  for (size_t i = 0; i < universe_count; ++i) {
    require(universe[i], "universe label");
    out.emplace_back(universe[i]);
  }
  return out;
}

std::vector<gcg::ComplexRelationship> relations_from_counts(
    const std::vector<std::map<std::string, std::size_t>>& raw,
    std::vector<std::string> universe, bool negatives) {
  if (universe.empty()) {
    std::set<std::string> seen;
    for (const auto& counts : raw) {
      for (const auto& [t, n] : counts) seen.insert(t);
    }
    universe.assign(seen.begin(), seen.end());
  }
  std::vector<gcg::ComplexRelationship> rels;
  rels.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto rel = gcg::extract_relationship(raw[i], universe, negatives);
    rel.source = i;
    rels.push_back(std::move(rel));
  }
  return rels;
}

}  // namespace

extern "C" {

const char* gcg_version(void) { return gcg::kVersion; }

const char* gcg_last_error(void) { return g_last_error.c_str(); }

void gcg_ingest_options_init(gcg_ingest_options* opts) {
  if (opts == nullptr) return;
  opts->h0 = 71.0;
  opts->c = gcg::kSpeedOfLightKms;
  opts->zconf_ge = 0;
  opts->zconf_threshold = 0.95;
}

int gcg_ingest_catalog(const char* catalog_csv_path,
                       const gcg_ingest_options* opts, gcg_dataset** out,
                       uint64_t* accepted, uint64_t* rejected) {
  return guarded([&] {
    require(catalog_csv_path, "catalog path");
    require(out, "out");
    gcg::IngestOptions io;
    if (opts != nullptr) {
      io.hubble.h0 = opts->h0;
      io.hubble.c = opts->c;
      io.zconf_direction = opts->zconf_ge != 0
                               ? gcg::ZConfDirection::GreaterEqual
                               : gcg::ZConfDirection::LessThan;
      io.zconf_threshold = opts->zconf_threshold;
    }
    auto result = gcg::read_catalog_file(catalog_csv_path, io);
    if (accepted != nullptr) *accepted = result.accepted;
    if (rejected != nullptr) *rejected = result.rejected;
    *out = new gcg_dataset{std::move(result.dataset)};
  });
}

int gcg_dataset_read_points(const char* path, gcg_dataset** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gcg_dataset{gcg::read_points_file(path)};
  });
}

int gcg_dataset_write_points(const gcg_dataset* ds, const char* path,
                             const char* config) {
  return guarded([&] {
    require(ds, "dataset");
    require(path, "path");
    auto out = open_out(path);
    gcg::write_points_csv(out, ds->ds, config ? config : "");
  });
}

int gcg_dataset_size(const gcg_dataset* ds, uint64_t* n) {
  return guarded([&] {
    require(ds, "dataset");
    require(n, "n");
    *n = ds->ds.objects.size();
  });
}

int gcg_dataset_dims(const gcg_dataset* ds, int* dims) {
  return guarded([&] {
    require(ds, "dataset");
    require(dims, "dims");
    *dims = ds->ds.dims;
  });
}

int gcg_dataset_write_type_counts(const gcg_dataset* ds, const char* path,
                                  const char* config) {
  return guarded([&] {
    require(ds, "dataset");
    require(path, "path");
    std::map<std::string, std::size_t> counts;
    for (const auto& label : ds->ds.type_names) counts[label] = 0;
    for (std::size_t i = 0; i < ds->ds.objects.size(); ++i) {
      ++counts[ds->ds.type_of(static_cast<gcg::ObjectId>(i))];
    }
    auto out = open_out(path);
    gcg::write_config_header(out, config ? config : "");
    out << "type,count\n";
    for (const auto& [label, n] : counts) out << label << ',' << n << '\n';
  });
}

void gcg_dataset_free(gcg_dataset* ds) { delete ds; }

int gcg_dataset_synthetic(const gcg_synth_options* opts, gcg_dataset** out) {
  return guarded([&] {
    require(opts, "options");
    require(out, "out");
    gcg::SynthSpec spec;
    spec.n = opts->n;
    spec.dims = opts->dims;
    spec.extent = {opts->extent[0], opts->extent[1], opts->extent[2]};
    for (size_t i = 0; i < opts->type_count; ++i) {
      require(opts->type_labels[i], "type label");
      spec.type_weights.emplace_back(opts->type_labels[i],
                                     opts->type_weights[i]);
    }
    spec.seed = opts->seed;
    if (opts->cluster_count > 0) {
      spec.clustering =
          gcg::ClusterSpec{opts->cluster_count, opts->cluster_stddev};
    }
    *out = new gcg_dataset{gcg::generate_synthetic(spec)};
  });
}

int gcg_mine_cliques(const gcg_dataset* ds, double tau, int faithful_prune,
                     int threads, gcg_cliqueset** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    const auto graph = gcg::build_graph_grid(ds->ds, tau);
    gcg::CliqueMinerOptions opts;
    opts.threads = threads > 0 ? threads : 1;
    opts.faithful_prune = faithful_prune != 0;
    auto cliques = gcg::mine_maximal_cliques(graph, opts);
    *out = new gcg_cliqueset{ds->ds, std::move(cliques)};
  });
}

int gcg_cliqueset_count(const gcg_cliqueset* cs, uint64_t* n) {
  return guarded([&] {
    require(cs, "cliqueset");
    require(n, "n");
    *n = cs->cliques.size();
  });
}

int gcg_cliqueset_write_jsonl(const gcg_cliqueset* cs, const char* path,
                              const char* config) {
  return guarded([&] {
    require(cs, "cliqueset");
    require(path, "path");
    auto out = open_out(path);
    gcg::write_cliques_jsonl(out, cs->cliques, cs->ds, config ? config : "");
  });
}

int gcg_cliqueset_write_histogram(const gcg_cliqueset* cs, const char* path,
                                  const char* config) {
  return guarded([&] {
    require(cs, "cliqueset");
    require(path, "path");
    auto out = open_out(path);
    gcg::write_histogram_csv(out, gcg::cardinality_histogram(cs->cliques),
                             config ? config : "");
  });
}

void gcg_cliqueset_free(gcg_cliqueset* cs) { delete cs; }

int gcg_cliques_file_write_histogram(const char* cliques_jsonl,
                                     const char* out_path,
                                     const char* config) {
  return guarded([&] {
    require(cliques_jsonl, "cliques path");
    require(out_path, "output path");
    std::map<std::size_t, std::size_t> hist;
    for (const auto& nc : gcg::read_cliques_file(cliques_jsonl)) {
      ++hist[nc.members.size()];
    }
    auto out = open_out(out_path);
    gcg::write_histogram_csv(out, hist, config ? config : "");
  });
}

int gcg_extract_relations(const gcg_cliqueset* cs, int no_negatives,
                          const char* const* universe, size_t universe_count,
                          gcg_transactions** out) {
  return guarded([&] {
    require(cs, "cliqueset");
    require(out, "out");
    std::vector<std::map<std::string, std::size_t>> raw;
    for (const auto& clique : cs->cliques) {
      raw.push_back(gcg::strip_identifiers(clique, cs->ds));
    }
    auto uni = universe_from_args(universe, universe_count);
    if (uni.empty()) uni = cs->ds.type_names;  // all types in the dataset
    std::sort(uni.begin(), uni.end());
    *out = new gcg_transactions{
        relations_from_counts(raw, std::move(uni), no_negatives == 0)};
  });
}

int gcg_extract_relations_file(const char* cliques_jsonl, int no_negatives,
                               const char* const* universe,
                               size_t universe_count, gcg_transactions** out) {
  return guarded([&] {
    require(cliques_jsonl, "cliques path");
    require(out, "out");
    std::vector<std::map<std::string, std::size_t>> raw;
    for (const auto& nc : gcg::read_cliques_file(cliques_jsonl)) {
      std::map<std::string, std::size_t> counts;
      for (const auto& t : nc.types) ++counts[t];
      raw.push_back(std::move(counts));
    }
    auto uni = universe_from_args(universe, universe_count);
    std::sort(uni.begin(), uni.end());
    *out = new gcg_transactions{
        relations_from_counts(raw, std::move(uni), no_negatives == 0)};
  });
}

int gcg_transactions_read(const char* path, gcg_transactions** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::vector<gcg::ComplexRelationship> rels;
    std::size_t i = 0;
    for (auto& items : gcg::read_transactions_file(path)) {
      rels.push_back({std::move(items), i++});
    }
    *out = new gcg_transactions{std::move(rels)};
  });
}

int gcg_transactions_write(const gcg_transactions* t, const char* path,
                           const char* config) {
  return guarded([&] {
    require(t, "transactions");
    require(path, "path");
    auto out = open_out(path);
    gcg::write_transactions(out, t->rels, config ? config : "");
  });
}

int gcg_transactions_count(const gcg_transactions* t, uint64_t* n) {
  return guarded([&] {
    require(t, "transactions");
    require(n, "n");
    *n = t->rels.size();
  });
}

void gcg_transactions_free(gcg_transactions* t) { delete t; }

int gcg_mine_patterns(const gcg_transactions* t, uint64_t min_support,
                      double min_minpi, gcg_patterns** out) {
  return guarded([&] {
    require(t, "transactions");
    require(out, "out");
    std::vector<std::vector<gcg::Item>> txns;
    txns.reserve(t->rels.size());
    for (const auto& rel : t->rels) txns.push_back(rel.items);
    auto db = gcg::TransactionDB::build(txns);
    auto patterns = gcg::mine_interesting(db, min_support, min_minpi);
    *out = new gcg_patterns{std::move(db), std::move(patterns)};
  });
}

int gcg_patterns_count(const gcg_patterns* p, uint64_t* n) {
  return guarded([&] {
    require(p, "patterns");
    require(n, "n");
    *n = p->patterns.size();
  });
}

int gcg_patterns_write_csv(const gcg_patterns* p, const char* path,
                           const char* config) {
  return guarded([&] {
    require(p, "patterns");
    require(path, "path");
    auto out = open_out(path);
    gcg::write_patterns_csv(out, p->patterns, p->db, config ? config : "");
  });
}

void gcg_patterns_free(gcg_patterns* p) { delete p; }

}  // extern "C"
