// gcg command line: ingest | synth | mine-cliques | extract-relations |
// mine-patterns | stats | bench. Stages communicate through files so any
// stage can be re-run with new thresholds without redoing earlier work.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcg/gcg.h"

namespace {

[[noreturn]] void fail(int code) {
  std::cerr << "gcg: error: " << gcg_last_error() << "\n";
  std::exit(code);
}

void check(int code) {
  if (code != GCG_OK) fail(code);
}

struct DatasetHandle {
  gcg_dataset* p = nullptr;
  ~DatasetHandle() { gcg_dataset_free(p); }
};
struct CliqueHandle {
  gcg_cliqueset* p = nullptr;
  ~CliqueHandle() { gcg_cliqueset_free(p); }
};
struct TxnHandle {
  gcg_transactions* p = nullptr;
  ~TxnHandle() { gcg_transactions_free(p); }
};
struct PatternHandle {
  gcg_patterns* p = nullptr;
  ~PatternHandle() { gcg_patterns_free(p); }
};

// "A:0.5,B:0.5" -> labels + weights
void parse_weights(const std::string& text, std::vector<std::string>& labels,
                   std::vector<double>& weights) {
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) {
      std::cerr << "gcg: error: bad type weight '" << part
                << "', expected LABEL:WEIGHT\n";
      std::exit(1);
    }
    labels.push_back(part.substr(0, colon));
    weights.push_back(std::stod(part.substr(colon + 1)));
  }
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal complete graph and complex co-location pattern miner"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand(
      "ingest", "Filter and transform a raw catalog CSV into a points file");
  std::string in_path, out_path;
  double h0 = 71.0;
  std::string zconf_direction = "lt";
  ingest->add_option("--input", in_path, "Catalog CSV")->required();
  ingest->add_option("--output", out_path, "Points CSV")->required();
  ingest->add_option("--h0", h0, "Hubble constant, km/s/Mpc");
  ingest->add_option("--zconf-direction", zconf_direction,
                     "zConf cut direction: lt (literal) or ge")
      ->check(CLI::IsMember({"lt", "ge"}));

  // synth
  auto* synth = app.add_subcommand(
      "synth", "Generate a seeded synthetic points file");
  std::uint64_t n = 1000, seed = 0, clusters = 0;
  int dims = 2;
  std::vector<double> extent{100.0, 100.0, 100.0};
  std::string weights_text = "A:1.0";
  double cluster_stddev = 1.0;
  synth->add_option("--output", out_path, "Points CSV")->required();
  synth->add_option("-n,--count", n, "Number of points");
  synth->add_option("--dims", dims, "Dimensionality")
      ->check(CLI::IsMember({2, 3}));
  synth->add_option("--extent", extent, "Box side lengths, Mpc")
      ->expected(1, 3);
  synth->add_option("--types", weights_text,
                    "Type weights, e.g. A:0.5,B:0.5");
  synth->add_option("--seed", seed, "RNG seed");
  synth->add_option("--clusters", clusters,
                    "Number of Gaussian clusters (0 = uniform)");
  synth->add_option("--cluster-stddev", cluster_stddev,
                    "Cluster spread, Mpc");

  // mine-cliques
  auto* mine = app.add_subcommand(
      "mine-cliques", "Mine maximal cliques of the tau-neighborhood graph");
  double tau = 1.0;
  int threads = 1;
  bool faithful = false;
  std::string histogram_path;
  int expect_dims = 0;
  mine->add_option("--input", in_path, "Points CSV")->required();
  mine->add_option("--output", out_path, "Cliques JSONL")->required();
  mine->add_option("--tau", tau, "Neighborhood distance, Mpc")->required();
  mine->add_option("--dims", expect_dims,
                   "Expected dimensionality (checked against the input)");
  mine->add_option("--threads", threads, "Worker threads");
  mine->add_option("--histogram", histogram_path,
                   "Also write cardinality,count CSV here");
  mine->add_flag("--faithful-prune", faithful,
                 "Literal whole-list pruning (may miss cliques)");

  // extract-relations
  auto* extract = app.add_subcommand(
      "extract-relations", "Encode cliques as complex relationship transactions");
  bool no_negatives = false;
  std::vector<std::string> universe;
  extract->add_option("--input", in_path, "Cliques JSONL")->required();
  extract->add_option("--output", out_path, "Transactions file")->required();
  extract->add_flag("--no-negatives", no_negatives, "Drop -t items");
  extract->add_option("--universe", universe,
                      "Explicit type universe (default: observed types)");

  // mine-patterns
  auto* patterns = app.add_subcommand(
      "mine-patterns", "Mine interesting itemsets from transactions");
  std::uint64_t min_support = 1;
  double min_minpi = 0.0;
  patterns->add_option("--input", in_path, "Transactions file")->required();
  patterns->add_option("--output", out_path, "Patterns CSV")->required();
  patterns->add_option("--min-support", min_support, "Support threshold");
  patterns->add_option("--min-minpi", min_minpi, "minPI threshold");

  // stats
  auto* stats = app.add_subcommand(
      "stats", "Plot-ready summaries of points or cliques files");
  std::string points_path, cliques_path;
  stats->add_option("--points", points_path,
                    "Points CSV: writes type,count");
  stats->add_option("--cliques", cliques_path,
                    "Cliques JSONL: writes cardinality,count");
  stats->add_option("--output", out_path, "Output CSV")->required();

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Seeded runtime table over synthetic uniform data");
  std::vector<std::uint64_t> sizes{10000, 20000, 40000, 80000};
  std::vector<double> taus{1.0};
  double density = 0.02;  // points per unit area/volume
  bench->add_option("--sizes", sizes, "Point counts");
  bench->add_option("--taus", taus, "Distances, Mpc");
  bench->add_option("--density", density,
                    "Points per Mpc^dims (extent grows with n)");
  bench->add_option("--dims", dims, "Dimensionality")
      ->check(CLI::IsMember({2, 3}));
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--threads", threads, "Worker threads");
  bench->add_option("--output", out_path, "Runtime table CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream config;
  for (int i = 1; i < argc; ++i) config << (i > 1 ? " " : "") << argv[i];
  const std::string cfg = config.str();

  if (*ingest) {
    gcg_ingest_options opts;
    gcg_ingest_options_init(&opts);
    opts.h0 = h0;
    opts.zconf_ge = zconf_direction == "ge" ? 1 : 0;
    DatasetHandle ds;
    uint64_t accepted = 0, rejected = 0;
    check(gcg_ingest_catalog(in_path.c_str(), &opts, &ds.p, &accepted,
                             &rejected));
    check(gcg_dataset_write_points(ds.p, out_path.c_str(), cfg.c_str()));
    std::cout << "ingest: accepted " << accepted << ", rejected " << rejected
              << "\n";
  } else if (*synth) {
    std::vector<std::string> labels;
    std::vector<double> weights;
    parse_weights(weights_text, labels, weights);
    const auto labels_c = c_strings(labels);
    gcg_synth_options opts{};
    opts.n = n;
    opts.dims = dims;
    for (std::size_t d = 0; d < 3; ++d) {
      opts.extent[d] = d < extent.size() ? extent[d] : extent.back();
    }
    opts.type_labels = labels_c.data();
    opts.type_weights = weights.data();
    opts.type_count = labels.size();
    opts.seed = seed;
    opts.cluster_count = clusters;
    opts.cluster_stddev = cluster_stddev;
    DatasetHandle ds;
    check(gcg_dataset_synthetic(&opts, &ds.p));
    check(gcg_dataset_write_points(ds.p, out_path.c_str(), cfg.c_str()));
  } else if (*mine) {
    DatasetHandle ds;
    check(gcg_dataset_read_points(in_path.c_str(), &ds.p));
    if (expect_dims != 0) {
      int actual = 0;
      check(gcg_dataset_dims(ds.p, &actual));
      if (actual != expect_dims) {
        std::cerr << "gcg: error: input is " << actual << "D but --dims "
                  << expect_dims << " was requested\n";
        return 1;
      }
    }
    CliqueHandle cs;
    check(gcg_mine_cliques(ds.p, tau, faithful ? 1 : 0, threads, &cs.p));
    check(gcg_cliqueset_write_jsonl(cs.p, out_path.c_str(), cfg.c_str()));
    if (!histogram_path.empty()) {
      check(gcg_cliqueset_write_histogram(cs.p, histogram_path.c_str(),
                                          cfg.c_str()));
    }
    uint64_t count = 0;
    check(gcg_cliqueset_count(cs.p, &count));
    std::cout << "mine-cliques: " << count << " maximal cliques\n";
  } else if (*extract) {
    const auto universe_c = c_strings(universe);
    TxnHandle txns;
    check(gcg_extract_relations_file(in_path.c_str(), no_negatives ? 1 : 0,
                                     universe_c.data(), universe_c.size(),
                                     &txns.p));
    check(gcg_transactions_write(txns.p, out_path.c_str(), cfg.c_str()));
  } else if (*patterns) {
    TxnHandle txns;
    check(gcg_transactions_read(in_path.c_str(), &txns.p));
    PatternHandle pats;
    check(gcg_mine_patterns(txns.p, min_support, min_minpi, &pats.p));
    check(gcg_patterns_write_csv(pats.p, out_path.c_str(), cfg.c_str()));
    uint64_t count = 0;
    check(gcg_patterns_count(pats.p, &count));
    std::cout << "mine-patterns: " << count << " interesting itemsets\n";
  } else if (*stats) {
    if (points_path.empty() == cliques_path.empty()) {
      std::cerr << "gcg: error: stats needs exactly one of --points or "
                   "--cliques\n";
      return 1;
    }
    if (!points_path.empty()) {
      DatasetHandle ds;
      check(gcg_dataset_read_points(points_path.c_str(), &ds.p));
      check(gcg_dataset_write_type_counts(ds.p, out_path.c_str(),
                                          cfg.c_str()));
    } else {
      check(gcg_cliques_file_write_histogram(cliques_path.c_str(),
                                             out_path.c_str(), cfg.c_str()));
    }
  } else if (*bench) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "gcg: error: cannot open '" << out_path << "'\n";
      return 1;
    }
    out << "# gcg " << gcg_version() << "\n# config: " << cfg << "\n";
    out << "n,tau,wall_ms,clique_count\n";
    const char* label = "A";
    const double weight = 1.0;
    for (double t : taus) {
      for (std::uint64_t size : sizes) {
        // fixed density: the box grows with n
        const double volume = static_cast<double>(size) / density;
        const double side =
            dims == 2 ? std::sqrt(volume) : std::cbrt(volume);
        gcg_synth_options opts{};
        opts.n = size;
        opts.dims = dims;
        opts.extent[0] = opts.extent[1] = opts.extent[2] = side;
        opts.type_labels = &label;
        opts.type_weights = &weight;
        opts.type_count = 1;
        opts.seed = seed;
        DatasetHandle ds;
        check(gcg_dataset_synthetic(&opts, &ds.p));
        const auto start = std::chrono::steady_clock::now();
        CliqueHandle cs;
        check(gcg_mine_cliques(ds.p, t, 0, threads, &cs.p));
        const auto stop = std::chrono::steady_clock::now();
        uint64_t count = 0;
        check(gcg_cliqueset_count(cs.p, &count));
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        out << size << ',' << t << ',' << ms << ',' << count << '\n';
      }
    }
  }
  return 0;
}
