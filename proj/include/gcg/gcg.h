/* gcg: maximal complete graph (clique) and complex co-location pattern
 * mining over spatial point data, behind a C API.
 *
 * All functions return GCG_OK (0) on success, GCG_ERR_INPUT (1) for bad
 * input, GCG_ERR_INTERNAL (2) for broken internal invariants. On failure
 * gcg_last_error() returns a thread-local message describing the problem.
 * Handles created by gcg_* constructors must be released with the matching
 * *_free function; freeing NULL is a no-op.
 */
#ifndef GCG_GCG_H
#define GCG_GCG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GCG_OK 0
#define GCG_ERR_INPUT 1
#define GCG_ERR_INTERNAL 2

typedef struct gcg_dataset gcg_dataset;           /* typed spatial points */
typedef struct gcg_cliqueset gcg_cliqueset;       /* maximal cliques + points */
typedef struct gcg_transactions gcg_transactions; /* complex relationships */
typedef struct gcg_patterns gcg_patterns;         /* interesting itemsets */

const char* gcg_version(void);
const char* gcg_last_error(void);

/* ---- ingest: SDSS-export catalog CSV -> 3D points ---- */

typedef struct gcg_ingest_options {
  double h0;              /* Hubble constant, km/s/Mpc; default 71 */
  double c;               /* speed of light, km/s; default 299792.458 */
  int zconf_ge;           /* 0: accept zConf <  threshold (literal reading)
                             1: accept zConf >= threshold */
  double zconf_threshold; /* default 0.95 */
} gcg_ingest_options;

void gcg_ingest_options_init(gcg_ingest_options* opts);

int gcg_ingest_catalog(const char* catalog_csv_path,
                       const gcg_ingest_options* opts, gcg_dataset** out,
                       uint64_t* accepted, uint64_t* rejected);

/* ---- datasets ---- */

int gcg_dataset_read_points(const char* path, gcg_dataset** out);
int gcg_dataset_write_points(const gcg_dataset* ds, const char* path,
                             const char* config);
int gcg_dataset_size(const gcg_dataset* ds, uint64_t* n);
int gcg_dataset_dims(const gcg_dataset* ds, int* dims);
/* type,count CSV over the dataset's type universe */
int gcg_dataset_write_type_counts(const gcg_dataset* ds, const char* path,
                                  const char* config);
void gcg_dataset_free(gcg_dataset* ds);

typedef struct gcg_synth_options {
  uint64_t n;
  int dims;          /* 2 or 3 */
  double extent[3];  /* box side lengths, Mpc */
  const char* const* type_labels;
  const double* type_weights; /* must sum to 1 */
  size_t type_count;
  uint64_t seed;
  uint64_t cluster_count; /* 0 = uniform placement */
  double cluster_stddev;  /* Mpc, used when cluster_count > 0 */
} gcg_synth_options;

int gcg_dataset_synthetic(const gcg_synth_options* opts, gcg_dataset** out);

/* ---- maximal clique mining ---- */

/* Exact maximal cliques of the tau-neighborhood graph, size >= 2, in
 * canonical order. faithful_prune selects the literal whole-list pruning
 * variant (comparison runs only; may miss cliques). Results are
 * independent of the thread count. */
int gcg_mine_cliques(const gcg_dataset* ds, double tau, int faithful_prune,
                     int threads, gcg_cliqueset** out);

int gcg_cliqueset_count(const gcg_cliqueset* cs, uint64_t* n);
int gcg_cliqueset_write_jsonl(const gcg_cliqueset* cs, const char* path,
                              const char* config);
int gcg_cliqueset_write_histogram(const gcg_cliqueset* cs, const char* path,
                                  const char* config);
void gcg_cliqueset_free(gcg_cliqueset* cs);

/* cardinality histogram straight from a cliques JSONL file */
int gcg_cliques_file_write_histogram(const char* cliques_jsonl,
                                     const char* out_path,
                                     const char* config);

/* ---- complex relationship extraction ---- */

/* universe: explicit type labels, or NULL/0 to use every type observed in
 * the input (the dataset for the in-memory form, the file for the file
 * form). no_negatives drops the -t items. */
int gcg_extract_relations(const gcg_cliqueset* cs, int no_negatives,
                          const char* const* universe, size_t universe_count,
                          gcg_transactions** out);
int gcg_extract_relations_file(const char* cliques_jsonl, int no_negatives,
                               const char* const* universe,
                               size_t universe_count, gcg_transactions** out);

int gcg_transactions_read(const char* path, gcg_transactions** out);
int gcg_transactions_write(const gcg_transactions* t, const char* path,
                           const char* config);
int gcg_transactions_count(const gcg_transactions* t, uint64_t* n);
void gcg_transactions_free(gcg_transactions* t);

/* ---- interesting itemset mining ---- */

int gcg_mine_patterns(const gcg_transactions* t, uint64_t min_support,
                      double min_minpi, gcg_patterns** out);
int gcg_patterns_count(const gcg_patterns* p, uint64_t* n);
int gcg_patterns_write_csv(const gcg_patterns* p, const char* path,
                           const char* config);
void gcg_patterns_free(gcg_patterns* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GCG_GCG_H */
