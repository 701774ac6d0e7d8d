#ifndef ISOUNI_ISOUNI_H
#define ISOUNI_ISOUNI_H

#include <stddef.h>
#include <stdint.h>

#if defined(ISOUNI_BUILDING_LIBRARY)
#define ISOUNI_API __attribute__((visibility("default")))
#else
#define ISOUNI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct isouni_graph isouni_graph;
typedef struct isouni_labels isouni_labels;
typedef struct isouni_universal isouni_universal;

typedef enum isouni_status {
  ISOUNI_OK = 0,
  ISOUNI_ERR_INVALID_ARGUMENT = 1,
  ISOUNI_ERR_PARSE = 2,
  ISOUNI_ERR_NOT_CONNECTED = 3,
  ISOUNI_ERR_MALFORMED_LABEL = 4,
  ISOUNI_ERR_CONTRACT = 5,
  ISOUNI_ERR_IO = 6,
  ISOUNI_ERR_VERIFICATION = 7,
  ISOUNI_ERR_INTERNAL = 8
} isouni_status;

typedef enum isouni_scheme {
  ISOUNI_SCHEME_DV = 0,
  ISOUNI_SCHEME_HDV = 1,
  ISOUNI_SCHEME_SEP = 2
} isouni_scheme;

typedef enum isouni_family {
  ISOUNI_FAMILY_RANDOM = 0,
  ISOUNI_FAMILY_TREE = 1
} isouni_family;

/* Distance value for vertices in different components. */
#define ISOUNI_INFINITY UINT32_MAX

/* Message of the last failed call on this thread; "" if none. */
ISOUNI_API const char* isouni_last_error(void);
ISOUNI_API const char* isouni_status_name(isouni_status status);

/* Returns 0 and fills *out for "dv", "hdv" or "sep"; -1 otherwise. */
ISOUNI_API int isouni_scheme_parse(const char* tag, isouni_scheme* out);
ISOUNI_API const char* isouni_scheme_tag(isouni_scheme scheme);
ISOUNI_API int isouni_family_parse(const char* tag, isouni_family* out);

/* Graphs. Text format: "n m" header, then m lines "u v"; '#' comments. */
ISOUNI_API isouni_status isouni_graph_read(const char* path, isouni_graph** out);
ISOUNI_API isouni_status isouni_graph_parse(const char* text, isouni_graph** out);
ISOUNI_API isouni_status isouni_graph_random(size_t n, double p, uint64_t seed,
                                             isouni_graph** out);
ISOUNI_API isouni_status isouni_graph_random_tree(size_t n, uint64_t seed,
                                                  isouni_graph** out);
ISOUNI_API isouni_status isouni_graph_write(const isouni_graph* g, const char* path);
ISOUNI_API size_t isouni_graph_order(const isouni_graph* g);
ISOUNI_API size_t isouni_graph_edge_count(const isouni_graph* g);
ISOUNI_API int isouni_graph_is_connected(const isouni_graph* g);
ISOUNI_API void isouni_graph_free(isouni_graph* g);

/* Labels. ISOUNI_ERR_NOT_CONNECTED for disconnected input. */
ISOUNI_API isouni_status isouni_encode(const isouni_graph* g, isouni_scheme scheme,
                                       isouni_labels** out);
ISOUNI_API isouni_status isouni_labels_read(const char* path, isouni_labels** out);
ISOUNI_API isouni_status isouni_labels_write(const isouni_labels* labels, const char* path);
ISOUNI_API size_t isouni_labels_count(const isouni_labels* labels);
ISOUNI_API size_t isouni_labels_max_bits(const isouni_labels* labels);
ISOUNI_API isouni_scheme isouni_labels_scheme(const isouni_labels* labels);

/* Distance between u and v computed from their two labels. */
ISOUNI_API isouni_status isouni_labels_distance(const isouni_labels* labels, uint32_t u,
                                                uint32_t v, uint32_t* out);

/* Writes the decoded label of v as text into buf (NUL-terminated, truncated
 * to cap). *needed receives the full length without the terminator. */
ISOUNI_API isouni_status isouni_labels_decode(const isouni_labels* labels, uint32_t v,
                                              char* buf, size_t cap, size_t* needed);

/* Compares every pairwise label distance with BFS in g. On a mismatch returns
 * ISOUNI_ERR_VERIFICATION and describes the pair in isouni_last_error(). */
ISOUNI_API isouni_status isouni_labels_verify(const isouni_labels* labels,
                                              const isouni_graph* g,
                                              uint64_t* pairs_checked);
ISOUNI_API void isouni_labels_free(isouni_labels* labels);

/* Universal graphs. */
typedef struct isouni_report {
  int pass;
  size_t graph_id;
  uint32_t u;
  uint32_t v;
  uint32_t d_g;
  uint32_t d_h;
  uint64_t pairs_checked;
} isouni_report;

/* Realized construction over every labelled connected graph on 1..max_n
 * vertices; max_n <= 6. */
ISOUNI_API isouni_status isouni_universal_build_class(unsigned max_n, isouni_scheme scheme,
                                                      isouni_universal** out);
ISOUNI_API size_t isouni_universal_order(const isouni_universal* h);
ISOUNI_API size_t isouni_universal_edge_count(const isouni_universal* h);
ISOUNI_API size_t isouni_universal_embedding_count(const isouni_universal* h);
ISOUNI_API isouni_status isouni_universal_verify(const isouni_universal* h, size_t index,
                                                 isouni_report* out);
/* Source graph and image of embedding `index`; image must hold order entries. */
ISOUNI_API isouni_status isouni_universal_embedding(const isouni_universal* h, size_t index,
                                                    size_t* order, uint32_t* image,
                                                    size_t image_cap);
ISOUNI_API isouni_status isouni_universal_write(const isouni_universal* h,
                                                const char* graph_path,
                                                const char* mapping_path);
ISOUNI_API void isouni_universal_free(isouni_universal* h);

/* Label-size benchmark: one row per entry of orders. */
typedef struct isouni_bench_row {
  size_t n;
  size_t max_label_bits;
  size_t bound_bits;
  double ratio;
  int within_bound;
} isouni_bench_row;

ISOUNI_API isouni_status isouni_bench(isouni_scheme scheme, isouni_family family,
                                      const size_t* orders, size_t count, double p,
                                      size_t seeds, uint64_t first_seed,
                                      isouni_bench_row* rows);
ISOUNI_API size_t isouni_label_bound(isouni_scheme scheme, size_t n);
ISOUNI_API const char* isouni_bound_formula(isouni_scheme scheme);

#ifdef __cplusplus
}
#endif

#endif
