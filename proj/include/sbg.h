/* C API of the signed bi-graph toolkit.
 *
 * All functions return sbg_status; results come back through out
 * parameters as opaque handles or malloc'd strings. On failure the out
 * parameters are untouched and sbg_last_error() describes the problem
 * (per thread, valid until the next failing call). Strings returned by
 * the library are released with sbg_string_free, handles with their
 * _free function.
 */
#ifndef SBG_H
#define SBG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sbg_graph sbg_graph;
typedef struct sbg_script sbg_script;
typedef struct sbg_report sbg_report;

typedef enum sbg_status {
    SBG_OK = 0,
    SBG_ERR_INVALID = 1, /* precondition or argument violation */
    SBG_ERR_PARSE = 2,   /* malformed SBG/SBD text or op spec */
    SBG_ERR_IO = 3,      /* file system failure */
    SBG_ERR_INTERNAL = 4
} sbg_status;

const char* sbg_last_error(void);
void sbg_string_free(char* s);

/* graphs (SBG text format) */
sbg_status sbg_graph_from_text(const char* text, sbg_graph** out);
sbg_status sbg_graph_from_file(const char* path, sbg_graph** out);
sbg_status sbg_graph_to_text(const sbg_graph* g, char** out);
void sbg_graph_free(sbg_graph* g);
int sbg_graph_order(const sbg_graph* g);
int sbg_graph_size(const sbg_graph* g);

/* coloring */
sbg_status sbg_chromatic_number(const sbg_graph* g, int* chi);
/* *found is 0/1; when found, *witness holds "vertex residue" lines sorted
 * by vertex name */
sbg_status sbg_find_coloring(const sbg_graph* g, int k, int* found, char** witness);

/* structural analysis, one flat record */
typedef struct sbg_analysis {
    int balanced;
    int antibalanced;
    int complete;
    int just_complete;
    int bi_complete;
    int thin;        /* smallest k, or -1 when no k works */
    int nabla_complete;
    int triple_count;
} sbg_analysis;
sbg_status sbg_analyze(const sbg_graph* g, sbg_analysis* out);

/* single-operand operation application; spec mirrors the SBD step syntax:
 *   sb1_vertex <name>
 *   sb1_edge <u> <v> <+|->
 *   sb2 <u> <v>
 *   sb4 <v>
 *   sb5even <v> <q>
 *   sb5odd <u> <w> <q> [pad: <a> <b> <+|-> , ...]
 */
sbg_status sbg_apply(const sbg_graph* g, const char* spec, sbg_graph** out);

/* derivation scripts (SBD text format) */
sbg_status sbg_script_from_text(const char* text, sbg_script** out);
sbg_status sbg_script_from_file(const char* path, sbg_script** out);
sbg_status sbg_script_to_text(const sbg_script* s, char** out);
void sbg_script_free(sbg_script* s);

/* base_dir resolves relative target paths; pass "" or NULL for the cwd */
sbg_status sbg_script_check(const sbg_script* s, const char* base_dir, int verify_colorability,
                            sbg_report** out);
int sbg_report_accepted(const sbg_report* r);
sbg_status sbg_report_to_text(const sbg_report* r, char** out);
sbg_status sbg_report_final_graph(const sbg_report* r, sbg_graph** out);
void sbg_report_free(sbg_report* r);

/* construction generators */
sbg_status sbg_gen_lemma_bicomplete(int r, sbg_script** out);
sbg_status sbg_gen_lemma_nabla(int r, sbg_script** out);

/* bounded derivation search; *found is 0/1. target_path, when non-NULL,
 * is recorded in the emitted script's target line. */
sbg_status sbg_search_derivation(const sbg_graph* target, const char* target_path, int q,
                                 int max_steps, int max_order, int* found, sbg_script** out);

/* seeded closure fuzzing; *violations gets the total count and *summary
 * the per-operation table (plus counterexample dumps when violations > 0) */
sbg_status sbg_fuzz_closure(int n, int q, int trials, uint64_t seed, int* violations,
                            char** summary);

#ifdef __cplusplus
}
#endif

#endif /* SBG_H */
