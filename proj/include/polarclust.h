#ifndef POLARCLUST_H
#define POLARCLUST_H

/* C interface to the polar cluster engine. All strings returned through
   char** are heap allocated; release them with pc_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_germ pc_germ;

typedef enum {
  PC_OK = 0,
  PC_ERR_PARSE = 1,        /* malformed expression */
  PC_ERR_INVALID = 2,      /* zero polynomial or f(0,0) != 0 */
  PC_ERR_UNRESOLVED = 3,   /* truncation too small to decide */
  PC_ERR_INVARIANT = 4,    /* an internal consistency check failed */
  PC_ERR_NON_ISOLATED = 5, /* oracle only: f_x, f_y share a component through 0 */
  PC_ERR_ALGEBRA = 6,
  PC_ERR_ARGUMENT = 7,
  PC_ERR_INTERNAL = 8
} pc_status;

typedef enum { PC_FORMAT_TEXT = 0, PC_FORMAT_STRUCTURED = 1, PC_FORMAT_DOT = 2, PC_FORMAT_ASCII = 3 } pc_format;

typedef enum { PC_LEVEL_TOPO = 0, PC_LEVEL_LIPSCHITZ = 1 } pc_level;

typedef struct {
  int64_t margin_num; /* truncation margin, num/den > 0 */
  int64_t margin_den;
  int has_shear;      /* nonzero: use `shear` instead of the automatic choice */
  long shear;
  int verify_gradient_degree;
} pc_options;

void pc_options_default(pc_options* opt);

/* Message of the last failure on this thread ("" when none). */
const char* pc_last_error(void);

pc_status pc_analyze(const char* expr, const pc_options* opt, pc_germ** out);
/* Analyse `expr` over a continuation of the number field of `base`, so
   that algebraic invariants of the two germs can be compared exactly. */
pc_status pc_analyze_over(const pc_germ* base, const char* expr, const pc_options* opt, pc_germ** out);
void pc_germ_free(pc_germ* g);

pc_status pc_report(const pc_germ* g, pc_format format, int max_terms, char** out);
pc_status pc_signature(const pc_germ* g, pc_level level, char** out);
/* 1 when every internal check passed. */
int pc_checks_passed(const pc_germ* g);
int pc_multiplicity(const pc_germ* g);
int pc_polar_count(const pc_germ* g);
/* Milnor number as "p/q" or "inf". */
pc_status pc_milnor(const pc_germ* g, char** out);

/* *compatible = 1 or 0; *witness gets the obstruction (or "") if non-null. */
pc_status pc_compare(const pc_germ* f, const pc_germ* g, pc_level level, int* compatible, char** witness);

/* Recompute after a seeded random shear; *passed = 1 when signatures agree.
   *report (if non-null) receives both runs as text. */
pc_status pc_verify_shear(const char* expr, const pc_options* opt, uint64_t seed, int* passed, char** report);

/* Independent intersection multiplicity of (f_x, f_y) at the origin. */
pc_status pc_oracle_milnor(const char* expr, int64_t* out);

void pc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
