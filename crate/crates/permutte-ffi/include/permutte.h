#ifndef PERMUTTE_H
#define PERMUTTE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum PtStatus {
  Ok = 0,
  /**
   * Unreadable input: bad UTF-8, bad syntax, bad graph document.
   */
  ParseError = 1,
  /**
   * Structurally valid input that violates an operation precondition.
   */
  Precondition = 2,
  /**
   * Invalid argument values (ranges, weights, spec parameters).
   */
  InvalidArgument = 3,
  /**
   * Computation hit its memo budget.
   */
  Budget = 4,
  /**
   * A required pointer was NULL.
   */
  NullPointer = 5,
} PtStatus;

/**
 * Bipartite graph handle.
 */
typedef struct PtBipGraph PtBipGraph;

/**
 * Shared memoization engine for the exact recursions.
 */
typedef struct PtEngine PtEngine;

/**
 * Multigraph handle.
 */
typedef struct PtMultiGraph PtMultiGraph;

/**
 * Sparse bivariate polynomial handle.
 */
typedef struct PtPoly PtPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or NULL if none.
 * The caller owns the string and frees it with `pt_string_free`.
 */
char *pt_last_error(void);

/**
 * Frees a string returned by this library. NULL is a no-op.
 */
void pt_string_free(char *s);

struct PtEngine *pt_engine_new(void);

void pt_engine_free(struct PtEngine *engine);

void pt_bipgraph_free(struct PtBipGraph *graph);

void pt_multigraph_free(struct PtMultiGraph *graph);

void pt_poly_free(struct PtPoly *poly);

/**
 * Parses a bipartite graph document (JSON `{"A":..,"B":..,"edges":..}` or
 * `bip a b` edge list).
 */
enum PtStatus pt_bipgraph_parse(const char *text, struct PtBipGraph **out);

/**
 * Parses a multigraph document (JSON `{"n":..,"edges":..}` or `multi n`
 * edge list).
 */
enum PtStatus pt_multigraph_parse(const char *text, struct PtMultiGraph **out);

/**
 * Permutation Tutte polynomial via the memoized recursion.
 */
enum PtStatus pt_compute_poly(struct PtEngine *engine,
                              const struct PtBipGraph *graph,
                              struct PtPoly **out);

/**
 * Permutation Tutte polynomial via the factorial-time oracle.
 */
enum PtStatus pt_brute_force_poly(const struct PtBipGraph *graph, struct PtPoly **out);

/**
 * Renders a polynomial in the textual term format.
 */
enum PtStatus pt_poly_to_string(const struct PtPoly *poly, char **out);

/**
 * Coefficient of x^i y^j as a "p/q" string.
 */
enum PtStatus pt_poly_coeff(const struct PtPoly *poly, uint32_t i, uint32_t j, char **out);

/**
 * Exact evaluation of T̃ at rational coordinates given as "p/q" strings.
 */
enum PtStatus pt_evaluate(struct PtEngine *engine,
                          const struct PtBipGraph *graph,
                          const char *x,
                          const char *y,
                          char **out);

/**
 * Alternating number alt(H) as a "p/q" string.
 */
enum PtStatus pt_alt(struct PtEngine *engine, const struct PtBipGraph *graph, char **out);

/**
 * The product P_x(H) = T̃(x,0)·T̃(0,x) as a "p/q" string.
 */
enum PtStatus pt_cmw_product(struct PtEngine *engine,
                             const struct PtBipGraph *graph,
                             const char *x,
                             char **out);

/**
 * Exact T̃ of the pendant family H(a,b,c) at rational coordinates.
 */
enum PtStatus pt_habc_eval(uint32_t a,
                           uint32_t b,
                           uint32_t c,
                           const char *x,
                           const char *y,
                           char **out);

/**
 * Classical Tutte polynomial via the subset expansion.
 */
enum PtStatus pt_tutte_subset(const struct PtMultiGraph *graph, struct PtPoly **out);

/**
 * Classical Tutte polynomial via deletion–contraction.
 */
enum PtStatus pt_tutte_delcon(const struct PtMultiGraph *graph, struct PtPoly **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PERMUTTE_H */
