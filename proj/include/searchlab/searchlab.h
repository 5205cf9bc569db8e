/* searchlab — state-space search laboratory over the Eight Puzzle.
 *
 * C89-compatible surface over the C++ core: opaque handles, status codes,
 * no exceptions across the boundary. States pass as int cells[9], row-major,
 * 0 = blank. Handles are single-thread affine unless noted; distinct handles
 * may be used from distinct threads freely.
 */
#ifndef SEARCHLAB_H
#define SEARCHLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_NO_GOAL_REACHABLE = 1,
  SL_LIMIT_EXCEEDED = 2,
  SL_REOPEN_DETECTED = 3,
  SL_ORACLE_MISSING = 4,
  SL_BAD_CSTAR = 5,
  SL_BAD_ARGUMENT = 6,
  SL_PARSE_ERROR = 7,
  SL_INTERNAL_ERROR = 8
} sl_status;

typedef enum sl_variant {
  SL_VARIANT_BASE = 0,     /* blank swaps with an orthogonal neighbor */
  SL_VARIANT_RA = 1,       /* blank swaps with any tile */
  SL_VARIANT_CHECK_RA = 2, /* blank swaps with any opposite-color tile */
  SL_VARIANT_X_FACTOR = 3, /* column-occupancy factor */
  SL_VARIANT_Y_FACTOR = 4  /* row-occupancy factor */
} sl_variant;

typedef enum sl_tie {
  SL_TIE_FIFO = 0,
  SL_TIE_LIFO = 1,
  SL_TIE_HIGH_G = 2,
  SL_TIE_LOW_H = 3,
  SL_TIE_GOAL_FIRST = 4 /* with a zero heuristic: Dijkstra-equivalent */
} sl_tie;

typedef enum sl_heuristic_kind {
  SL_HEURISTIC_ZERO = 0,
  SL_HEURISTIC_MD = 1,       /* Manhattan distance, blank ignored */
  SL_HEURISTIC_RA_EXACT = 2, /* exact relaxed-adjacency cost, no search */
  SL_HEURISTIC_XY_PER_CALL = 3, /* factor searches per evaluation */
  SL_HEURISTIC_XY_TABLE = 4     /* precomputed factor tables (speedup) */
} sl_heuristic_kind;

/* Named experiment chains. The two three-level presets support
 * verification; BASE-XY-MD supports the X-Y benchmark; the two-level
 * presets are config vocabulary with no runnable lab. */
typedef enum sl_preset {
  SL_PRESET_BASE_CHECKRA_RA = 0,
  SL_PRESET_BASE_RA_ZERO = 1,
  SL_PRESET_BASE_ZERO = 2,
  SL_PRESET_BASE_XY_MD = 3,
  SL_PRESET_BASE_MD = 4
} sl_preset;

typedef struct sl_space sl_space;
typedef struct sl_heuristic sl_heuristic;
typedef struct sl_ledger sl_ledger;
typedef struct sl_lab sl_lab;

const char* sl_status_name(sl_status status);

/* Message for the calling thread's most recent failing call. */
const char* sl_last_error(void);

/* --- states ------------------------------------------------------------ */

sl_status sl_parse_state(const char* text, int cells[9]);
sl_status sl_format_state(const int cells[9], char* buffer, size_t size);
sl_status sl_goal_state(int cells[9]);

/* Seeded random walk of legal base moves from the goal (never undoing the
 * previous move); exact_depth is recomputed by search, so it never exceeds
 * walk_length. Same seed and length give the same state on every platform. */
sl_status sl_scramble(uint64_t seed, int walk_length, int cells[9],
                      int* exact_depth);

sl_status sl_exact_depth(const int cells[9], int* depth);
sl_status sl_md(const int cells[9], int* value);
sl_status sl_ra_exact(const int cells[9], int* value);

/* --- spaces, ledgers, heuristics, search -------------------------------- */

sl_status sl_space_create(sl_variant variant, sl_space** space);
void sl_space_destroy(sl_space* space);

sl_ledger* sl_ledger_create(void);
void sl_ledger_destroy(sl_ledger* ledger);
void sl_ledger_reset(sl_ledger* ledger);
uint64_t sl_ledger_base(const sl_ledger* ledger);
uint64_t sl_ledger_secondary(const sl_ledger* ledger);
uint64_t sl_ledger_total(const sl_ledger* ledger);

/* Algorithmic heuristics ignore `ledger`; the X-Y per-call heuristic
 * charges its factor-space expansions to it (may be NULL to skip
 * accounting). The ledger must outlive the heuristic. */
sl_status sl_heuristic_create(sl_heuristic_kind kind, sl_ledger* ledger,
                              sl_heuristic** heuristic);

/* Heuristic computed by an A* sub-search of `relaxed` per evaluation,
 * guided by `inner` (an algorithmic kind). Sub-search expansions are
 * charged to ledger->secondary. `relaxed` must outlive the heuristic. */
sl_status sl_heuristic_create_search(const sl_space* relaxed,
                                     sl_heuristic_kind inner, sl_tie tie,
                                     int cache, sl_ledger* ledger,
                                     sl_heuristic** heuristic);
void sl_heuristic_destroy(sl_heuristic* heuristic);
sl_status sl_heuristic_evaluate(sl_heuristic* heuristic, const int cells[9],
                                int* value);

typedef struct sl_search_result {
  int optimal_cost;
  uint64_t expansions;   /* this search's own (base-level) expansions */
  uint64_t max_frontier;
  int path_length;       /* edges on the returned optimal path */
} sl_search_result;

/* A* from `start_cells` (projected automatically for factor variants).
 * budget = 0 means unlimited; exceeding it yields SL_LIMIT_EXCEEDED.
 * `ledger` (may be NULL) receives base-level expansions. */
sl_status sl_astar(const sl_space* space, const int start_cells[9],
                   sl_heuristic* heuristic, sl_tie tie, uint64_t budget,
                   sl_ledger* ledger, sl_search_result* result);

/* --- experiment labs ----------------------------------------------------- */

typedef struct sl_domination_report {
  int cstar;
  uint64_t direct_surely;
  uint64_t direct_possibly;
  uint64_t hier_surely;
  uint64_t hier_possibly;
  int theorem1_holds; /* direct surely set contained in hierarchical union */
  int theorem2_holds; /* same containment for the possibly sets */
  uint64_t direct_total;
  uint64_t hier_total;
  double ratio; /* hier_total / direct_total */
} sl_domination_report;

typedef struct sl_xy_row {
  int depth;
  uint64_t md_base;
  uint64_t md_total;
  uint64_t xy_base;
  uint64_t xy_secondary;
  uint64_t xy_total;
  double ratio; /* xy_total / md_total */
  double md_ms; /* wall-clock, nondeterministic */
  double xy_ms;
} sl_xy_row;

/* A lab owns the spaces and goal-distance table of one preset. Creation is
 * the expensive step; per-instance calls afterwards are safe from multiple
 * threads. Only the three-level presets and BASE-XY-MD are creatable. */
sl_status sl_lab_create(sl_preset preset, sl_lab** lab);
void sl_lab_destroy(sl_lab* lab);

/* Analytic surely/possibly sets, theorem containment booleans, and the
 * measured totals of the direct and hierarchical runs for one instance.
 * Only valid for the three-level presets. When the preset's bottom
 * heuristic is zero, the direct run uses the Dijkstra-equivalent tie rule
 * regardless of `tie`. */
sl_status sl_lab_verify(const sl_lab* lab, const int cells[9], sl_tie tie,
                        int cache, uint64_t budget,
                        sl_domination_report* report);

/* MD-direct against XY-hierarchical expansion accounting for one instance.
 * Only valid for the BASE-XY-MD preset. */
sl_status sl_lab_bench_xy(const sl_lab* lab, const int cells[9], sl_tie tie,
                          uint64_t budget, sl_xy_row* row);

#ifdef __cplusplus
}
#endif

#endif /* SEARCHLAB_H */
