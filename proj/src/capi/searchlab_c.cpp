#include "searchlab/searchlab.h"

#include <cstring>
#include <memory>
#include <string>

#include "analysis/domination.hpp"
#include "analysis/xy_bench.hpp"
#include "core/search.hpp"
#include "core/types.hpp"
#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"
#include "puzzle/heuristics.hpp"
#include "puzzle/scramble.hpp"
#include "puzzle/spaces.hpp"
#include "relax/heuristics.hpp"

using namespace searchlab;

namespace {

thread_local std::string g_last_error;

sl_status code_to_status(core::ErrorCode code) {
  switch (code) {
    case core::ErrorCode::kNoGoalReachable:
      return SL_NO_GOAL_REACHABLE;
    case core::ErrorCode::kLimitExceeded:
      return SL_LIMIT_EXCEEDED;
    case core::ErrorCode::kReopenDetected:
      return SL_REOPEN_DETECTED;
    case core::ErrorCode::kOracleMissing:
      return SL_ORACLE_MISSING;
    case core::ErrorCode::kBadCstar:
      return SL_BAD_CSTAR;
    case core::ErrorCode::kBadArgument:
      return SL_BAD_ARGUMENT;
    case core::ErrorCode::kParseError:
      return SL_PARSE_ERROR;
  }
  return SL_INTERNAL_ERROR;
}

sl_status fail(sl_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
sl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const core::SearchError& e) {
    return fail(code_to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(SL_INTERNAL_ERROR, e.what());
  }
}

bool to_cells(const int cells[9], puzzle::Cells& out) {
  if (cells == nullptr) return false;
  for (int i = 0; i < 9; ++i) {
    if (cells[i] < 0 || cells[i] > 8) return false;
    out[static_cast<size_t>(i)] = static_cast<std::uint8_t>(cells[i]);
  }
  return puzzle::valid_cells(out);
}

sl_status parse_cells(const int cells[9], core::StateId& id) {
  puzzle::Cells c;
  if (!to_cells(cells, c)) {
    return fail(SL_BAD_ARGUMENT, "cells must be a permutation of 0..8");
  }
  id = puzzle::pack(c);
  return SL_OK;
}

void write_cells(core::StateId id, int cells[9]) {
  const puzzle::Cells c = puzzle::unpack(id);
  for (int i = 0; i < 9; ++i) cells[i] = c[static_cast<size_t>(i)];
}

core::TieBreakRule to_tie(sl_tie tie) {
  switch (tie) {
    case SL_TIE_FIFO:
      return core::TieBreakRule::kFifo;
    case SL_TIE_LIFO:
      return core::TieBreakRule::kLifo;
    case SL_TIE_HIGH_G:
      return core::TieBreakRule::kHighG;
    case SL_TIE_LOW_H:
      return core::TieBreakRule::kLowH;
    case SL_TIE_GOAL_FIRST:
      return core::TieBreakRule::kGoalFirst;
  }
  throw core::SearchError(core::ErrorCode::kBadArgument, "unknown tie rule");
}

std::unique_ptr<core::Heuristic> build_heuristic(sl_heuristic_kind kind,
                                                 core::ExpansionLedger* ledger) {
  switch (kind) {
    case SL_HEURISTIC_ZERO:
      return relax::constant_heuristic(0);
    case SL_HEURISTIC_MD:
      return std::make_unique<puzzle::MdHeuristic>();
    case SL_HEURISTIC_RA_EXACT:
      return std::make_unique<puzzle::RaExactHeuristic>();
    case SL_HEURISTIC_XY_PER_CALL:
      return std::make_unique<puzzle::XyHeuristic>(
          puzzle::XyMode::kPerCallSearch, ledger);
    case SL_HEURISTIC_XY_TABLE:
      return std::make_unique<puzzle::XyHeuristic>(
          puzzle::XyMode::kPrecomputedTable, ledger);
  }
  throw core::SearchError(core::ErrorCode::kBadArgument,
                          "unknown heuristic kind");
}

}  // namespace

struct sl_space {
  sl_variant variant;
  std::shared_ptr<const core::ProblemSpace> impl;
};

struct sl_ledger {
  core::ExpansionLedger impl;
};

struct sl_heuristic {
  std::unique_ptr<core::Heuristic> impl;
};

struct sl_lab {
  sl_preset preset;
  std::unique_ptr<analysis::DominationChecker> checker;  // three-level presets
  bool bench = false;                                    // BASE-XY-MD
};

extern "C" {

const char* sl_status_name(sl_status status) {
  switch (status) {
    case SL_OK:
      return "ok";
    case SL_NO_GOAL_REACHABLE:
      return "no-goal-reachable";
    case SL_LIMIT_EXCEEDED:
      return "limit-exceeded";
    case SL_REOPEN_DETECTED:
      return "reopen-detected";
    case SL_ORACLE_MISSING:
      return "oracle-missing";
    case SL_BAD_CSTAR:
      return "bad-cstar";
    case SL_BAD_ARGUMENT:
      return "bad-argument";
    case SL_PARSE_ERROR:
      return "parse-error";
    case SL_INTERNAL_ERROR:
      return "internal-error";
  }
  return "?";
}

const char* sl_last_error(void) { return g_last_error.c_str(); }

sl_status sl_parse_state(const char* text, int cells[9]) {
  return guarded([&]() -> sl_status {
    if (text == nullptr || cells == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    write_cells(puzzle::from_text(text), cells);
    return SL_OK;
  });
}

sl_status sl_format_state(const int cells[9], char* buffer, size_t size) {
  return guarded([&]() -> sl_status {
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    if (buffer == nullptr) return fail(SL_BAD_ARGUMENT, "null buffer");
    const std::string text = puzzle::to_text(id);
    if (size < text.size() + 1) {
      return fail(SL_BAD_ARGUMENT, "buffer too small");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return SL_OK;
  });
}

sl_status sl_goal_state(int cells[9]) {
  return guarded([&]() -> sl_status {
    if (cells == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    write_cells(puzzle::goal_id(), cells);
    return SL_OK;
  });
}

sl_status sl_scramble(uint64_t seed, int walk_length, int cells[9],
                      int* exact_depth) {
  return guarded([&]() -> sl_status {
    if (cells == nullptr || exact_depth == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    const puzzle::ScrambleResult r = puzzle::scramble(seed, walk_length);
    write_cells(r.state, cells);
    *exact_depth = r.exact_depth;
    return SL_OK;
  });
}

sl_status sl_exact_depth(const int cells[9], int* depth) {
  return guarded([&]() -> sl_status {
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    if (depth == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    static const std::shared_ptr<const core::ProblemSpace> base =
        puzzle::make_space(puzzle::Variant::kBase);
    *depth = core::oracle_optimal_cost(*base, id);
    return SL_OK;
  });
}

sl_status sl_md(const int cells[9], int* value) {
  return guarded([&]() -> sl_status {
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    if (value == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    *value = puzzle::md(id);
    return SL_OK;
  });
}

sl_status sl_ra_exact(const int cells[9], int* value) {
  return guarded([&]() -> sl_status {
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    if (value == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    *value = puzzle::ra_exact(id);
    return SL_OK;
  });
}

sl_status sl_space_create(sl_variant variant, sl_space** space) {
  return guarded([&]() -> sl_status {
    if (space == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    puzzle::Variant v;
    switch (variant) {
      case SL_VARIANT_BASE:
        v = puzzle::Variant::kBase;
        break;
      case SL_VARIANT_RA:
        v = puzzle::Variant::kRa;
        break;
      case SL_VARIANT_CHECK_RA:
        v = puzzle::Variant::kCheckRa;
        break;
      case SL_VARIANT_X_FACTOR:
        v = puzzle::Variant::kXFactor;
        break;
      case SL_VARIANT_Y_FACTOR:
        v = puzzle::Variant::kYFactor;
        break;
      default:
        return fail(SL_BAD_ARGUMENT, "unknown variant");
    }
    *space = new sl_space{variant, puzzle::make_space(v)};
    return SL_OK;
  });
}

void sl_space_destroy(sl_space* space) { delete space; }

sl_ledger* sl_ledger_create(void) { return new sl_ledger{}; }

void sl_ledger_destroy(sl_ledger* ledger) { delete ledger; }

void sl_ledger_reset(sl_ledger* ledger) {
  if (ledger != nullptr) ledger->impl.reset();
}

uint64_t sl_ledger_base(const sl_ledger* ledger) {
  return ledger == nullptr ? 0 : ledger->impl.base_expansions;
}

uint64_t sl_ledger_secondary(const sl_ledger* ledger) {
  return ledger == nullptr ? 0 : ledger->impl.secondary_expansions;
}

uint64_t sl_ledger_total(const sl_ledger* ledger) {
  return ledger == nullptr ? 0 : ledger->impl.total();
}

sl_status sl_heuristic_create(sl_heuristic_kind kind, sl_ledger* ledger,
                              sl_heuristic** heuristic) {
  return guarded([&]() -> sl_status {
    if (heuristic == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    *heuristic = new sl_heuristic{
        build_heuristic(kind, ledger != nullptr ? &ledger->impl : nullptr)};
    return SL_OK;
  });
}

sl_status sl_heuristic_create_search(const sl_space* relaxed,
                                     sl_heuristic_kind inner, sl_tie tie,
                                     int cache, sl_ledger* ledger,
                                     sl_heuristic** heuristic) {
  return guarded([&]() -> sl_status {
    if (relaxed == nullptr || heuristic == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    std::shared_ptr<core::Heuristic> inner_h = build_heuristic(inner, nullptr);
    *heuristic = new sl_heuristic{relax::make_search_heuristic(
        relaxed->impl, std::move(inner_h), to_tie(tie),
        ledger != nullptr ? &ledger->impl : nullptr, cache != 0)};
    return SL_OK;
  });
}

void sl_heuristic_destroy(sl_heuristic* heuristic) { delete heuristic; }

sl_status sl_heuristic_evaluate(sl_heuristic* heuristic, const int cells[9],
                                int* value) {
  return guarded([&]() -> sl_status {
    if (heuristic == nullptr || value == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    *value = heuristic->impl->evaluate(id);
    return SL_OK;
  });
}

sl_status sl_astar(const sl_space* space, const int start_cells[9],
                   sl_heuristic* heuristic, sl_tie tie, uint64_t budget,
                   sl_ledger* ledger, sl_search_result* result) {
  return guarded([&]() -> sl_status {
    if (space == nullptr || heuristic == nullptr || result == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    core::StateId start;
    if (const sl_status s = parse_cells(start_cells, start); s != SL_OK)
      return s;
    if (space->variant == SL_VARIANT_X_FACTOR) {
      start = puzzle::factor_project(start, puzzle::Axis::kX);
    } else if (space->variant == SL_VARIANT_Y_FACTOR) {
      start = puzzle::factor_project(start, puzzle::Axis::kY);
    }
    core::SearchOptions options;
    options.tie = to_tie(tie);
    options.expansion_budget = budget;
    const core::SearchOutcome outcome =
        core::astar(*space->impl, start, *heuristic->impl, options,
                    ledger != nullptr ? &ledger->impl : nullptr);
    result->optimal_cost = outcome.optimal_cost;
    result->expansions = outcome.expansion_count;
    result->max_frontier = outcome.max_frontier;
    result->path_length = static_cast<int>(outcome.path.size()) - 1;
    return SL_OK;
  });
}

sl_status sl_lab_create(sl_preset preset, sl_lab** lab) {
  return guarded([&]() -> sl_status {
    if (lab == nullptr) return fail(SL_BAD_ARGUMENT, "null argument");
    auto made = std::make_unique<sl_lab>();
    made->preset = preset;
    switch (preset) {
      case SL_PRESET_BASE_CHECKRA_RA:
        made->checker = std::make_unique<analysis::DominationChecker>(
            puzzle::make_space(puzzle::Variant::kBase),
            puzzle::make_space(puzzle::Variant::kCheckRa),
            std::make_shared<puzzle::RaExactHeuristic>(), "BASE-CHECKRA-RA");
        break;
      case SL_PRESET_BASE_RA_ZERO:
        made->checker = std::make_unique<analysis::DominationChecker>(
            puzzle::make_space(puzzle::Variant::kBase),
            puzzle::make_space(puzzle::Variant::kRa),
            std::shared_ptr<core::Heuristic>(relax::constant_heuristic(0)),
            "BASE-RA-ZERO");
        break;
      case SL_PRESET_BASE_XY_MD:
        made->bench = true;
        break;
      case SL_PRESET_BASE_ZERO:
      case SL_PRESET_BASE_MD:
        return fail(SL_BAD_ARGUMENT,
                    "preset has no hierarchical triple and no benchmark");
      default:
        return fail(SL_BAD_ARGUMENT, "unknown preset");
    }
    *lab = made.release();
    return SL_OK;
  });
}

void sl_lab_destroy(sl_lab* lab) { delete lab; }

sl_status sl_lab_verify(const sl_lab* lab, const int cells[9], sl_tie tie,
                        int cache, uint64_t budget,
                        sl_domination_report* report) {
  return guarded([&]() -> sl_status {
    if (lab == nullptr || report == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    if (lab->checker == nullptr) {
      return fail(SL_BAD_ARGUMENT, "preset does not support verification");
    }
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    const analysis::DominationReport r =
        lab->checker->check(id, to_tie(tie), cache != 0, budget);
    report->cstar = r.cstar;
    report->direct_surely = r.direct_surely;
    report->direct_possibly = r.direct_possibly;
    report->hier_surely = r.hier_surely;
    report->hier_possibly = r.hier_possibly;
    report->theorem1_holds = r.theorem1_holds ? 1 : 0;
    report->theorem2_holds = r.theorem2_holds ? 1 : 0;
    report->direct_total = r.direct_total;
    report->hier_total = r.hier_total;
    report->ratio = r.ratio;
    return SL_OK;
  });
}

sl_status sl_lab_bench_xy(const sl_lab* lab, const int cells[9], sl_tie tie,
                          uint64_t budget, sl_xy_row* row) {
  return guarded([&]() -> sl_status {
    if (lab == nullptr || row == nullptr) {
      return fail(SL_BAD_ARGUMENT, "null argument");
    }
    if (!lab->bench) {
      return fail(SL_BAD_ARGUMENT, "preset does not support the benchmark");
    }
    core::StateId id;
    if (const sl_status s = parse_cells(cells, id); s != SL_OK) return s;
    const analysis::CostReport report =
        analysis::xy_benchmark({id}, to_tie(tie), budget);
    const analysis::CostRow& r = report.rows.front();
    row->depth = r.depth;
    row->md_base = r.md_base;
    row->md_total = r.md_total;
    row->xy_base = r.xy_base;
    row->xy_secondary = r.xy_secondary;
    row->xy_total = r.xy_total;
    row->ratio = r.ratio;
    row->md_ms = r.md_ms;
    row->xy_ms = r.xy_ms;
    return SL_OK;
  });
}

}  // extern "C"
