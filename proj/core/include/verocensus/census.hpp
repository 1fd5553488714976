#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verocensus/gf.hpp"
#include "verocensus/lineclass.hpp"
#include "verocensus/systems.hpp"

namespace vrc {

/// Cost thresholds and bounds for the census runs.  Exhaustive sweeps
/// downgrade to representative-based checks above the thresholds.
struct CensusConfig {
  int max_q = FieldCtx::kDefaultBound;
  int oracle_max_q = 5;             // group-orbit oracle
  int exhaustive_point_max_q = 4;   // full point sweeps in T1/T2
  int exhaustive_line_max_q = 5;    // full line census
  int od1_max_q = 4;                // full line-orbit distribution per hyperplane

  static CensusConfig from_file(const std::string& path);
};

struct CellResult {
  std::string row;
  std::string col;
  long long expected = 0;
  long long computed = 0;
  bool match = false;
  std::string note;  // offending coordinates etc. on mismatch
};

struct TableReport {
  std::string id;
  int q = 0;
  std::string title;
  std::vector<CellResult> cells;
  bool pass = true;

  void add(CellResult c);
};

/// Valid table ids for a parity, in run order.
std::vector<std::string> census_ids(bool even);

/// Recomputes a table by brute force and compares cell-for-cell with the
/// stored expressions.  Ids: T1 T2 T3 T4 T5 T6 OD2H_odd OD2H_even
/// T7check corollaries.  Throws on a parity mismatch.
TableReport reproduce_table(const std::string& id, const FieldCtx& f,
                            const CensusConfig& cfg = {});

/// Point-orbit distributions of the tabulated solids against the
/// conic-type census of the same-named line orbits (q odd).
TableReport solid_duality_check(const FieldCtx& f, const CensusConfig& cfg = {});

/// Clause-by-clause run of the census corollaries (exhaustive at the
/// given q): squab counting clauses, the secant-variety count, equal
/// OD0 forcing equal OD4, the rank-3 hyperplane count law, and the
/// secant characterization of web singularity.
TableReport corollary_suite(const FieldCtx& f, const CensusConfig& cfg = {});

std::string report_to_json(const TableReport& r);
std::string report_to_csv(const TableReport& r);
std::string report_to_markdown(const TableReport& r);

}  // namespace vrc
