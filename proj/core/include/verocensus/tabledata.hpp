#pragma once

#include <string>
#include <vector>

namespace vrc {

/// Exact evaluation of an expected-value expression in q.  Supports
/// + - * / ^ ( ) and integer literals over exact rationals; the result
/// must come out an integer, otherwise the call throws.
long long eval_formula(const std::string& expr, long long q);

struct TableRow {
  std::string label;
  std::vector<std::string> cells;  // expressions in q
  std::string note;
};

struct TableDef {
  std::string id;
  std::string title;
  std::string object;  // point_od4 | line_od4 | line_od0 | hyperplane_od1
  std::string parity;  // odd | even
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  std::vector<long long> row_values(const std::string& label,
                                    long long q) const;
};

/// The embedded expected-value tables.  Throws for an unknown id.
const TableDef& table_def(const std::string& id);
std::vector<std::string> table_ids();

/// Closed-form orbit sizes from the data file ("points_odd",
/// "points_even", "hyperplanes"), in column order.
std::vector<long long> orbit_size_row(const std::string& which, long long q);

}  // namespace vrc
