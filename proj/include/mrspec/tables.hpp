#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mrspec {

enum class TableId { table1, table2, table3 };

TableId parse_table_id(std::string_view text);
std::string_view table_name(TableId id);

struct TableRow {
  std::string state;
  double inv_b = 0.0;
};

/// Row/column layout of one of the published energy tables. All tables fix
/// A = 2b. Table 1 is in atomic units; tables 2 and 3 use the molecular
/// preset with b in pm, one column group per molecule.
struct TableSpec {
  TableId which = TableId::table1;
  std::vector<TableRow> rows;
  /// Column alphas; 0 stands for the degenerate alpha = 0, 1 column.
  std::vector<double> alphas;
  std::vector<std::string> molecules;

  static TableSpec defaults(TableId which);
};

} // namespace mrspec
