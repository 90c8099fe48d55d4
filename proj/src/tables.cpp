#include "mrspec/tables.hpp"

#include "mrspec/errors.hpp"

namespace mrspec {

TableId parse_table_id(std::string_view text) {
  if (text == "table1")
    return TableId::table1;
  if (text == "table2")
    return TableId::table2;
  if (text == "table3")
    return TableId::table3;
  throw ConfigError("unknown table '" + std::string(text) + "' (expected table1, table2, table3)");
}

std::string_view table_name(TableId id) {
  switch (id) {
  case TableId::table1:
    return "table1";
  case TableId::table2:
    return "table2";
  case TableId::table3:
    return "table3";
  }
  return "?";
}

TableSpec TableSpec::defaults(TableId which) {
  TableSpec spec;
  spec.which = which;

  const auto add = [&](const char* state, std::initializer_list<double> inv_bs) {
    for (double ib : inv_bs)
      spec.rows.push_back({state, ib});
  };
  // 2p and 3p carry a 1/b = 0.100 row in every table; 3d only in tables 2-3.
  add("2p", {0.025, 0.050, 0.075, 0.100});
  add("3p", {0.025, 0.050, 0.075, 0.100});
  if (which == TableId::table1)
    add("3d", {0.025, 0.050, 0.075});
  else
    add("3d", {0.025, 0.050, 0.075, 0.100});
  for (const char* s : {"4p", "4d", "4f"})
    add(s, {0.025, 0.050, 0.075});
  for (const char* s : {"5p", "5d", "5f", "5g", "6p", "6d", "6f", "6g"})
    add(s, {0.025});

  switch (which) {
  case TableId::table1:
    spec.alphas = {0.75, 1.5};
    break;
  case TableId::table2:
    spec.alphas = {0.0, 0.75, 1.5};
    spec.molecules = {"HCl", "CH"};
    break;
  case TableId::table3:
    spec.alphas = {0.0, 0.75, 1.5};
    spec.molecules = {"LiH", "CO"};
    break;
  }
  return spec;
}

} // namespace mrspec
