#ifndef AUXZETA_REPORT_HPP
#define AUXZETA_REPORT_HPP

#include "auxzeta/sweep.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace auxzeta {

inline constexpr const char *kSchemaVersion = "1";

enum class TableFormat { csv, json, text };

TableFormat parse_table_format(std::string_view name);

/// Fixed 17-significant-digit rendering ("%.17g"); "nan", "inf" or "-inf"
/// for non-finite values.
std::string format_number(double x);

/// Column names of the sweep table, in output order.
const std::vector<std::string> &table_columns();

/// One row of the sweep table, aligned with table_columns().
std::vector<double> table_row(const SweepRecord &rec);

void write_table(std::ostream &os, const std::vector<SweepRecord> &records, TableFormat format);

nlohmann::ordered_json table_json(const std::vector<SweepRecord> &records);

nlohmann::ordered_json certify_json(int n_start, int n_end, const std::vector<SweepRecord> &records,
                                    const LemmaConstants &lemma);

/// LF line endings, two-space indentation, trailing newline.
std::string dump_json(const nlohmann::ordered_json &doc);

} // namespace auxzeta

#endif // AUXZETA_REPORT_HPP
