#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "maxalg/interval.hpp"
#include "maxalg/joint_range.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/oracle.hpp"
#include "maxalg/perm_range.hpp"

namespace maxalg {

/// Decoded input document. JSON files may carry "matrix", "matrices", "c"
/// and "C" fields; plain text files carry whitespace matrices separated by
/// blank lines (two or more blocks form a tuple).
struct ParsedInput {
  std::optional<NonnegMatrix> matrix;
  std::optional<MatrixTuple> tuple;
  std::optional<NonnegVector> weights;
  std::optional<NonnegMatrix> weight_matrix;
};

ParsedInput parse_input_file(const std::string& path);
ParsedInput parse_input_text(const std::string& content, const std::string& origin);

/// Comma- or space-separated nonnegative numbers, e.g. a --c flag value.
NonnegVector parse_weight_list(const std::string& text);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const IntervalSet& s);
nlohmann::json to_json(const PointSet& s);
nlohmann::json to_json(const BoxRegion& b);
nlohmann::json to_json(const OracleReport& r);

/// Header x1,...,xm then one row per point.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);
void write_point_set_csv(std::ostream& out, const PointSet& s);

}  // namespace maxalg
