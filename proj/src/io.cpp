#include "maxalg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <utility>

#include "maxalg/errors.hpp"

namespace maxalg {
namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(const std::string& origin, std::size_t line, std::size_t col,
                          const std::string& what) {
  throw input_error(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

double parse_number(const std::string& origin, std::size_t line, std::size_t col,
                    const std::string& token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail_at(origin, line, col, "cannot parse '" + token + "' as a number");
  if (!std::isfinite(v)) fail_at(origin, line, col, "entry '" + token + "' is not finite");
  if (v < 0.0 || std::signbit(v))
    fail_at(origin, line, col, "negative entry " + token + " (all entries must be >= 0)");
  return v;
}

struct TextBlock {
  std::vector<std::vector<double>> rows;
  std::size_t first_line = 0;
};

std::vector<TextBlock> split_text_blocks(const std::string& content, const std::string& origin) {
  std::vector<TextBlock> blocks;
  TextBlock current;
  std::size_t line_no = 0;
  std::istringstream stream(content);
  std::string line;
  auto flush = [&]() {
    if (!current.rows.empty()) blocks.push_back(std::move(current));
    current = TextBlock{};
  };
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      row.push_back(parse_number(origin, line_no, start + 1, line.substr(start, pos - start)));
    }
    if (row.empty()) {
      flush();
      continue;
    }
    if (current.rows.empty()) current.first_line = line_no;
    if (!current.rows.empty() && row.size() != current.rows.front().size())
      fail_at(origin, line_no, 1,
              "row has " + std::to_string(row.size()) + " entries, expected " +
                  std::to_string(current.rows.front().size()));
    current.rows.push_back(std::move(row));
  }
  flush();
  return blocks;
}

NonnegMatrix block_to_matrix(const TextBlock& block, const std::string& origin) {
  if (block.rows.empty()) fail_at(origin, block.first_line, 1, "empty matrix block");
  return NonnegMatrix(block.rows);
}

double json_entry(const nlohmann::json& v, const std::string& origin, const std::string& where) {
  if (!v.is_number())
    throw input_error(origin + ": " + where + " is not a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw input_error(origin + ": " + where + " is not finite");
  if (d < 0.0 || std::signbit(d))
    throw input_error(origin + ": negative entry " + where + " = " + format_double(d) +
                      " (all entries must be >= 0)");
  return d;
}

NonnegMatrix json_matrix(const nlohmann::json& rows, const std::string& origin,
                         const std::string& field) {
  if (!rows.is_array() || rows.empty())
    throw input_error(origin + ": field \"" + field + "\" must be a nonempty array of rows");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array())
      throw input_error(origin + ": " + field + "[" + std::to_string(i) + "] is not an array");
    std::vector<double> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(json_entry(row[j], origin,
                             field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    out.push_back(std::move(r));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].size() != out[0].size())
      throw input_error(origin + ": " + field + "[" + std::to_string(i) + "] has " +
                        std::to_string(out[i].size()) + " entries, expected " +
                        std::to_string(out[0].size()));
  return NonnegMatrix(out);
}

ParsedInput parse_json(const std::string& content, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(content, e.byte > 0 ? e.byte - 1 : 0);
    fail_at(origin, line, col, "JSON parse error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw input_error(origin + ": top-level JSON value must be an object");
  ParsedInput parsed;
  if (doc.contains("matrix")) parsed.matrix = json_matrix(doc["matrix"], origin, "matrix");
  if (doc.contains("matrices")) {
    const auto& arr = doc["matrices"];
    if (!arr.is_array() || arr.empty())
      throw input_error(origin + ": field \"matrices\" must be a nonempty array");
    std::vector<NonnegMatrix> mats;
    for (std::size_t i = 0; i < arr.size(); ++i)
      mats.push_back(json_matrix(arr[i], origin, "matrices[" + std::to_string(i) + "]"));
    parsed.tuple = MatrixTuple(std::move(mats));
  }
  if (doc.contains("c")) {
    const auto& arr = doc["c"];
    if (!arr.is_array() || arr.empty())
      throw input_error(origin + ": field \"c\" must be a nonempty array");
    std::vector<double> w;
    for (std::size_t i = 0; i < arr.size(); ++i)
      w.push_back(json_entry(arr[i], origin, "c[" + std::to_string(i) + "]"));
    parsed.weights = NonnegVector(std::move(w));
  }
  if (doc.contains("C")) parsed.weight_matrix = json_matrix(doc["C"], origin, "C");
  if (!parsed.matrix && !parsed.tuple && !parsed.weights && !parsed.weight_matrix)
    throw input_error(origin + ": no \"matrix\", \"matrices\", \"c\" or \"C\" field present");
  return parsed;
}

}  // namespace

ParsedInput parse_input_text(const std::string& content, const std::string& origin) {
  std::size_t i = 0;
  while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
  if (i < content.size() && (content[i] == '{' || content[i] == '[')) {
    return parse_json(content, origin);
  }
  std::vector<TextBlock> blocks = split_text_blocks(content, origin);
  if (blocks.empty()) throw input_error(origin + ": no matrix data found");
  ParsedInput parsed;
  if (blocks.size() == 1) {
    parsed.matrix = block_to_matrix(blocks[0], origin);
  } else {
    std::vector<NonnegMatrix> mats;
    for (const auto& b : blocks) mats.push_back(block_to_matrix(b, origin));
    parsed.tuple = MatrixTuple(std::move(mats));
  }
  return parsed;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path);
}

NonnegVector parse_weight_list(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::vector<double> w;
  std::istringstream stream(cleaned);
  std::string token;
  while (stream >> token) w.push_back(parse_number("--c", 1, w.size() + 1, token));
  if (w.empty()) throw input_error("--c: empty weight list");
  return NonnegVector(std::move(w));
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

nlohmann::json to_json(const Interval& iv) {
  return nlohmann::json{
      {"lo", iv.lo}, {"lo_closed", iv.lo_closed}, {"hi", iv.hi}, {"hi_closed", iv.hi_closed}};
}

nlohmann::json to_json(const IntervalSet& s) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& part : s.parts()) intervals.push_back(to_json(part));
  return nlohmann::json{{"kind", "interval_set"}, {"intervals", intervals}};
}

nlohmann::json to_json(const PointSet& s) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : s.points) points.push_back(p);
  return nlohmann::json{{"kind", "point_set"}, {"points", points}};
}

nlohmann::json to_json(const BoxRegion& b) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& iv : b.coords) coords.push_back(to_json(iv));
  return nlohmann::json{{"kind", "box"}, {"coords", coords}};
}

nlohmann::json to_json(const OracleReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back(nlohmann::json{
        {"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
  return nlohmann::json{{"claim", r.claim},
                        {"pass", r.passed()},
                        {"trials", r.trials},
                        {"seed", r.seed},
                        {"failure_count", r.failure_count},
                        {"failures", failures}};
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  std::size_t m = cloud.points.empty() ? 0 : cloud.points[0].size();
  for (std::size_t l = 0; l < m; ++l) out << (l ? "," : "") << "x" << l + 1;
  out << "\n";
  for (const auto& p : cloud.points) {
    for (std::size_t l = 0; l < p.size(); ++l) out << (l ? "," : "") << format_double(p[l]);
    out << "\n";
  }
}

void write_point_set_csv(std::ostream& out, const PointSet& s) {
  std::size_t m = s.points.empty() ? 0 : s.points[0].size();
  for (std::size_t l = 0; l < m; ++l) out << (l ? "," : "") << "x" << l + 1;
  out << "\n";
  for (const auto& p : s.points) {
    for (std::size_t l = 0; l < p.size(); ++l) out << (l ? "," : "") << format_double(p[l]);
    out << "\n";
  }
}

}  // namespace maxalg
