#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dlap::cli {

enum class Format { Human, Json, Csv };

/// Shortest decimal that round-trips, the same digits nlohmann::json emits,
/// so human and JSON output show identical numbers.
std::string num(double x);

/// A titled two-or-more column table. Human output aligns columns; CSV emits
/// the header row then the rows.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct Document {
  nlohmann::json json;
  std::vector<Table> tables;
};

void emit(std::ostream& os, const Document& doc, Format fmt);

}  // namespace dlap::cli
