#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace dlap::cli {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  // Match nlohmann's rendering of integral doubles ("2.0", not "2").
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_human(std::ostream& os, const Table& t) {
  if (!t.title.empty()) os << t.title << "\n";
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& row) {
    os << " ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << " " << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 1, ' ');
    }
    os << "\n";
  };
  if (!t.header.empty() && !t.header[0].empty()) line(t.header);
  for (const auto& r : t.rows) line(r);
  os << "\n";
}

}  // namespace

void emit(std::ostream& os, const Document& doc, Format fmt) {
  switch (fmt) {
    case Format::Json:
      os << doc.json.dump(2) << "\n";
      return;
    case Format::Csv:
      for (std::size_t k = 0; k < doc.tables.size(); ++k) {
        const auto& t = doc.tables[k];
        if (k > 0) os << "\n";
        if (!t.title.empty()) os << "# " << t.title << "\n";
        for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
        os << "\n";
        for (const auto& r : t.rows) {
          for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
          os << "\n";
        }
      }
      return;
    case Format::Human:
      for (const auto& t : doc.tables) print_human(os, t);
      return;
  }
}

}  // namespace dlap::cli
