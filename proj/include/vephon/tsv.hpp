#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "vephon/error.hpp"

namespace vephon::tsv {

struct Row {
  int line_no = 0;
  std::vector<std::string> fields;
};

// Line-oriented TSV: `#` starts a comment, blank lines are skipped, fields
// are tab-separated and kept verbatim.
inline std::vector<Row> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorKind::Io, "cannot open table file '" + path + "'");
  }
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Row row;
    row.line_no = line_no;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        row.fields.push_back(line.substr(pos));
        break;
      }
      row.fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void expect_fields(const Row& row, size_t n, const std::string& path) {
  if (row.fields.size() != n) {
    throw_error(ErrorKind::Parse,
                path + ":" + std::to_string(row.line_no) + ": expected " +
                    std::to_string(n) + " fields, got " +
                    std::to_string(row.fields.size()));
  }
}

}  // namespace vephon::tsv
