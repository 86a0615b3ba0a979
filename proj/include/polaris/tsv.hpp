// Copyright 2026 The Polaris Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal reader for the hand-edited TSV resources: one record per line,
// '#' comments and blank lines skipped, LF only, no BOM.

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace polaris::tsv {

struct Row {
  std::size_t line_no = 0;
  std::vector<std::string> fields;
};

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

enum class LineProblem { None, CarriageReturn, ByteOrderMark };

// Splits `content` into data rows. Any line problem is reported through
// `problem`/`problem_line` and stops the scan.
inline std::vector<Row> parse(std::string_view content, LineProblem& problem,
                              std::size_t& problem_line) {
  std::vector<Row> rows;
  problem = LineProblem::None;
  problem_line = 0;
  if (content.starts_with("\xEF\xBB\xBF")) {
    problem = LineProblem::ByteOrderMark;
    problem_line = 1;
    return rows;
  }
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find('\r') != std::string_view::npos) {
      problem = LineProblem::CarriageReturn;
      problem_line = line_no;
      return rows;
    }
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    rows.push_back({line_no, split(line, '\t')});
  }
  return rows;
}

inline bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace polaris::tsv
