// Copyright 2026 The tpg authors
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

#include "tpg/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tpg {

namespace {

struct Line {
  int number;  // 1-based physical line number
  std::string_view text;
};

// Physical lines, comments dropped. Trailing newline is mandatory.
std::vector<Line> effective_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    int count = 1;
    for (char c : text)
      if (c == '\n') ++count;
    throw parse_error(count, "missing trailing newline");
  }
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (!line.empty() && line.front() == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::vector<std::string_view> split_tokens(const Line& line) {
  std::vector<std::string_view> tokens;
  std::string_view text = line.text;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t space = text.find(' ', pos);
    std::string_view token = text.substr(pos, space - pos);
    if (token.empty()) throw parse_error(line.number, "malformed spacing");
    tokens.push_back(token);
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return tokens;
}

long long parse_int(const Line& line, std::string_view token) {
  bool negative = !token.empty() && token.front() == '-';
  std::string_view digits = negative ? token.substr(1) : token;
  if (digits.empty()) throw parse_error(line.number, "non-integer token '" + std::string(token) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw parse_error(line.number, "non-integer token '" + std::string(token) + "'");
    }
  }
  long long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw parse_error(line.number, "integer out of range '" + std::string(token) + "'");
  }
  if (negative) throw parse_error(line.number, "negative entry");
  return value;
}

}  // namespace

AvailabilityMatrix parse_instance(std::string_view text) {
  std::vector<Line> lines = effective_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      throw parse_error(last, std::string("unexpected end of input, expected ") + what);
    }
    return lines[at++];
  };

  const Line& header = next("header");
  if (header.text != "tpg v1") throw parse_error(header.number, "malformed header, expected 'tpg v1'");

  const Line& dims = next("dimensions");
  std::vector<std::string_view> tokens = split_tokens(dims);
  if (tokens.size() != 2) throw parse_error(dims.number, "expected '<n> <m>'");
  long long teams = parse_int(dims, tokens[0]);
  long long slots = parse_int(dims, tokens[1]);
  if (teams < 1) throw parse_error(dims.number, "team count must be at least 1");
  if (slots < 1) throw parse_error(dims.number, "slot count must be at least 1");
  if (teams * slots > AvailabilityMatrix::kMaxCells) {
    throw parse_error(dims.number, "matrix has too many cells");
  }

  std::vector<long long> entries;
  entries.reserve(static_cast<std::size_t>(teams * slots));
  long long sum = 0;
  for (long long i = 0; i < teams; ++i) {
    const Line& row = next("a matrix row");
    std::vector<std::string_view> cells = split_tokens(row);
    if (cells.size() != static_cast<std::size_t>(slots)) {
      throw parse_error(row.number, "row-length mismatch, expected " + std::to_string(slots) +
                                        " entries");
    }
    for (std::string_view cell : cells) {
      long long value = parse_int(row, cell);
      if (value > AvailabilityMatrix::kMaxEntry) {
        throw parse_error(row.number, "entry exceeds supported range");
      }
      sum += value;
      if (sum > AvailabilityMatrix::kMaxTotal) {
        throw parse_error(row.number, "matrix total exceeds supported range");
      }
      entries.push_back(value);
    }
  }
  if (at != lines.size()) throw parse_error(lines[at].number, "trailing content");
  return AvailabilityMatrix(static_cast<int>(teams), static_cast<int>(slots),
                            std::move(entries));
}

std::string serialize_instance(const AvailabilityMatrix& matrix) {
  std::ostringstream out;
  out << "tpg v1\n" << matrix.teams() << ' ' << matrix.slots() << '\n';
  for (int i = 0; i < matrix.teams(); ++i) {
    for (int j = 0; j < matrix.slots(); ++j) {
      if (j > 0) out << ' ';
      out << matrix.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

AvailabilityMatrix load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace tpg
