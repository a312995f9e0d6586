// Copyright 2026 The ontodiv Authors
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

#include "ontodiv/alignment.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ontodiv/errors.hpp"

namespace ontodiv {

std::string_view relation_symbol(Relation relation) {
  switch (relation) {
    case Relation::kEquivalent:
      return "=";
    case Relation::kSubsumedBy:
      return "<";
    case Relation::kSubsumes:
      return ">";
  }
  return "=";
}

Relation parse_relation(std::string_view symbol) {
  if (symbol == "=") return Relation::kEquivalent;
  if (symbol == "<") return Relation::kSubsumedBy;
  if (symbol == ">") return Relation::kSubsumes;
  throw InputError("unknown relation '" + std::string(symbol) + "' (expected =, < or >)");
}

Alignment::Alignment(std::initializer_list<Mapping> mappings) {
  for (const auto& m : mappings) insert(m);
}

void Alignment::insert(Mapping mapping) {
  auto it = mappings_.find(mapping);
  if (it == mappings_.end()) {
    mappings_.insert(std::move(mapping));
  } else if (mapping.confidence > it->confidence) {
    mappings_.erase(it);
    mappings_.insert(std::move(mapping));
  }
}

Alignment parse_alignment(std::string_view text) {
  Alignment out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> cols;
    std::size_t col_start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', col_start);
      cols.push_back(line.substr(col_start, tab - col_start));
      if (tab == std::string_view::npos) break;
      col_start = tab + 1;
    }
    if (cols.size() < 2 || cols.size() > 4 || cols[0].empty() || cols[1].empty()) {
      throw InputError("alignment line " + std::to_string(line_no) +
                       ": expected 2 to 4 tab-separated columns");
    }
    Mapping m{std::string(cols[0]), std::string(cols[1])};
    if (cols.size() >= 3) m.relation = parse_relation(cols[2]);
    if (cols.size() == 4) {
      const auto* first = cols[3].data();
      const auto* last = first + cols[3].size();
      auto [ptr, ec] = std::from_chars(first, last, m.confidence);
      if (ec != std::errc() || ptr != last || !(m.confidence > 0.0 && m.confidence <= 1.0)) {
        throw InputError("alignment line " + std::to_string(line_no) +
                         ": confidence must be a number in (0, 1]");
      }
    }
    out.insert(std::move(m));
  }
  return out;
}

Alignment read_alignment(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open alignment file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_alignment(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_alignment(const Alignment& alignment) {
  std::string out;
  char buf[32];
  for (const auto& m : alignment) {
    std::snprintf(buf, sizeof buf, "%.9g", m.confidence);
    out += m.source;
    out += '\t';
    out += m.target;
    out += '\t';
    out += relation_symbol(m.relation);
    out += '\t';
    out += buf;
    out += '\n';
  }
  return out;
}

void write_alignment(const Alignment& alignment, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_alignment(alignment);
}

}  // namespace ontodiv
