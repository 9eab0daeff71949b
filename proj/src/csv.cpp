/*
 *   Copyright 2026 The Gradix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gradix/csv.hpp"

#include <fstream>
#include <sstream>

#include "gradix/error.hpp"

namespace gradix {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits into records of fields; quoted fields keep their spaces.
std::vector<std::vector<std::string>> records(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  auto end_field = [&] {
    rec.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    if (!(rec.size() == 1 && rec[0].empty())) out.push_back(std::move(rec));
    rec.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
    }
  }
  if (quoted) throw PreconditionError("csv: unterminated quoted field");
  if (!field.empty() || !rec.empty()) end_record();
  return out;
}

std::string quote(const std::string& s) {
  const bool needs = s.empty() || s.find_first_of(",\"\n\r") != std::string::npos || s.front() == ' ' ||
                     s.back() == ' ' || s.front() == '\t' || s.back() == '\t';
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

RankedDataTable read_csv(std::string_view text, AttributeRegistry& registry, const ResiduatedLatticePtr& lattice) {
  auto recs = records(text);
  if (recs.empty()) throw PreconditionError("csv: missing header row");
  std::vector<std::string> header = recs[0];
  const bool ranked = !header.empty() && header.back() == "rank";
  if (ranked) header.pop_back();
  for (const auto& a : header) {
    if (a.empty()) throw PreconditionError("csv: empty attribute name in header");
    if (!registry.declared(a)) registry.declare(a, ValueType::text);
  }
  Scheme scheme(header);
  if (scheme.size() != header.size()) throw PreconditionError("csv: duplicate attribute in header");

  RankedDataTable out(scheme, lattice);
  const std::size_t width = header.size() + (ranked ? 1 : 0);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& rec = recs[i];
    if (rec.size() != width) {
      throw PreconditionError("csv: row " + std::to_string(i + 1) + " has " + std::to_string(rec.size()) +
                              " fields, expected " + std::to_string(width));
    }
    std::vector<Tuple::Cell> cells;
    for (std::size_t j = 0; j < header.size(); ++j) cells.emplace_back(header[j], registry.parse(header[j], rec[j]));
    Tuple t(std::move(cells));
    if (out.rows().count(t)) throw PreconditionError("csv: repeated tuple " + t.to_string());
    out.set(t, ranked ? lattice->parse(rec.back()) : lattice->top());
  }
  return out;
}

std::string write_csv(const RankedDataTable& d) {
  std::string out;
  for (const auto& a : d.scheme()) out += quote(a) + ",";
  out += "rank\n";
  for (const auto& [t, a] : sorted_rows(d)) {
    for (const auto& cell : t.cells()) out += quote(format_value(cell.second)) + ",";
    out += d.lattice().format(a) + "\n";
  }
  return out;
}

RankedDataTable load_csv(const std::string& path, AttributeRegistry& registry, const ResiduatedLatticePtr& lattice) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_csv(buf.str(), registry, lattice);
}

void save_csv(const std::string& path, const RankedDataTable& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << write_csv(d);
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace gradix
