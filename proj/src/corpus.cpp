// Copyright 2026 The Anusaaraka Engine Authors.
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

#include "anusaaraka/corpus.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace anusaaraka {

namespace {

[[noreturn]] void corpus_fail(std::string_view source, std::size_t line,
                              const std::string& what) {
  throw CorpusError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::map<std::size_t, Pos> parse_gold(std::string_view field, std::string_view source,
                                      std::size_t line) {
  std::map<std::size_t, Pos> gold;
  std::size_t start = 0;
  while (start <= field.size()) {
    std::size_t end = field.find(',', start);
    if (end == std::string_view::npos) end = field.size();
    std::string_view item = field.substr(start, end - start);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      corpus_fail(source, line, "gold annotation '" + std::string(item) +
                                    "' is not index:pos");
    }
    std::size_t index = 0;
    std::string_view digits = item.substr(0, colon);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      corpus_fail(source, line, "bad token index in '" + std::string(item) + "'");
    }
    auto pos = parse_pos(item.substr(colon + 1));
    if (!pos) corpus_fail(source, line, "unknown pos in '" + std::string(item) + "'");
    gold[index] = *pos;
    start = end + 1;
  }
  return gold;
}

}  // namespace

std::vector<CorpusEntry> GoldCorpus::for_pair(std::string_view pair_id) const {
  std::vector<CorpusEntry> out;
  for (const auto& e : entries) {
    if (e.pair_id.empty() || e.pair_id == pair_id) out.push_back(e);
  }
  return out;
}

GoldCorpus parse_corpus(std::string_view text, std::string_view source_name) {
  GoldCorpus corpus;
  std::string pair;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        corpus_fail(source_name, line_no, "malformed pair header");
      }
      pair = std::string(line.substr(1, line.size() - 2));
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      std::size_t tab = line.find('\t', f);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(f));
        break;
      }
      fields.push_back(line.substr(f, tab - f));
      f = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      corpus_fail(source_name, line_no,
                  "expected source<TAB>expected_output[<TAB>gold_pos]");
    }
    CorpusEntry entry;
    entry.source = std::string(fields[0]);
    entry.expected_output = std::string(fields[1]);
    entry.pair_id = pair;
    entry.line = line_no;
    if (fields.size() == 3 && !fields[2].empty()) {
      entry.gold_pos = parse_gold(fields[2], source_name, line_no);
    }
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

GoldCorpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), path.string());
}

}  // namespace anusaaraka
