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

#include "anusaaraka/inverter.hpp"

#include "anusaaraka/validation.hpp"

namespace anusaaraka {

namespace {

std::string render_range(const std::vector<OutputWord>& words, std::size_t begin,
                         std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += '_';
    out += render_word(words[i]);
  }
  return out;
}

// `foo#`: an untranslated token.
const std::string* unknown_surface(const OutputWord& w) {
  if (w.marker != Marker::kUnknown || !w.annotation.empty()) return nullptr;
  return std::get_if<std::string>(&w.base);
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

ReverseIndex build_reverse_index(const ResourceSet& rs) {
  InjectivityReport report = validate_injectivity(rs);
  if (!report.ok()) throw InjectivityError(std::move(report));

  Renderings items = enumerate_renderings(rs);
  ReverseIndex index;
  for (auto& item : items.heads) {
    index.heads_.emplace(item.rendered, item.source);
  }
  for (auto& item : items.attachments) {
    index.attachments_[item.rendered].insert(item.source.front());
  }
  for (const auto& rule : rs.groups()) index.group_words_.insert(rule.word);

  index.entries_ = index.heads_;
  for (const auto& [h, hsrc] : index.heads_) {
    for (const auto& [a, words] : index.attachments_) {
      std::vector<std::string> seq = hsrc;
      seq.push_back(*words.begin());
      index.entries_.emplace(h + "_" + a, std::move(seq));
    }
  }
  return index;
}

void ReverseIndex::decode_tail(const std::vector<OutputWord>& words, std::size_t pos,
                               std::vector<std::string>& prefix,
                               std::set<std::vector<std::string>>& out) const {
  if (pos == words.size()) {
    out.insert(prefix);
    return;
  }
  if (const std::string* s = unknown_surface(words[pos]);
      s != nullptr && group_words_.count(*s) > 0) {
    prefix.push_back(*s);
    decode_tail(words, pos + 1, prefix, out);
    prefix.pop_back();
  }
  for (std::size_t end = pos + 1; end <= words.size(); ++end) {
    auto it = attachments_.find(render_range(words, pos, end));
    if (it == attachments_.end()) continue;
    for (const auto& word : it->second) {
      prefix.push_back(word);
      decode_tail(words, end, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<std::string>> ReverseIndex::decode(
    const Alternative& alt) const {
  std::set<std::vector<std::string>> found;
  const auto& words = alt.words;
  std::vector<std::string> prefix;
  if (!words.empty()) {
    if (const std::string* s = unknown_surface(words.front())) {
      prefix.push_back(*s);
      decode_tail(words, 1, prefix, found);
      prefix.clear();
    }
  }
  for (std::size_t end = 1; end <= words.size(); ++end) {
    auto it = heads_.find(render_range(words, 0, end));
    if (it == heads_.end()) continue;
    prefix = it->second;
    decode_tail(words, end, prefix, found);
  }
  return {found.begin(), found.end()};
}

std::optional<std::vector<std::string>> ReverseIndex::lookup(
    std::string_view rendered) const {
  Alternative alt;
  try {
    alt = parse_alternative(rendered);
  } catch (const NotationError& e) {
    throw InversionError("cannot parse '" + std::string(rendered) + "': " + e.what());
  }
  auto readings = decode(alt);
  if (readings.empty()) return std::nullopt;
  if (readings.size() > 1) {
    throw InversionError("'" + std::string(rendered) + "' reads as both '" +
                         join_tokens(readings[0]) + "' and '" +
                         join_tokens(readings[1]) + "'");
  }
  return readings.front();
}

std::string invert_text(std::string_view output, const ReverseIndex& index) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < output.size()) {
    while (i < output.size() && is_space_char(output[i])) ++i;
    std::size_t start = i;
    while (i < output.size() && !is_space_char(output[i])) ++i;
    if (start == i) break;
    std::string_view unit_text = output.substr(start, i - start);

    if (is_punctuation_unit(unit_text)) {
      for (char c : unit_text) tokens.emplace_back(1, c);
      continue;
    }
    OutputUnit unit;
    try {
      unit = parse_unit(unit_text);
    } catch (const NotationError& e) {
      throw InversionError("cannot parse unit '" + std::string(unit_text) +
                           "': " + e.what());
    }
    std::optional<std::vector<std::string>> common;
    for (const auto& alt : unit.alternatives) {
      auto readings = index.decode(alt);
      std::string rendered = render_alternative(alt);
      if (readings.empty()) {
        throw InversionError("unit '" + std::string(unit_text) +
                             "' is not in the reverse index (alternative '" +
                             rendered + "')");
      }
      if (readings.size() > 1 || (common && *common != readings.front())) {
        const auto& other = readings.size() > 1 ? readings[1] : *common;
        throw InversionError("inconsistent unit '" + std::string(unit_text) +
                             "': reads as '" + join_tokens(readings.front()) +
                             "' and '" + join_tokens(other) + "'");
      }
      common = readings.front();
    }
    tokens.insert(tokens.end(), common->begin(), common->end());
  }
  return join_tokens(tokens);
}

}  // namespace anusaaraka
