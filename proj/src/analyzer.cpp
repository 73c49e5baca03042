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

#include "anusaaraka/analyzer.hpp"

#include <algorithm>
#include <numeric>

namespace anusaaraka {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto push = [&tokens](std::string_view s, TokenKind kind) {
    tokens.push_back(Token{std::string(s), tokens.size(), kind});
  };

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space_char(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space_char(text[i])) ++i;
    std::string_view run = text.substr(start, i - start);
    if (run.empty()) break;

    std::size_t lead = 0;
    while (lead < run.size() && is_sentence_punctuation(run[lead])) ++lead;
    std::size_t trail = run.size();
    while (trail > lead && is_sentence_punctuation(run[trail - 1])) --trail;

    for (std::size_t k = 0; k < lead; ++k) {
      push(run.substr(k, 1), TokenKind::kPunctuation);
    }
    if (trail > lead) push(run.substr(lead, trail - lead), TokenKind::kWord);
    for (std::size_t k = trail; k < run.size(); ++k) {
      push(run.substr(k, 1), TokenKind::kPunctuation);
    }
  }
  return tokens;
}

std::string join_surfaces(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

std::string canonical_spacing(std::string_view text) {
  return join_surfaces(tokenize(text));
}

std::string Analysis::to_string() const {
  std::string out = stem;
  out += ':';
  out += pos ? std::string(pos_tag(*pos)) : std::string("?");
  if (suffix) {
    out += '+';
    out += *suffix;
  }
  return out;
}

std::vector<Analysis> analyze(const Token& token, const ResourceSet& rs) {
  const std::string& surface = token.surface;
  std::vector<Analysis> out;

  if (const FunctionEntry* fn = rs.find_function(surface)) {
    Analysis a;
    a.stem = surface;
    a.pos = Pos::kFunction;
    a.features = fn->annotation;
    a.source = AnalysisSource::kFunction;
    a.function_index = static_cast<std::size_t>(fn - rs.functions().data());
    out.push_back(std::move(a));
  }

  for (std::size_t li : rs.find_lexical(surface)) {
    const LexEntry& entry = rs.lexicon()[li];
    Analysis a;
    a.stem = entry.stem;
    a.pos = entry.pos;
    a.features = entry.features;
    a.source = AnalysisSource::kLexical;
    a.lex_index = li;
    out.push_back(std::move(a));
  }

  // Suffix entries ordered by decreasing length, file order among equals.
  std::vector<std::size_t> order(rs.suffixes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&rs](std::size_t a, std::size_t b) {
    return rs.suffixes()[a].suffix.size() > rs.suffixes()[b].suffix.size();
  });
  for (std::size_t si : order) {
    const SuffixEntry& sfx = rs.suffixes()[si];
    if (sfx.suffix.size() >= surface.size()) continue;
    if (!std::string_view(surface).ends_with(sfx.suffix)) continue;
    std::string_view stem =
        std::string_view(surface).substr(0, surface.size() - sfx.suffix.size());
    for (std::size_t li : rs.find_lexical(stem)) {
      const LexEntry& entry = rs.lexicon()[li];
      if (entry.pos != sfx.applies_to) continue;
      Analysis a;
      a.stem = entry.stem;
      a.pos = entry.pos;
      a.suffix = sfx.tam_label;
      a.features = entry.features;
      a.source = AnalysisSource::kLexical;
      a.lex_index = li;
      a.suffix_index = si;
      out.push_back(std::move(a));
    }
  }

  if (out.empty()) {
    Analysis a;
    a.stem = surface;
    a.source = AnalysisSource::kUnknown;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace anusaaraka
