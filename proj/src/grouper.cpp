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

#include "anusaaraka/grouper.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace anusaaraka {

std::string_view group_kind_name(WordGroupKind kind) {
  switch (kind) {
    case WordGroupKind::kNounGroup:
      return "noun-group";
    case WordGroupKind::kVerbGroup:
      return "verb-group";
    case WordGroupKind::kSingleton:
      return "singleton";
    case WordGroupKind::kPunctuation:
      return "punctuation";
  }
  return "?";
}

std::vector<WordGroup> group(std::span<const Token> tokens,
                             std::span<const std::vector<Analysis>> analyses,
                             const ResourceSet& rs) {
  if (tokens.size() != analyses.size()) {
    throw std::invalid_argument("group: one analysis list per token required");
  }
  std::vector<WordGroup> groups;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind == TokenKind::kPunctuation) {
      groups.push_back(WordGroup{{tok}, {}, {}, WordGroupKind::kPunctuation});
      continue;
    }
    const GroupRule* rule = rs.find_group(tok.surface);
    if (rule != nullptr && !groups.empty() &&
        groups.back().kind != WordGroupKind::kPunctuation) {
      WordGroup& g = groups.back();
      g.tokens.push_back(tok);
      g.attached.push_back(Attachment{tok, rule->kind});
      // The first attachment decides the group kind.
      if (g.kind == WordGroupKind::kSingleton) {
        g.kind = rule->kind == GroupKind::kAux ? WordGroupKind::kVerbGroup
                                               : WordGroupKind::kNounGroup;
      }
      continue;
    }
    groups.push_back(WordGroup{{tok}, analyses[i], {}, WordGroupKind::kSingleton});
  }
  return groups;
}

std::vector<WordGroup> apply_filters(std::vector<WordGroup> groups,
                                     const ResourceSet& rs,
                                     std::vector<FilterEvent>* events) {
  if (rs.filters().empty()) return groups;

  // Sentence tokens by index, for neighbour lookups across group boundaries.
  std::map<std::size_t, const Token*> by_index;
  for (const auto& g : groups) {
    for (const auto& t : g.tokens) by_index[t.index] = &t;
  }
  auto word_at = [&by_index](std::size_t index) -> const Token* {
    auto it = by_index.find(index);
    if (it == by_index.end() || it->second->kind != TokenKind::kWord) return nullptr;
    return it->second;
  };

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    WordGroup& g = groups[gi];
    if (g.kind == WordGroupKind::kPunctuation) continue;
    const Token& head = g.head();
    for (std::size_t ri = 0; ri < rs.filters().size(); ++ri) {
      const FilterRule& rule = rs.filters()[ri];
      if (rule.subject != head.surface) continue;
      const Token* neighbour = nullptr;
      if (rule.side == FilterSide::kAfter) {
        if (head.index > 0) neighbour = word_at(head.index - 1);
      } else {
        neighbour = word_at(head.index + 1);
      }
      if (neighbour == nullptr || neighbour->surface != rule.neighbour) continue;

      auto keeps = [&rule](const Analysis& a) { return a.pos == rule.keep; };
      std::size_t kept = static_cast<std::size_t>(
          std::count_if(g.head_analyses.begin(), g.head_analyses.end(), keeps));
      if (kept == 0) {
        if (events) {
          events->push_back({gi, ri, FilterEvent::Kind::kSkippedWouldEmpty, 0});
        }
        continue;
      }
      std::size_t removed = g.head_analyses.size() - kept;
      std::erase_if(g.head_analyses, [&keeps](const Analysis& a) { return !keeps(a); });
      if (events) events->push_back({gi, ri, FilterEvent::Kind::kApplied, removed});
    }
  }
  return groups;
}

}  // namespace anusaaraka
