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

#ifndef ANUSAARAKA_GROUPER_HPP_
#define ANUSAARAKA_GROUPER_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "anusaaraka/analyzer.hpp"
#include "anusaaraka/resources.hpp"

namespace anusaaraka {

enum class WordGroupKind { kNounGroup, kVerbGroup, kSingleton, kPunctuation };

std::string_view group_kind_name(WordGroupKind kind);

struct Attachment {
  Token token;
  GroupKind role = GroupKind::kAux;

  bool operator==(const Attachment&) const = default;
};

// A head token plus the auxiliaries/postpositions attached to it. Punctuation
// groups hold one punctuation token and no analyses.
struct WordGroup {
  std::vector<Token> tokens;
  std::vector<Analysis> head_analyses;
  std::vector<Attachment> attached;
  WordGroupKind kind = WordGroupKind::kSingleton;

  const Token& head() const { return tokens.front(); }
  bool operator==(const WordGroup&) const = default;
};

// Greedy left-to-right grouping. `analyses[i]` belongs to `tokens[i]`.
std::vector<WordGroup> group(std::span<const Token> tokens,
                             std::span<const std::vector<Analysis>> analyses,
                             const ResourceSet& rs);

struct FilterEvent {
  enum class Kind { kApplied, kSkippedWouldEmpty };

  std::size_t group_index = 0;
  std::size_t rule_index = 0;
  Kind kind = Kind::kApplied;
  std::size_t removed = 0;

  bool operator==(const FilterEvent&) const = default;
};

// Applies every filter whose subject is a group head and whose neighbour
// condition holds on the adjacent token. A rule that would remove every
// analysis is skipped and reported as kSkippedWouldEmpty.
std::vector<WordGroup> apply_filters(std::vector<WordGroup> groups,
                                     const ResourceSet& rs,
                                     std::vector<FilterEvent>* events = nullptr);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_GROUPER_HPP_
