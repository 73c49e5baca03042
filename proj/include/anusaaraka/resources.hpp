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

// Resource files hold all mapping knowledge for one language pair. The format
// is line oriented, UTF-8, TAB separated, with `#` comments:
//
//   [lexicon]   stem  pos  sense1|sense2|...  [feat1,feat2]
//   [suffix]    suffix  pos  tam_label  template
//   [function]  word  target_base  feat1,feat2|0  marker(- ` 0)
//   [group]     aux|postp  word
//   [filter]    subject  after:<w>|before:<w>  keep:<pos>
//
// Senses and templates are single alternatives in output notation.

#ifndef ANUSAARAKA_RESOURCES_HPP_
#define ANUSAARAKA_RESOURCES_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anusaaraka/notation.hpp"

namespace anusaaraka {

enum class Pos { kNoun, kVerb, kAdjective, kAdverb, kPronoun, kFunction };

std::string_view pos_tag(Pos pos);
std::optional<Pos> parse_pos(std::string_view tag);

struct LexEntry {
  std::string stem;
  Pos pos = Pos::kNoun;
  std::vector<Alternative> senses;
  std::vector<std::string> features;

  bool operator==(const LexEntry&) const = default;
};

struct SuffixEntry {
  std::string suffix;
  Pos applies_to = Pos::kVerb;
  std::string tam_label;
  Alternative template_form;

  bool operator==(const SuffixEntry&) const = default;
};

struct FunctionEntry {
  std::string word;
  std::string target_base;
  std::vector<std::string> annotation;
  Marker marker = Marker::kNone;  // kNone, kPronoun or kModifier

  OutputWord rendered_word() const;
  bool operator==(const FunctionEntry&) const = default;
};

enum class GroupKind { kAux, kPostposition };

std::string_view group_kind_tag(GroupKind kind);

struct GroupRule {
  GroupKind kind = GroupKind::kAux;
  std::string word;

  bool operator==(const GroupRule&) const = default;
};

enum class FilterSide { kAfter, kBefore };

struct FilterRule {
  std::string subject;
  FilterSide side = FilterSide::kAfter;
  std::string neighbour;
  Pos keep = Pos::kNoun;

  // "khAtA after:apanA keep:n"
  std::string to_string() const;
  bool operator==(const FilterRule&) const = default;
};

class ResourceError : public std::runtime_error {
 public:
  // line == 0 when the problem is not tied to one line.
  ResourceError(const std::string& message, std::size_t line = 0,
                std::string section = {});
  std::size_t line() const { return line_; }
  const std::string& section() const { return section_; }

 private:
  std::size_t line_;
  std::string section_;
};

// Immutable bundle of all mapping knowledge for one language pair. Only the
// loader creates instances, so every ResourceSet satisfies the per-entry
// invariants; injectivity is checked separately by validate_injectivity.
class ResourceSet {
 public:
  const std::string& pair_id() const { return pair_id_; }

  // Lexicon in file order; homographs with different pos are separate entries.
  const std::vector<LexEntry>& lexicon() const { return lexicon_; }
  const std::vector<SuffixEntry>& suffixes() const { return suffixes_; }
  const std::vector<FunctionEntry>& functions() const { return functions_; }
  const std::vector<GroupRule>& groups() const { return groups_; }
  const std::vector<FilterRule>& filters() const { return filters_; }

  // Indices into lexicon() for `stem`, in file order.
  std::vector<std::size_t> find_lexical(std::string_view stem) const;
  std::optional<std::size_t> find_lexical(std::string_view stem, Pos pos) const;
  const FunctionEntry* find_function(std::string_view word) const;
  const GroupRule* find_group(std::string_view word) const;

  bool empty() const;

  // Copy of this set with a replacement filter list.
  ResourceSet with_filters(std::vector<FilterRule> filters) const;

  bool operator==(const ResourceSet& other) const;

 private:
  friend class ResourceBuilder;
  ResourceSet() = default;

  std::string pair_id_;
  std::vector<LexEntry> lexicon_;
  std::vector<SuffixEntry> suffixes_;
  std::vector<FunctionEntry> functions_;
  std::vector<GroupRule> groups_;
  std::vector<FilterRule> filters_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> lexical_index_;
  std::map<std::string, std::size_t, std::less<>> function_index_;
  std::map<std::string, std::size_t, std::less<>> group_index_;
};

// Parses resource text. `source_name` prefixes error messages.
ResourceSet parse_resources(std::string_view text, std::string pair_id,
                            std::string_view source_name = "<resources>");

// Loads a file; the pair id is the file name without extension.
ResourceSet load_resources(const std::filesystem::path& path);

// Serializes `rs` in the resource format. parse_resources(dump_resources(rs))
// equals rs field by field.
std::string dump_resources(const ResourceSet& rs);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_RESOURCES_HPP_
