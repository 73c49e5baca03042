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

#ifndef ANUSAARAKA_MAPPER_HPP_
#define ANUSAARAKA_MAPPER_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "anusaaraka/analyzer.hpp"
#include "anusaaraka/grouper.hpp"
#include "anusaaraka/notation.hpp"
#include "anusaaraka/resources.hpp"

namespace anusaaraka {

// Which analysis and sense produced one alternative of a unit.
struct Provenance {
  Analysis analysis;
  std::size_t sense_index = 0;
  std::optional<std::size_t> suffix_index;

  bool operator==(const Provenance&) const = default;
};

struct MappedUnit {
  WordGroup source_group;
  OutputUnit unit;
  std::vector<Provenance> provenance;  // parallel to unit.alternatives
};

// Concatenates the template's first word onto the last word of `sense` and
// appends the remaining template words. Annotations of the joined word are
// the sense's followed by the template's.
//
// Throws ResourceError if the template starts with a placeholder or inner
// alternation, or if the joined words cannot be merged.
Alternative expand_tam(const Alternative& sense, const SuffixEntry& suffix);

Alternative function_form(const FunctionEntry& entry);

// `surface#`
Alternative unknown_form(std::string_view surface);

// Rendering of a token attached to a group: its function entry, else the
// template of the first suffix entry spelled like it, else unknown.
Alternative attachment_form(std::string_view word, const ResourceSet& rs);

// One alternative per sense of the analysis (one for function/unknown).
std::vector<Alternative> head_forms(const Analysis& analysis, const ResourceSet& rs);

MappedUnit map_group(const WordGroup& group, const ResourceSet& rs);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_MAPPER_HPP_
