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

#include "anusaaraka/mapper.hpp"

#include <stdexcept>
#include <string>

namespace anusaaraka {

Alternative expand_tam(const Alternative& sense, const SuffixEntry& suffix) {
  const auto& tmpl = suffix.template_form.words;
  if (sense.words.empty() || tmpl.empty()) {
    throw ResourceError("empty sense or template for suffix '" + suffix.suffix + "'");
  }
  const OutputWord& first = tmpl.front();
  const auto* tail = std::get_if<std::string>(&first.base);
  if (tail == nullptr) {
    throw ResourceError("template of suffix '" + suffix.suffix +
                        "' must start with a plain word");
  }
  Alternative out = sense;
  OutputWord& joined = out.words.back();
  auto* head = std::get_if<std::string>(&joined.base);
  if (head == nullptr) {
    throw ResourceError("sense '" + render_alternative(sense) +
                        "' does not end in a plain word; cannot attach suffix '" +
                        suffix.suffix + "'");
  }
  if (joined.marker != Marker::kNone && first.marker != Marker::kNone) {
    throw ResourceError("sense '" + render_alternative(sense) + "' and template of '" +
                        suffix.suffix + "' both carry a marker");
  }
  *head += *tail;
  joined.annotation.insert(joined.annotation.end(), first.annotation.begin(),
                           first.annotation.end());
  if (first.marker != Marker::kNone) joined.marker = first.marker;
  out.words.insert(out.words.end(), tmpl.begin() + 1, tmpl.end());
  return out;
}

Alternative function_form(const FunctionEntry& entry) {
  return Alternative{{entry.rendered_word()}};
}

Alternative unknown_form(std::string_view surface) {
  return Alternative{{plain_word(std::string(surface), {}, Marker::kUnknown)}};
}

Alternative attachment_form(std::string_view word, const ResourceSet& rs) {
  if (const FunctionEntry* fn = rs.find_function(word)) return function_form(*fn);
  for (const auto& sfx : rs.suffixes()) {
    if (sfx.suffix == word) return sfx.template_form;
  }
  return unknown_form(word);
}

std::vector<Alternative> head_forms(const Analysis& analysis, const ResourceSet& rs) {
  switch (analysis.source) {
    case AnalysisSource::kFunction:
      return {function_form(rs.functions().at(*analysis.function_index))};
    case AnalysisSource::kUnknown:
      return {unknown_form(analysis.stem)};
    case AnalysisSource::kLexical:
      break;
  }
  const LexEntry& entry = rs.lexicon().at(*analysis.lex_index);
  std::vector<Alternative> forms;
  forms.reserve(entry.senses.size());
  for (const auto& sense : entry.senses) {
    if (analysis.suffix_index) {
      forms.push_back(expand_tam(sense, rs.suffixes().at(*analysis.suffix_index)));
    } else {
      forms.push_back(sense);
    }
  }
  return forms;
}

MappedUnit map_group(const WordGroup& group, const ResourceSet& rs) {
  if (group.kind == WordGroupKind::kPunctuation) {
    throw std::invalid_argument("map_group: punctuation groups are not mapped");
  }
  MappedUnit mapped;
  mapped.source_group = group;

  std::vector<OutputWord> tail;
  for (const auto& att : group.attached) {
    Alternative form = attachment_form(att.token.surface, rs);
    tail.insert(tail.end(), form.words.begin(), form.words.end());
  }

  for (const auto& analysis : group.head_analyses) {
    std::vector<Alternative> forms = head_forms(analysis, rs);
    for (std::size_t si = 0; si < forms.size(); ++si) {
      Alternative alt = std::move(forms[si]);
      alt.words.insert(alt.words.end(), tail.begin(), tail.end());
      Provenance prov{analysis, si, analysis.suffix_index};

      bool duplicate = false;
      for (std::size_t k = 0; k < mapped.unit.alternatives.size(); ++k) {
        if (mapped.provenance[k] == prov && mapped.unit.alternatives[k] == alt) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      mapped.unit.alternatives.push_back(std::move(alt));
      mapped.provenance.push_back(std::move(prov));
    }
  }
  if (mapped.unit.alternatives.empty()) {
    throw std::invalid_argument("map_group: group '" + group.head().surface +
                                "' has no analyses");
  }
  return mapped;
}

}  // namespace anusaaraka
