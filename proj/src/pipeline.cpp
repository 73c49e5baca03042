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

#include "anusaaraka/pipeline.hpp"

#include <random>
#include <sstream>
#include <utility>

namespace anusaaraka {

std::string TransductionTrace::to_interlinear() const {
  std::ostringstream out;
  out << "src: " << source << '\n';
  out << "grp:";
  for (const auto& g : groups) out << " [" << join_surfaces(g.tokens) << ']';
  out << '\n';
  out << "ana:";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    out << (i == 0 ? " " : " | ");
    if (g.kind == WordGroupKind::kPunctuation) {
      out << g.tokens.front().surface;
      continue;
    }
    for (std::size_t k = 0; k < g.analyses.size(); ++k) {
      out << (k == 0 ? "" : " ") << g.analyses[k].to_string();
    }
  }
  out << '\n';
  for (const auto& g : groups) {
    for (const auto& note : g.filter_notes) out << "flt: " << note << '\n';
  }
  out << "out: " << output << '\n';
  return out.str();
}

Engine::Engine(ResourceSet rs)
    : rs_(std::move(rs)), index_(build_reverse_index(rs_)) {}

Transduction Engine::transduce(std::string_view text) const {
  std::vector<Token> tokens = tokenize(text);
  std::vector<std::vector<Analysis>> analyses;
  analyses.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::kPunctuation) {
      analyses.emplace_back();
      continue;
    }
    for (char c : t.surface) {
      if (is_reserved_char(c)) {
        throw InputError("token '" + t.surface + "' contains reserved character '" +
                         std::string(1, c) + "'");
      }
    }
    analyses.push_back(analyze(t, rs_));
  }

  std::vector<WordGroup> grouped = group(tokens, analyses, rs_);
  std::vector<FilterEvent> events;
  std::vector<WordGroup> filtered = apply_filters(grouped, rs_, &events);

  Transduction result;
  TransductionTrace& trace = result.trace;
  trace.source = join_surfaces(tokens);
  for (std::size_t gi = 0; gi < filtered.size(); ++gi) {
    const WordGroup& g = filtered[gi];
    GroupRecord rec;
    rec.tokens = g.tokens;
    rec.kind = g.kind;
    rec.analyses = grouped[gi].head_analyses;
    rec.surviving = g.head_analyses;
    if (g.kind == WordGroupKind::kPunctuation) {
      rec.unit = g.head().surface;
    } else {
      MappedUnit mapped = map_group(g, rs_);
      rec.unit = render_unit(mapped.unit);
      rec.provenance = std::move(mapped.provenance);
    }
    trace.groups.push_back(std::move(rec));
  }
  for (const auto& ev : events) {
    std::string note = rs_.filters()[ev.rule_index].to_string();
    if (ev.kind == FilterEvent::Kind::kApplied) {
      note += " -> removed " + std::to_string(ev.removed);
    } else {
      note += " -> skipped (would remove every analysis)";
    }
    trace.groups[ev.group_index].filter_notes.push_back(std::move(note));
  }

  for (const auto& rec : trace.groups) {
    if (!result.output.empty()) result.output += ' ';
    result.output += rec.unit;
  }
  trace.output = result.output;
  return result;
}

std::string Engine::invert(std::string_view output) const {
  return invert_text(output, index_);
}

std::string generate_sentence(const ResourceSet& rs, std::uint64_t seed,
                              std::size_t max_len) {
  const auto& lexicon = rs.lexicon();
  const auto& functions = rs.functions();
  const auto& groups = rs.groups();
  if (lexicon.empty() && functions.empty()) {
    throw std::invalid_argument("generate_sentence: no lexical or function entries");
  }
  if (max_len == 0) throw std::invalid_argument("generate_sentence: max_len is 0");

  // mt19937_64 output is fixed by the standard; distributions are not, so
  // draws use plain modulo.
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<std::string> words;
  std::size_t length = 1 + draw(max_len);
  for (std::size_t g = 0; g < length; ++g) {
    std::size_t pick = draw(lexicon.size() + functions.size());
    if (pick < lexicon.size()) {
      const LexEntry& entry = lexicon[pick];
      std::vector<const SuffixEntry*> applicable;
      for (const auto& sfx : rs.suffixes()) {
        if (sfx.applies_to == entry.pos) applicable.push_back(&sfx);
      }
      std::string word = entry.stem;
      if (!applicable.empty()) {
        std::size_t s = draw(applicable.size() + 1);
        if (s > 0) word += applicable[s - 1]->suffix;
      }
      words.push_back(std::move(word));
    } else {
      words.push_back(functions[pick - lexicon.size()].word);
    }
    if (!groups.empty()) {
      std::size_t a = draw(groups.size() + 1);
      if (a > 0) words.push_back(groups[a - 1].word);
    }
  }

  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace anusaaraka
