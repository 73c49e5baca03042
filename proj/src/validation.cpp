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

#include "anusaaraka/validation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "anusaaraka/analyzer.hpp"
#include "anusaaraka/grouper.hpp"
#include "anusaaraka/mapper.hpp"

namespace anusaaraka {

namespace {

using Sequence = std::vector<std::string>;

std::string join_sequence(const Sequence& seq) {
  std::string out;
  for (const auto& s : seq) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

struct Bucket {
  std::set<Sequence> sources;
  std::vector<std::string> origins;
};

std::map<std::string, Bucket> bucket(const std::vector<RenderedItem>& items) {
  std::map<std::string, Bucket> out;
  for (const auto& item : items) {
    Bucket& b = out[item.rendered];
    b.sources.insert(item.source);
    b.origins.push_back(item.origin);
  }
  return out;
}

void collect(const std::map<std::string, Bucket>& buckets,
             std::vector<Collision>& out) {
  for (const auto& [rendered, b] : buckets) {
    if (b.sources.size() < 2) continue;
    out.push_back(Collision{rendered, {b.sources.begin(), b.sources.end()}, b.origins});
  }
}

}  // namespace

Renderings enumerate_renderings(const ResourceSet& rs) {
  Renderings out;
  for (const auto& fn : rs.functions()) {
    out.heads.push_back({render_alternative(function_form(fn)), {fn.word},
                         "function " + fn.word});
  }
  for (const auto& entry : rs.lexicon()) {
    std::string key = entry.stem + ":" + std::string(pos_tag(entry.pos));
    for (std::size_t si = 0; si < entry.senses.size(); ++si) {
      const Alternative& sense = entry.senses[si];
      out.heads.push_back({render_alternative(sense), {entry.stem},
                           "lexicon " + key + " sense " + std::to_string(si + 1)});
      for (const auto& sfx : rs.suffixes()) {
        if (sfx.applies_to != entry.pos) continue;
        out.heads.push_back({render_alternative(expand_tam(sense, sfx)),
                             {entry.stem + sfx.suffix},
                             "lexicon " + key + "+" + sfx.tam_label + " sense " +
                                 std::to_string(si + 1)});
      }
    }
  }
  for (const auto& rule : rs.groups()) {
    out.attachments.push_back({render_alternative(attachment_form(rule.word, rs)),
                               {rule.word},
                               std::string(group_kind_tag(rule.kind)) + " " + rule.word});
  }
  return out;
}

std::string InjectivityReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : collisions) {
    out << "collision '" << c.rendered << "' <-";
    for (std::size_t i = 0; i < c.sources.size(); ++i) {
      out << (i == 0 ? " " : " | ") << join_sequence(c.sources[i]);
    }
    out << "  (";
    for (std::size_t i = 0; i < c.origins.size(); ++i) {
      out << (i == 0 ? "" : "; ") << c.origins[i];
    }
    out << ")\n";
  }
  return out.str();
}

InjectivityReport validate_injectivity(const ResourceSet& rs) {
  Renderings items = enumerate_renderings(rs);
  auto heads = bucket(items.heads);
  auto attachments = bucket(items.attachments);

  std::vector<Collision> found;
  collect(heads, found);
  collect(attachments, found);

  // A head followed by one attachment must not read as another head, or as a
  // different head/attachment split of the same string.
  struct Reading {
    std::string label;
    std::set<Sequence> sources;
  };
  std::map<std::string, std::vector<Reading>> joined;
  for (const auto& [h, hb] : heads) {
    for (const auto& [a, ab] : attachments) {
      Reading r{h + " + " + a, {}};
      for (const auto& hs : hb.sources) {
        for (const auto& as : ab.sources) {
          Sequence seq = hs;
          seq.insert(seq.end(), as.begin(), as.end());
          r.sources.insert(std::move(seq));
        }
      }
      joined[h + "_" + a].push_back(std::move(r));
    }
  }
  for (auto& [key, readings] : joined) {
    if (auto it = heads.find(key); it != heads.end()) {
      readings.push_back(Reading{"head " + key, it->second.sources});
    }
    if (readings.size() < 2) continue;
    std::set<Sequence> all;
    std::vector<std::string> labels;
    for (const auto& r : readings) {
      all.insert(r.sources.begin(), r.sources.end());
      labels.push_back(r.label);
    }
    if (all.size() < 2) continue;
    found.push_back(Collision{key, {all.begin(), all.end()}, labels});
  }

  // The same collision can surface in both namespaces.
  InjectivityReport report;
  std::set<std::pair<std::string, std::vector<Sequence>>> seen;
  for (auto& c : found) {
    if (seen.insert({c.rendered, c.sources}).second) {
      report.collisions.push_back(std::move(c));
    }
  }
  return report;
}

InjectivityError::InjectivityError(InjectivityReport report)
    : std::runtime_error("resource set is not injective:\n" + report.to_string()),
      report_(std::move(report)) {}

std::string FilterViolation::to_string() const {
  std::ostringstream out;
  out << "line " << corpus_line << ": rule '" << rule << "' at token " << token_index
      << " of '" << sentence << "': ";
  switch (kind) {
    case Kind::kWrongPos:
      out << "gold pos is " << (gold ? pos_tag(*gold) : "?");
      break;
    case Kind::kWouldEmpty:
      out << "would remove every analysis";
      break;
    case Kind::kMissingGold:
      out << "no gold pos annotation for this occurrence";
      break;
  }
  return out.str();
}

std::string FilterReport::to_string() const {
  std::string out;
  for (const auto& v : violations) out += v.to_string() + "\n";
  return out;
}

FilterReport validate_filters(const ResourceSet& rs, const GoldCorpus& corpus) {
  FilterReport report;
  if (rs.filters().empty()) return report;
  for (const auto& entry : corpus.for_pair(rs.pair_id())) {
    std::vector<Token> tokens = tokenize(entry.source);
    std::vector<std::vector<Analysis>> analyses;
    analyses.reserve(tokens.size());
    for (const auto& t : tokens) {
      analyses.push_back(t.kind == TokenKind::kWord ? analyze(t, rs)
                                                    : std::vector<Analysis>{});
    }
    std::vector<FilterEvent> events;
    std::vector<WordGroup> groups =
        apply_filters(group(tokens, analyses, rs), rs, &events);

    for (const auto& ev : events) {
      const FilterRule& rule = rs.filters()[ev.rule_index];
      FilterViolation v;
      v.corpus_line = entry.line;
      v.sentence = entry.source;
      v.token_index = groups[ev.group_index].head().index;
      v.rule = rule.to_string();
      auto gold = entry.gold_pos.find(v.token_index);
      if (gold != entry.gold_pos.end()) v.gold = gold->second;

      if (ev.kind == FilterEvent::Kind::kSkippedWouldEmpty) {
        v.kind = FilterViolation::Kind::kWouldEmpty;
      } else if (!v.gold) {
        v.kind = FilterViolation::Kind::kMissingGold;
      } else if (*v.gold != rule.keep) {
        v.kind = FilterViolation::Kind::kWrongPos;
      } else {
        continue;
      }
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace anusaaraka
