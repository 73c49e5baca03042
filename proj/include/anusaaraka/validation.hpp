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

// Static checks on a ResourceSet.
//
// Injectivity: every single-token rendering the mapper can produce (function
// entries, bare senses, sense x applicable suffix), every rendering of an
// attached group word, and every head+attachment concatenation must identify
// its source tokens uniquely. Chains of two or more attachments are decoded
// by segmentation at inversion time and are not enumerated here.
//
// Filters: each filter firing on a gold corpus sentence must keep the gold
// part of speech.

#ifndef ANUSAARAKA_VALIDATION_HPP_
#define ANUSAARAKA_VALIDATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anusaaraka/corpus.hpp"
#include "anusaaraka/resources.hpp"

namespace anusaaraka {

struct RenderedItem {
  std::string rendered;             // one alternative in output notation
  std::vector<std::string> source;  // source token surfaces it stands for
  std::string origin;               // e.g. "lexicon tin:v+ina sense 1"
};

struct Renderings {
  std::vector<RenderedItem> heads;        // group heads, one token each
  std::vector<RenderedItem> attachments;  // attached aux/postp words
};

// Throws ResourceError if a sense cannot take an applicable suffix.
Renderings enumerate_renderings(const ResourceSet& rs);

struct Collision {
  std::string rendered;
  std::vector<std::vector<std::string>> sources;  // >= 2 distinct
  std::vector<std::string> origins;
};

struct InjectivityReport {
  std::vector<Collision> collisions;

  bool ok() const { return collisions.empty(); }
  std::string to_string() const;
};

InjectivityReport validate_injectivity(const ResourceSet& rs);

class InjectivityError : public std::runtime_error {
 public:
  explicit InjectivityError(InjectivityReport report);
  const InjectivityReport& report() const { return report_; }

 private:
  InjectivityReport report_;
};

struct FilterViolation {
  enum class Kind { kWrongPos, kWouldEmpty, kMissingGold };

  Kind kind = Kind::kWrongPos;
  std::size_t corpus_line = 0;
  std::string sentence;
  std::size_t token_index = 0;
  std::string rule;
  std::optional<Pos> gold;

  std::string to_string() const;
};

struct FilterReport {
  std::vector<FilterViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks the entries of `corpus` that belong to rs.pair_id().
FilterReport validate_filters(const ResourceSet& rs, const GoldCorpus& corpus);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_VALIDATION_HPP_
