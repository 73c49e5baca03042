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

#ifndef ANUSAARAKA_PIPELINE_HPP_
#define ANUSAARAKA_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anusaaraka/analyzer.hpp"
#include "anusaaraka/grouper.hpp"
#include "anusaaraka/inverter.hpp"
#include "anusaaraka/mapper.hpp"
#include "anusaaraka/resources.hpp"
#include "anusaaraka/validation.hpp"

namespace anusaaraka {

// Raised when input text breaks the pre-edited form contract, e.g. a word
// containing a reserved notation character.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupRecord {
  std::vector<Token> tokens;
  WordGroupKind kind = WordGroupKind::kSingleton;
  std::vector<Analysis> analyses;   // head readings before filtering
  std::vector<Analysis> surviving;  // after filtering
  std::vector<std::string> filter_notes;
  std::vector<Provenance> provenance;
  std::string unit;
};

struct TransductionTrace {
  std::string source;  // canonical spacing
  std::vector<GroupRecord> groups;
  std::string output;

  // Interlinear layout: src / grp / ana / flt / out lines.
  std::string to_interlinear() const;
};

struct Transduction {
  std::string output;
  TransductionTrace trace;
};

// A ResourceSet that passed validate_injectivity together with its reverse
// index. Construction throws InjectivityError otherwise.
class Engine {
 public:
  explicit Engine(ResourceSet rs);

  const ResourceSet& resources() const { return rs_; }
  const ReverseIndex& index() const { return index_; }

  // One sentence (line) in, one line out. Units follow group order.
  Transduction transduce(std::string_view text) const;
  std::string invert(std::string_view output) const;

 private:
  ResourceSet rs_;
  ReverseIndex index_;
};

// A random pre-edited sentence of 1..max_len word groups over the resourced
// vocabulary. Deterministic in (rs, seed, max_len). Throws std::invalid_argument
// if rs has neither lexical nor function entries or max_len is 0.
std::string generate_sentence(const ResourceSet& rs, std::uint64_t seed,
                              std::size_t max_len);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_PIPELINE_HPP_
