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

#ifndef ANUSAARAKA_INVERTER_HPP_
#define ANUSAARAKA_INVERTER_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anusaaraka/notation.hpp"
#include "anusaaraka/resources.hpp"

namespace anusaaraka {

class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rendered alternative -> source tokens, built from the same enumeration as
// validate_injectivity. An alternative is decoded as one head rendering
// followed by zero or more attachment renderings; `#`-marked words stand for
// themselves.
class ReverseIndex {
 public:
  // Head renderings and head+attachment group units.
  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const {
    return entries_;
  }
  bool empty() const { return heads_.empty() && attachments_.empty(); }

  // Every distinct source sequence `alt` can be read as.
  std::vector<std::vector<std::string>> decode(const Alternative& alt) const;

  // Source tokens for one rendered alternative. Throws InversionError if the
  // string is not in notation or reads as more than one source.
  std::optional<std::vector<std::string>> lookup(std::string_view rendered) const;

 private:
  friend ReverseIndex build_reverse_index(const ResourceSet& rs);

  void decode_tail(const std::vector<OutputWord>& words, std::size_t pos,
                   std::vector<std::string>& prefix,
                   std::set<std::vector<std::string>>& out) const;

  std::map<std::string, std::vector<std::string>, std::less<>> heads_;
  std::map<std::string, std::set<std::string>, std::less<>> attachments_;
  std::set<std::string, std::less<>> group_words_;
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

// Throws InjectivityError carrying the collision report if `rs` is not
// injective.
ReverseIndex build_reverse_index(const ResourceSet& rs);

// Recovers source text from engine output, one line at a time. Punctuation
// units pass through. Throws InversionError for units outside the index or
// whose alternatives disagree.
std::string invert_text(std::string_view output, const ReverseIndex& index);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_INVERTER_HPP_
