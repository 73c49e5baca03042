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

#ifndef ANUSAARAKA_ANALYZER_HPP_
#define ANUSAARAKA_ANALYZER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anusaaraka/resources.hpp"

namespace anusaaraka {

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::string surface;
  std::size_t index = 0;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

// Splits pre-edited text on whitespace. Leading and trailing sentence
// punctuation (. , ? !) of each run becomes one punctuation token per
// character.
std::vector<Token> tokenize(std::string_view text);

// Token surfaces joined by single spaces: the form in which source text is
// recovered by inversion.
std::string canonical_spacing(std::string_view text);

std::string join_surfaces(const std::vector<Token>& tokens);

enum class AnalysisSource { kLexical, kFunction, kUnknown };

struct Analysis {
  std::string stem;
  std::optional<Pos> pos;           // empty for unknown tokens
  std::optional<std::string> suffix;  // TAM/vibhakti label when split
  std::vector<std::string> features;
  AnalysisSource source = AnalysisSource::kUnknown;

  // Resource entries that produced this reading.
  std::optional<std::size_t> lex_index;
  std::optional<std::size_t> suffix_index;
  std::optional<std::size_t> function_index;

  // "tin:v+ina", "eMdu:fn", "xyz:?"
  std::string to_string() const;
  bool operator==(const Analysis&) const = default;
};

// Every reading of `token` under `rs`, in order: function word, whole-stem
// lexical entries (file order), then stem+suffix splits by decreasing suffix
// length. A token without readings gets one unknown analysis.
std::vector<Analysis> analyze(const Token& token, const ResourceSet& rs);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_ANALYZER_HPP_
