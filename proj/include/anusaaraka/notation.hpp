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

// Surface grammar of the output dialect.
//
//   unit   := alt ("/" alt)*
//   alt    := word ("_" word)*
//   word   := base annot? marker?
//   base   := PLAIN | "[" PLAIN ("/" PLAIN)+ "]" | "*"
//   annot  := "{" ATOM ("," ATOM)* "}"
//   marker := "`" | "-" | "#"
//
// PLAIN is a maximal run of characters that are neither reserved nor
// whitespace. ATOM is the same except that it excludes ',' and admits '-'
// (e.g. `non-masculine`). render_unit and parse_unit are
// exact inverses on valid units and grammar-conforming strings.

#ifndef ANUSAARAKA_NOTATION_HPP_
#define ANUSAARAKA_NOTATION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace anusaaraka {

// Characters that structure the notation and may not occur in plain text.
inline constexpr std::string_view kReservedChars = "/_{}[]*`-#";

bool is_reserved_char(char c);
bool is_space_char(char c);

// True if `s` is non-empty and free of reserved characters and whitespace.
bool is_plain(std::string_view s);

// True if `s` is a valid annotation atom: PLAIN, minus ',', plus '-'.
bool is_atom(std::string_view s);

// Sentence punctuation split off by the tokenizer: . , ? !
bool is_sentence_punctuation(char c);

// True if `s` is non-empty and made only of sentence punctuation. Such
// whitespace units pass through the engine untouched.
bool is_punctuation_unit(std::string_view s);

enum class Marker {
  kNone,
  kPronoun,   // `  standalone pronoun form
  kModifier,  // -  modifier/correlative form whose head follows
  kUnknown,   // #  untranslated source token
};

char marker_char(Marker m);  // '\0' for kNone

struct Placeholder {
  bool operator==(const Placeholder&) const = default;
};

// Inner alternation `[a/b/...]` inside a single word.
struct InnerAlternation {
  std::vector<std::string> options;
  bool operator==(const InnerAlternation&) const = default;
};

using WordBase = std::variant<std::string, InnerAlternation, Placeholder>;

struct OutputWord {
  WordBase base;
  std::vector<std::string> annotation;
  Marker marker = Marker::kNone;

  bool is_plain_base() const { return std::holds_alternative<std::string>(base); }
  bool operator==(const OutputWord&) const = default;
};

struct Alternative {
  std::vector<OutputWord> words;
  bool operator==(const Alternative&) const = default;
};

struct OutputUnit {
  std::vector<Alternative> alternatives;
  bool operator==(const OutputUnit&) const = default;
};

OutputWord plain_word(std::string base, std::vector<std::string> annotation = {},
                      Marker marker = Marker::kNone);

class NotationError : public std::runtime_error {
 public:
  NotationError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Throws NotationError (offset 0) if a structural invariant is violated.
void check_word(const OutputWord& w);
void check_alternative(const Alternative& a);
void check_unit(const OutputUnit& u);

std::string render_word(const OutputWord& w);
std::string render_alternative(const Alternative& a);
std::string render_unit(const OutputUnit& u);

// Throws NotationError carrying the character offset of the first problem.
OutputUnit parse_unit(std::string_view s);

// Parses `s` and requires exactly one alternative.
Alternative parse_alternative(std::string_view s);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_NOTATION_HPP_
