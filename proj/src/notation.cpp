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

#include "anusaaraka/notation.hpp"

#include <type_traits>
#include <utility>

namespace anusaaraka {

bool is_reserved_char(char c) {
  return kReservedChars.find(c) != std::string_view::npos;
}

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_plain(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (is_reserved_char(c) || is_space_char(c)) return false;
  }
  return true;
}

bool is_atom(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || is_space_char(c)) return false;
    if (is_reserved_char(c) && c != '-') return false;
  }
  return true;
}

bool is_sentence_punctuation(char c) {
  return c == '.' || c == ',' || c == '?' || c == '!';
}

bool is_punctuation_unit(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_sentence_punctuation(c)) return false;
  }
  return true;
}

char marker_char(Marker m) {
  switch (m) {
    case Marker::kPronoun:
      return '`';
    case Marker::kModifier:
      return '-';
    case Marker::kUnknown:
      return '#';
    case Marker::kNone:
      break;
  }
  return '\0';
}

OutputWord plain_word(std::string base, std::vector<std::string> annotation,
                      Marker marker) {
  return OutputWord{std::move(base), std::move(annotation), marker};
}

NotationError::NotationError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

void check_word(const OutputWord& w) {
  if (const auto* plain = std::get_if<std::string>(&w.base)) {
    if (!is_plain(*plain)) {
      throw NotationError("invalid plain base '" + *plain + "'", 0);
    }
  } else if (const auto* inner = std::get_if<InnerAlternation>(&w.base)) {
    if (inner->options.size() < 2) {
      throw NotationError("inner alternation needs at least two options", 0);
    }
    for (const auto& o : inner->options) {
      if (!is_plain(o)) {
        throw NotationError("invalid inner alternation option '" + o + "'", 0);
      }
    }
  }
  for (const auto& atom : w.annotation) {
    if (!is_atom(atom)) {
      throw NotationError("invalid annotation atom '" + atom + "'", 0);
    }
  }
}

void check_alternative(const Alternative& a) {
  if (a.words.empty()) throw NotationError("empty alternative", 0);
  for (const auto& w : a.words) check_word(w);
}

void check_unit(const OutputUnit& u) {
  if (u.alternatives.empty()) throw NotationError("unit has no alternatives", 0);
  for (const auto& a : u.alternatives) check_alternative(a);
}

std::string render_word(const OutputWord& w) {
  std::string out;
  std::visit(
      [&out](const auto& base) {
        using T = std::decay_t<decltype(base)>;
        if constexpr (std::is_same_v<T, std::string>) {
          out += base;
        } else if constexpr (std::is_same_v<T, InnerAlternation>) {
          out += '[';
          for (std::size_t i = 0; i < base.options.size(); ++i) {
            if (i > 0) out += '/';
            out += base.options[i];
          }
          out += ']';
        } else {
          out += '*';
        }
      },
      w.base);
  if (!w.annotation.empty()) {
    out += '{';
    for (std::size_t i = 0; i < w.annotation.size(); ++i) {
      if (i > 0) out += ',';
      out += w.annotation[i];
    }
    out += '}';
  }
  if (w.marker != Marker::kNone) out += marker_char(w.marker);
  return out;
}

std::string render_alternative(const Alternative& a) {
  std::string out;
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    if (i > 0) out += '_';
    out += render_word(a.words[i]);
  }
  return out;
}

std::string render_unit(const OutputUnit& u) {
  std::string out;
  for (std::size_t i = 0; i < u.alternatives.size(); ++i) {
    if (i > 0) out += '/';
    out += render_alternative(u.alternatives[i]);
  }
  return out;
}

namespace {

class UnitParser {
 public:
  explicit UnitParser(std::string_view s) : s_(s) {}

  OutputUnit parse() {
    if (s_.empty()) fail("empty unit");
    OutputUnit unit;
    unit.alternatives.push_back(parse_alternative());
    while (peek() == '/') {
      ++pos_;
      unit.alternatives.push_back(parse_alternative());
    }
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return unit;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw NotationError(what, pos_);
  }

  // Maximal run of non-reserved, non-space characters. Atoms stop at ','
  // and may contain '-'.
  std::string_view take_run(bool atom) {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = s_[pos_];
      if (is_space_char(c)) break;
      if (atom && c == ',') break;
      if (is_reserved_char(c) && !(atom && c == '-')) break;
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  Alternative parse_alternative() {
    Alternative alt;
    alt.words.push_back(parse_word(/*after_join=*/false));
    while (peek() == '_') {
      ++pos_;
      alt.words.push_back(parse_word(/*after_join=*/true));
    }
    return alt;
  }

  OutputWord parse_word(bool after_join) {
    if (at_end() || peek() == '/') {
      fail(after_join ? "trailing '_'" : "empty alternative");
    }
    if (is_space_char(peek())) fail("whitespace inside unit");
    OutputWord word;
    if (peek() == '*') {
      ++pos_;
      word.base = Placeholder{};
    } else if (peek() == '[') {
      ++pos_;
      InnerAlternation inner;
      inner.options.emplace_back(expect_plain("inner alternation option"));
      while (peek() == '/') {
        ++pos_;
        inner.options.emplace_back(expect_plain("inner alternation option"));
      }
      if (peek() != ']') fail("unbalanced '['");
      if (inner.options.size() < 2) fail("inner alternation needs two options");
      ++pos_;
      word.base = std::move(inner);
    } else {
      word.base = std::string(expect_plain("word"));
    }
    if (peek() == '{') {
      ++pos_;
      word.annotation.emplace_back(expect_atom());
      while (peek() == ',') {
        ++pos_;
        word.annotation.emplace_back(expect_atom());
      }
      if (peek() != '}') fail("unbalanced '{'");
      ++pos_;
    }
    switch (peek()) {
      case '`':
        word.marker = Marker::kPronoun;
        ++pos_;
        break;
      case '-':
        word.marker = Marker::kModifier;
        ++pos_;
        break;
      case '#':
        word.marker = Marker::kUnknown;
        ++pos_;
        break;
      default:
        break;
    }
    if (!at_end() && is_space_char(peek())) fail("whitespace inside unit");
    return word;
  }

  std::string_view expect_plain(const char* what) {
    std::string_view run = take_run(/*atom=*/false);
    if (run.empty()) fail(std::string("expected ") + what);
    return run;
  }

  std::string_view expect_atom() {
    std::string_view run = take_run(/*atom=*/true);
    if (run.empty()) fail("expected annotation atom");
    return run;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

OutputUnit parse_unit(std::string_view s) { return UnitParser(s).parse(); }

Alternative parse_alternative(std::string_view s) {
  OutputUnit u = parse_unit(s);
  if (u.alternatives.size() != 1) {
    throw NotationError("expected a single alternative, found " +
                            std::to_string(u.alternatives.size()),
                        0);
  }
  return std::move(u.alternatives.front());
}

}  // namespace anusaaraka
