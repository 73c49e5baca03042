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

#include "anusaaraka/resources.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

namespace anusaaraka {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 6> kPosTags = {{
    {Pos::kNoun, "n"},
    {Pos::kVerb, "v"},
    {Pos::kAdjective, "adj"},
    {Pos::kAdverb, "adv"},
    {Pos::kPronoun, "pn"},
    {Pos::kFunction, "fn"},
}};

enum class Section { kNone, kLexicon, kSuffix, kFunction, kGroup, kFilter };

std::string_view section_name(Section s) {
  switch (s) {
    case Section::kLexicon:
      return "lexicon";
    case Section::kSuffix:
      return "suffix";
    case Section::kFunction:
      return "function";
    case Section::kGroup:
      return "group";
    case Section::kFilter:
      return "filter";
    case Section::kNone:
      break;
  }
  return "";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool has_unknown_marker(const Alternative& alt) {
  return std::any_of(alt.words.begin(), alt.words.end(), [](const OutputWord& w) {
    return w.marker == Marker::kUnknown;
  });
}

template <typename T>
std::string join(const std::vector<T>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string_view pos_tag(Pos pos) {
  for (const auto& [p, tag] : kPosTags) {
    if (p == pos) return tag;
  }
  return "?";
}

std::optional<Pos> parse_pos(std::string_view tag) {
  for (const auto& [p, t] : kPosTags) {
    if (t == tag) return p;
  }
  return std::nullopt;
}

std::string_view group_kind_tag(GroupKind kind) {
  return kind == GroupKind::kAux ? "aux" : "postp";
}

OutputWord FunctionEntry::rendered_word() const {
  return OutputWord{target_base, annotation, marker};
}

std::string FilterRule::to_string() const {
  std::string out = subject;
  out += side == FilterSide::kAfter ? " after:" : " before:";
  out += neighbour;
  out += " keep:";
  out += pos_tag(keep);
  return out;
}

ResourceError::ResourceError(const std::string& message, std::size_t line,
                             std::string section)
    : std::runtime_error(message), line_(line), section_(std::move(section)) {}

std::vector<std::size_t> ResourceSet::find_lexical(std::string_view stem) const {
  auto it = lexical_index_.find(stem);
  if (it == lexical_index_.end()) return {};
  return it->second;
}

std::optional<std::size_t> ResourceSet::find_lexical(std::string_view stem,
                                                     Pos pos) const {
  auto it = lexical_index_.find(stem);
  if (it == lexical_index_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    if (lexicon_[i].pos == pos) return i;
  }
  return std::nullopt;
}

const FunctionEntry* ResourceSet::find_function(std::string_view word) const {
  auto it = function_index_.find(word);
  return it == function_index_.end() ? nullptr : &functions_[it->second];
}

const GroupRule* ResourceSet::find_group(std::string_view word) const {
  auto it = group_index_.find(word);
  return it == group_index_.end() ? nullptr : &groups_[it->second];
}

bool ResourceSet::empty() const {
  return lexicon_.empty() && suffixes_.empty() && functions_.empty() &&
         groups_.empty() && filters_.empty();
}

ResourceSet ResourceSet::with_filters(std::vector<FilterRule> filters) const {
  ResourceSet copy = *this;
  copy.filters_ = std::move(filters);
  return copy;
}

bool ResourceSet::operator==(const ResourceSet& other) const {
  return pair_id_ == other.pair_id_ && lexicon_ == other.lexicon_ &&
         suffixes_ == other.suffixes_ && functions_ == other.functions_ &&
         groups_ == other.groups_ && filters_ == other.filters_;
}

// Accumulates entries line by line and enforces the per-entry invariants.
class ResourceBuilder {
 public:
  ResourceBuilder(std::string pair_id, std::string_view source_name)
      : source_name_(source_name) {
    rs_.pair_id_ = std::move(pair_id);
  }

  void add_line(std::string_view raw, std::size_t line_no) {
    line_ = line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.find_first_not_of(" \t") == std::string_view::npos) return;

    if (line.front() == '[') {
      open_section(line);
      return;
    }
    std::vector<std::string_view> fields = split(line, '\t');
    switch (section_) {
      case Section::kNone:
        fail("entry outside of any section");
      case Section::kLexicon:
        add_lexical(fields);
        break;
      case Section::kSuffix:
        add_suffix(fields);
        break;
      case Section::kFunction:
        add_function(fields);
        break;
      case Section::kGroup:
        add_group(fields);
        break;
      case Section::kFilter:
        add_filter(fields);
        break;
    }
  }

  ResourceSet finish() {
    line_ = 0;
    section_ = Section::kNone;
    if (!saw_section_) fail("no sections found");
    for (const auto& rule : rs_.groups_) {
      if (rs_.find_lexical(rule.word, Pos::kNoun)) {
        fail("group word '" + rule.word + "' is also a noun stem");
      }
    }
    return std::move(rs_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << source_name_;
    if (line_ > 0) msg << ':' << line_;
    if (section_ != Section::kNone) msg << " [" << section_name(section_) << ']';
    msg << ": " << what;
    throw ResourceError(msg.str(), line_, std::string(section_name(section_)));
  }

  void open_section(std::string_view header) {
    static constexpr std::array<std::pair<std::string_view, Section>, 5> kHeaders = {{
        {"[lexicon]", Section::kLexicon},
        {"[suffix]", Section::kSuffix},
        {"[function]", Section::kFunction},
        {"[group]", Section::kGroup},
        {"[filter]", Section::kFilter},
    }};
    for (const auto& [name, section] : kHeaders) {
      if (header == name) {
        section_ = section;
        saw_section_ = true;
        return;
      }
    }
    section_ = Section::kNone;
    fail("unknown section header '" + std::string(header) + "'");
  }

  void expect_fields(const std::vector<std::string_view>& fields,
                     std::size_t min, std::size_t max) const {
    if (fields.size() < min || fields.size() > max) {
      std::string expected = std::to_string(min);
      if (max != min) expected += "-" + std::to_string(max);
      fail("expected " + expected + " TAB-separated fields, found " +
           std::to_string(fields.size()));
    }
  }

  std::string source_form(std::string_view s, std::string_view what) const {
    if (s.empty()) fail("empty " + std::string(what));
    for (char c : s) {
      if (is_space_char(c)) {
        fail(std::string(what) + " '" + std::string(s) + "' contains whitespace");
      }
      if (is_reserved_char(c)) {
        fail(std::string(what) + " '" + std::string(s) +
             "' contains reserved character '" + c + "'");
      }
    }
    if (is_sentence_punctuation(s.front()) || is_sentence_punctuation(s.back())) {
      fail(std::string(what) + " '" + std::string(s) +
           "' begins or ends with sentence punctuation");
    }
    return std::string(s);
  }

  Pos pos_field(std::string_view s) const {
    auto pos = parse_pos(s);
    if (!pos) fail("unknown part of speech '" + std::string(s) + "'");
    return *pos;
  }

  std::vector<std::string> atoms(std::string_view s, bool zero_means_none) const {
    std::vector<std::string> out;
    if (s.empty() || (zero_means_none && s == "0")) return out;
    for (std::string_view atom : split(s, ',')) {
      if (!is_atom(atom)) fail("invalid feature atom '" + std::string(atom) + "'");
      out.emplace_back(atom);
    }
    return out;
  }

  Alternative target_form(std::string_view s, std::string_view what) const {
    Alternative alt;
    try {
      alt = parse_alternative(s);
    } catch (const NotationError& e) {
      fail("bad " + std::string(what) + " '" + std::string(s) + "': " + e.what());
    }
    if (has_unknown_marker(alt)) {
      fail(std::string(what) + " '" + std::string(s) + "' uses the '#' marker");
    }
    if (is_punctuation_unit(s)) {
      fail(std::string(what) + " '" + std::string(s) + "' is only punctuation");
    }
    return alt;
  }

  void add_lexical(const std::vector<std::string_view>& fields) {
    expect_fields(fields, 3, 4);
    LexEntry entry;
    entry.stem = source_form(fields[0], "stem");
    entry.pos = pos_field(fields[1]);
    for (std::string_view sense : split(fields[2], '|')) {
      Alternative alt = target_form(sense, "sense");
      entry.senses.push_back(std::move(alt));
    }
    if (fields.size() == 4) entry.features = atoms(fields[3], false);

    if (auto existing = rs_.find_lexical(entry.stem, entry.pos)) {
      LexEntry& target = rs_.lexicon_[*existing];
      for (auto& sense : entry.senses) target.senses.push_back(std::move(sense));
      for (auto& f : entry.features) {
        if (std::find(target.features.begin(), target.features.end(), f) ==
            target.features.end()) {
          target.features.push_back(std::move(f));
        }
      }
      check_unique_senses(target);
      return;
    }
    check_unique_senses(entry);
    rs_.lexical_index_[entry.stem].push_back(rs_.lexicon_.size());
    rs_.lexicon_.push_back(std::move(entry));
  }

  void check_unique_senses(const LexEntry& entry) const {
    std::vector<std::string> rendered;
    for (const auto& sense : entry.senses) {
      std::string r = render_alternative(sense);
      if (std::find(rendered.begin(), rendered.end(), r) != rendered.end()) {
        fail("duplicate sense '" + r + "' for " + entry.stem + ":" +
             std::string(pos_tag(entry.pos)));
      }
      rendered.push_back(std::move(r));
    }
  }

  void add_suffix(const std::vector<std::string_view>& fields) {
    expect_fields(fields, 4, 4);
    SuffixEntry entry;
    entry.suffix = source_form(fields[0], "suffix");
    entry.applies_to = pos_field(fields[1]);
    if (fields[2].empty() ||
        std::any_of(fields[2].begin(), fields[2].end(), is_space_char)) {
      fail("invalid TAM label '" + std::string(fields[2]) + "'");
    }
    entry.tam_label = std::string(fields[2]);
    entry.template_form = target_form(fields[3], "template");
    if (!entry.template_form.words.front().is_plain_base()) {
      fail("template '" + std::string(fields[3]) +
           "' must start with a plain word");
    }
    rs_.suffixes_.push_back(std::move(entry));
  }

  void add_function(const std::vector<std::string_view>& fields) {
    expect_fields(fields, 4, 4);
    FunctionEntry entry;
    entry.word = source_form(fields[0], "function word");
    if (!is_plain(fields[1]) || is_punctuation_unit(fields[1])) {
      fail("invalid target base '" + std::string(fields[1]) + "'");
    }
    entry.target_base = std::string(fields[1]);
    entry.annotation = atoms(fields[2], true);
    if (fields[3] == "-") {
      entry.marker = Marker::kModifier;
    } else if (fields[3] == "`") {
      entry.marker = Marker::kPronoun;
    } else if (fields[3] == "0") {
      entry.marker = Marker::kNone;
    } else {
      fail("unknown marker '" + std::string(fields[3]) + "'");
    }
    if (rs_.function_index_.count(entry.word) > 0) {
      fail("duplicate function word '" + entry.word + "'");
    }
    rs_.function_index_[entry.word] = rs_.functions_.size();
    rs_.functions_.push_back(std::move(entry));
  }

  void add_group(const std::vector<std::string_view>& fields) {
    expect_fields(fields, 2, 2);
    GroupRule rule;
    if (fields[0] == "aux") {
      rule.kind = GroupKind::kAux;
    } else if (fields[0] == "postp") {
      rule.kind = GroupKind::kPostposition;
    } else {
      fail("unknown group kind '" + std::string(fields[0]) + "'");
    }
    rule.word = source_form(fields[1], "group word");
    if (rs_.group_index_.count(rule.word) > 0) {
      fail("duplicate group word '" + rule.word + "'");
    }
    rs_.group_index_[rule.word] = rs_.groups_.size();
    rs_.groups_.push_back(std::move(rule));
  }

  void add_filter(const std::vector<std::string_view>& fields) {
    expect_fields(fields, 3, 3);
    FilterRule rule;
    rule.subject = source_form(fields[0], "filter subject");
    std::string_view condition = fields[1];
    if (condition.starts_with("after:")) {
      rule.side = FilterSide::kAfter;
      condition.remove_prefix(6);
    } else if (condition.starts_with("before:")) {
      rule.side = FilterSide::kBefore;
      condition.remove_prefix(7);
    } else {
      fail("unknown filter condition '" + std::string(fields[1]) + "'");
    }
    rule.neighbour = source_form(condition, "filter neighbour");
    std::string_view action = fields[2];
    if (!action.starts_with("keep:")) {
      fail("unknown filter action '" + std::string(action) + "'");
    }
    rule.keep = pos_field(action.substr(5));
    rs_.filters_.push_back(std::move(rule));
  }

  ResourceSet rs_;
  std::string source_name_;
  Section section_ = Section::kNone;
  bool saw_section_ = false;
  std::size_t line_ = 0;
};

ResourceSet parse_resources(std::string_view text, std::string pair_id,
                            std::string_view source_name) {
  ResourceBuilder builder(std::move(pair_id), source_name);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    builder.add_line(text.substr(start, end - start), ++line_no);
    start = end + 1;
  }
  return builder.finish();
}

ResourceSet load_resources(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read resource file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_resources(buffer.str(), path.stem().string(), path.string());
}

std::string dump_resources(const ResourceSet& rs) {
  std::ostringstream out;
  out << "[lexicon]\n";
  for (const auto& e : rs.lexicon()) {
    std::vector<std::string> senses;
    for (const auto& s : e.senses) senses.push_back(render_alternative(s));
    out << e.stem << '\t' << pos_tag(e.pos) << '\t' << join(senses, "|");
    if (!e.features.empty()) out << '\t' << join(e.features, ",");
    out << '\n';
  }
  out << "\n[suffix]\n";
  for (const auto& e : rs.suffixes()) {
    out << e.suffix << '\t' << pos_tag(e.applies_to) << '\t' << e.tam_label << '\t'
        << render_alternative(e.template_form) << '\n';
  }
  out << "\n[function]\n";
  for (const auto& e : rs.functions()) {
    out << e.word << '\t' << e.target_base << '\t'
        << (e.annotation.empty() ? std::string("0") : join(e.annotation, ","))
        << '\t';
    if (e.marker == Marker::kNone) {
      out << '0';
    } else {
      out << marker_char(e.marker);
    }
    out << '\n';
  }
  out << "\n[group]\n";
  for (const auto& r : rs.groups()) {
    out << group_kind_tag(r.kind) << '\t' << r.word << '\n';
  }
  out << "\n[filter]\n";
  for (const auto& f : rs.filters()) {
    out << f.subject << '\t'
        << (f.side == FilterSide::kAfter ? "after:" : "before:") << f.neighbour
        << "\tkeep:" << pos_tag(f.keep) << '\n';
  }
  return out.str();
}

}  // namespace anusaaraka
