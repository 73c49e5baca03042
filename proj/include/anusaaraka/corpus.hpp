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

// Gold corpus files: UTF-8 lines of
//
//   source <TAB> expected_output [<TAB> gold_pos]
//
// where gold_pos is a comma-separated list of `token_index:pos` pairs. Lines
// starting with `#` are comments and a line `[pair-id]` assigns the following
// entries to that language pair.

#ifndef ANUSAARAKA_CORPUS_HPP_
#define ANUSAARAKA_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anusaaraka/resources.hpp"

namespace anusaaraka {

struct CorpusEntry {
  std::string source;
  std::string expected_output;
  std::string pair_id;
  std::map<std::size_t, Pos> gold_pos;  // token index -> pos
  std::size_t line = 0;
};

struct GoldCorpus {
  std::vector<CorpusEntry> entries;

  // Entries for `pair_id`, plus entries that name no pair.
  std::vector<CorpusEntry> for_pair(std::string_view pair_id) const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GoldCorpus parse_corpus(std::string_view text,
                        std::string_view source_name = "<corpus>");
GoldCorpus load_corpus(const std::filesystem::path& path);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_CORPUS_HPP_
