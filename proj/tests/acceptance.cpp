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

// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anusaaraka/cli.hpp"
#include "anusaaraka/corpus.hpp"
#include "anusaaraka/notation.hpp"
#include "anusaaraka/pipeline.hpp"
#include "anusaaraka/validation.hpp"
#include "test_util.hpp"

namespace anu = anusaaraka;

namespace {

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) {
      expect(true, what);
      return;
    }
    std::ostringstream msg;
    msg << what << ": got '" << actual << "', want '" << expected << "'";
    expect(false, msg.str());
  }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;  // <= 0: no runtime bound
  std::function<void(Check&)> body;
};

anu::ResourceSet bundled(const char* pair) { return anu::testing::load_bundled(pair); }

std::size_t count_units(std::string_view s) {
  std::size_t n = 0;
  bool in_unit = false;
  for (char c : s) {
    bool space = anu::is_space_char(c);
    if (!space && !in_unit) ++n;
    in_unit = !space;
  }
  return n;
}

void kannada_sentence(Check& c) {
  anu::Engine engine(bundled("kan-hin"));
  c.expect_eq(engine.transduce("mohana nALe baruvanu eMdu rAma heLidanu .").output,
              std::string("mohana kala AyegA EsA rAma kahA ."), "transduce");
}

void participle(Check& c) {
  anu::ResourceSet rs = bundled("tel-hin");
  anu::Engine engine(rs);
  anu::Transduction t = engine.transduce("tinina");
  c.expect_eq(t.output, std::string("khAyA_[HE/tHA]_jo_*_vaHa-"), "unit");
  c.expect(t.trace.groups.size() == 1 && t.trace.groups[0].analyses.size() == 1 &&
               t.trace.groups[0].analyses[0].suffix == "ina",
           "single stem+ina analysis");

  anu::OutputUnit u = anu::parse_unit("khAyA_[HE/tHA]_jo_*_vaHa-");
  bool shape = u.alternatives.size() == 1 && u.alternatives[0].words.size() == 5;
  c.expect(shape, "one alternative of five words");
  if (!shape) return;
  const auto& w = u.alternatives[0].words;
  c.expect(std::get_if<std::string>(&w[0].base) &&
               std::get<std::string>(w[0].base) == "khAyA",
           "word 1 is stem+yA");
  auto* inner = std::get_if<anu::InnerAlternation>(&w[1].base);
  c.expect(inner && inner->options == std::vector<std::string>{"HE", "tHA"},
           "word 2 is [HE/tHA]");
  c.expect(std::get_if<std::string>(&w[2].base) &&
               std::get<std::string>(w[2].base) == "jo",
           "word 3 is jo");
  c.expect(std::holds_alternative<anu::Placeholder>(w[3].base), "word 4 is *");
  c.expect(std::get_if<std::string>(&w[4].base) &&
               std::get<std::string>(w[4].base) == "vaHa" &&
               w[4].marker == anu::Marker::kModifier,
           "word 5 is vaHa-");
}

void pronouns(Check& c) {
  anu::Engine engine(bundled("tel-hin"));
  const std::vector<std::pair<std::string, std::string>> table = {
      {"A", "vaHa-"},
      {"adi", "vaHa{non-masculine}`"},
      {"vADu", "vaHa{masculine,singular}`"},
      {"AmeV", "vaHa{fem.,singular}`"},
  };
  for (const auto& [word, form] : table) {
    c.expect_eq(engine.transduce(word).output, form, word + " forward");
    c.expect_eq(engine.invert(form), word, form + " inverse");
  }
}

void substitutivity(Check& c) {
  const std::string s = "rAma ne bEnka meM apanA khAtA kholA .";
  anu::Engine unfiltered(bundled("hin-eng").with_filters({}));
  anu::Engine filtered(bundled("hin-eng"));
  c.expect_eq(unfiltered.transduce("khAtA").output, std::string("eats/ledger"),
              "bare khAtA");
  anu::Transduction a = unfiltered.transduce(s);
  anu::Transduction b = filtered.transduce(s);
  auto khata_unit = [](const anu::Transduction& t) -> std::string {
    for (const auto& g : t.trace.groups) {
      if (g.tokens.front().surface == "khAtA") return g.unit;
    }
    return "<missing>";
  };
  std::string ua = khata_unit(a);
  std::string ub = khata_unit(b);
  c.expect_eq(ua, std::string("eats/ledger"), "bank sentence without filter");
  c.expect_eq(ub, std::string("ledger"), "bank sentence with filter");
  c.expect_eq(unfiltered.invert(ua), std::string("khAtA"), "invert eats/ledger");
  c.expect_eq(filtered.invert(ub), std::string("khAtA"), "invert ledger");
  c.expect_eq(unfiltered.invert(a.output), s, "invert sentence without filter");
  c.expect_eq(filtered.invert(b.output), s, "invert sentence with filter");
}

void reversibility(Check& c) {
  anu::GoldCorpus gold = anu::load_corpus(anu::testing::data_path("gold.tsv"));
  c.expect(gold.entries.size() >= 20, "gold corpus has at least 20 sentences");
  for (const char* pair : {"kan-hin", "tel-hin", "hin-eng"}) {
    anu::Engine engine(bundled(pair));
    auto round_trip = [&](const std::string& s, const std::string& where) {
      std::string out = engine.transduce(s).output;
      try {
        c.expect_eq(engine.invert(out), anu::canonical_spacing(s), where);
      } catch (const anu::InversionError& e) {
        c.expect(false, where + ": " + e.what());
      }
    };
    for (const auto& e : gold.for_pair(pair)) {
      round_trip(e.source, std::string("gold.tsv:") + std::to_string(e.line));
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      round_trip(anu::generate_sentence(engine.resources(), seed, 12),
                 std::string(pair) + " seed " + std::to_string(seed));
    }
  }
}

void injectivity_sensitivity(Check& c) {
  std::string fixture = anu::testing::fixture_path("tel-hin-sabotage.anu");
  anu::ResourceSet rs = anu::load_resources(fixture);
  anu::InjectivityReport report = anu::validate_injectivity(rs);
  c.expect_eq(report.collisions.size(), std::size_t{1}, "collision count");
  if (report.collisions.size() == 1) {
    c.expect(report.collisions[0].sources ==
                 std::vector<std::vector<std::string>>{{"A"}, {"adi"}},
             "collision names A and adi");
  }
  bool refused = false;
  try {
    anu::build_reverse_index(rs);
  } catch (const anu::InjectivityError&) {
    refused = true;
  }
  c.expect(refused, "build_reverse_index refuses");

  const char* argv[] = {"anusaaraka", "validate", "--resources", fixture.c_str()};
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  c.expect_eq(anu::cli_main(4, argv, in, out, err), 1, "validate exit code");
}

void notation_round_trip(Check& c) {
  std::mt19937_64 rng(1);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    anu::OutputUnit u = anu::testing::random_unit(rng);
    if (anu::parse_unit(anu::render_unit(u)) != u) ++bad;
  }
  c.expect_eq(bad, std::size_t{0}, "parse(render(u)) mismatches");

  anu::GoldCorpus gold = anu::load_corpus(anu::testing::data_path("gold.tsv"));
  for (const auto& e : gold.entries) {
    std::istringstream units(e.expected_output);
    std::string unit;
    while (units >> unit) {
      if (anu::is_punctuation_unit(unit)) continue;
      c.expect_eq(anu::render_unit(anu::parse_unit(unit)), unit, "gold unit");
    }
  }
}

void structure(Check& c) {
  anu::GoldCorpus gold = anu::load_corpus(anu::testing::data_path("gold.tsv"));
  for (const char* pair : {"kan-hin", "tel-hin", "hin-eng"}) {
    anu::Engine engine(bundled(pair));
    for (const auto& e : gold.for_pair(pair)) {
      std::string where = "gold.tsv:" + std::to_string(e.line);
      anu::Transduction t = engine.transduce(e.source);
      c.expect_eq(count_units(t.output), t.trace.groups.size(), where + " unit count");
      std::istringstream units(t.output);
      std::string unit;
      std::size_t i = 0;
      std::size_t last_index = 0;
      bool ordered = true;
      while (units >> unit && i < t.trace.groups.size()) {
        const auto& g = t.trace.groups[i];
        if (g.unit != unit) ordered = false;
        if (i > 0 && g.tokens.front().index != last_index + 1) ordered = false;
        last_index = g.tokens.back().index;
        ++i;
      }
      c.expect(ordered, where + " unit order follows group order");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Kannada EsA construction exact", 1.0, kannada_sentence},
      {2, "participle equation exact", 0, participle},
      {3, "pronoun table both directions", 0, pronouns},
      {4, "substitutivity and filter", 0, substitutivity},
      {5, "reversibility on gold + 3x1000 generated", 10.0, reversibility},
      {6, "injectivity validator sensitivity", 0, injectivity_sensitivity},
      {7, "notation round trip", 5.0, notation_round_trip},
      {8, "unit count and order match groups", 0, structure},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds >= cr.budget_seconds) {
      check.expect(false, "runtime " + std::to_string(seconds) + " s over budget");
    }
    bool ok = check.failures().empty();
    if (!ok) ++failed;
    std::printf("[%s] %d. %s (%zu checks, %zu failed, %.3f s)\n", ok ? "PASS" : "FAIL",
                cr.number, cr.name.c_str(), check.total(), check.failures().size(),
                seconds);
    std::size_t shown = 0;
    for (const auto& f : check.failures()) {
      if (++shown > 10) break;
      std::printf("       %s\n", f.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
