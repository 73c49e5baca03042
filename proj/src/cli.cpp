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

#include "anusaaraka/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "anusaaraka/corpus.hpp"
#include "anusaaraka/pipeline.hpp"
#include "anusaaraka/resources.hpp"
#include "anusaaraka/validation.hpp"

namespace anusaaraka {

namespace {

struct Options {
  std::string resources;
  std::string in_path;
  std::string out_path;
  std::string corpus;
  bool trace = false;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t max_len = 12;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs `fn` on each input line and writes one output line per input line.
int for_each_line(const Options& opt, std::istream& in, std::ostream& out,
                  std::ostream& err,
                  const std::function<std::string(const std::string&)>& fn) {
  std::ifstream in_file;
  std::ofstream out_file;
  std::istream* src = &in;
  std::ostream* dst = &out;
  if (!opt.in_path.empty()) {
    in_file.open(opt.in_path, std::ios::binary);
    if (!in_file) throw IoError("cannot read " + opt.in_path);
    src = &in_file;
  }
  if (!opt.out_path.empty()) {
    out_file.open(opt.out_path, std::ios::binary);
    if (!out_file) throw IoError("cannot write " + opt.out_path);
    dst = &out_file;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*src, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      *dst << fn(line) << '\n' << std::flush;
    } catch (const InversionError& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      return kExitFailed;
    }
  }
  if (!*dst) throw IoError("write failed");
  return kExitOk;
}

int run_validate(const Options& opt, const ResourceSet& rs, std::ostream& out) {
  InjectivityReport injectivity = validate_injectivity(rs);
  bool ok = injectivity.ok();
  out << "injectivity: " << injectivity.collisions.size() << " collision(s)\n"
      << injectivity.to_string();
  if (!opt.corpus.empty()) {
    FilterReport filters = validate_filters(rs, load_corpus(opt.corpus));
    ok = ok && filters.ok();
    out << "filters: " << filters.violations.size() << " violation(s)\n"
        << filters.to_string();
  }
  return ok ? kExitOk : kExitFailed;
}

int run_roundtrip(const Options& opt, const Engine& engine, std::ostream& out,
                  std::ostream& err) {
  std::size_t total = 0;
  std::size_t failed = 0;
  auto check = [&](const std::string& source, const std::string* expected,
                   const std::string& where) {
    ++total;
    std::string output = engine.transduce(source).output;
    if (expected != nullptr && !expected->empty() && output != *expected) {
      ++failed;
      err << where << ": output mismatch\n  expected: " << *expected
          << "\n  actual:   " << output << '\n';
      return;
    }
    std::string back;
    try {
      back = engine.invert(output);
    } catch (const InversionError& e) {
      ++failed;
      err << where << ": " << e.what() << '\n';
      return;
    }
    std::string canonical = canonical_spacing(source);
    if (back != canonical) {
      ++failed;
      err << where << ": round trip mismatch\n  source:   " << canonical
          << "\n  inverted: " << back << '\n';
    }
  };

  GoldCorpus corpus = load_corpus(opt.corpus);
  for (const auto& entry : corpus.for_pair(engine.resources().pair_id())) {
    check(entry.source, &entry.expected_output,
          opt.corpus + ":" + std::to_string(entry.line));
  }
  for (std::size_t i = 0; i < opt.random; ++i) {
    std::uint64_t seed = opt.seed + i;
    check(generate_sentence(engine.resources(), seed, opt.max_len), nullptr,
          "seed " + std::to_string(seed));
  }
  out << "roundtrip: " << (total - failed) << "/" << total << " ok\n";
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Information-preserving text transduction between language pairs"};
  app.require_subcommand(1);
  Options opt;

  auto add_resources = [&opt](CLI::App* sub) {
    sub->add_option("--resources", opt.resources, "Resource file (*.anu)")->required();
  };
  auto add_streams = [&opt](CLI::App* sub) {
    sub->add_option("--in", opt.in_path, "Input file (default: stdin)");
    sub->add_option("--out", opt.out_path, "Output file (default: stdout)");
  };

  CLI::App* transduce = app.add_subcommand("transduce", "Transduce text line by line");
  add_resources(transduce);
  add_streams(transduce);
  transduce->add_flag("--trace", opt.trace, "Write interlinear traces to stderr");

  CLI::App* invert = app.add_subcommand("invert", "Recover source text from output");
  add_resources(invert);
  add_streams(invert);

  CLI::App* validate = app.add_subcommand("validate", "Check injectivity and filters");
  add_resources(validate);
  validate->add_option("--corpus", opt.corpus, "Gold corpus for filter validation");

  CLI::App* trace = app.add_subcommand("trace", "Interlinear trace per line");
  add_resources(trace);
  add_streams(trace);

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "Check invert(transduce(s)) = s");
  add_resources(roundtrip);
  roundtrip->add_option("--corpus", opt.corpus, "Gold corpus")->required();
  roundtrip->add_option("--random", opt.random, "Number of generated sentences");
  roundtrip->add_option("--seed", opt.seed, "First generator seed");
  roundtrip->add_option("--max-len", opt.max_len, "Maximum groups per sentence")
      ->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("gen", "Generate random sentences");
  add_resources(gen);
  gen->add_option("--seed", opt.seed, "First seed")->required();
  gen->add_option("--count", opt.count, "Number of sentences")->required();
  gen->add_option("--max-len", opt.max_len, "Maximum groups per sentence")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    ResourceSet rs = load_resources(opt.resources);

    if (*validate) return run_validate(opt, rs, out);

    if (*gen) {
      for (std::size_t i = 0; i < opt.count; ++i) {
        out << generate_sentence(rs, opt.seed + i, opt.max_len) << '\n';
      }
      return kExitOk;
    }

    std::optional<Engine> engine;
    try {
      engine.emplace(std::move(rs));
    } catch (const InjectivityError& e) {
      err << e.what();
      return kExitFailed;
    }

    if (*transduce) {
      return for_each_line(opt, in, out, err, [&](const std::string& line) {
        Transduction t = engine->transduce(line);
        if (opt.trace) err << t.trace.to_interlinear() << '\n';
        return t.output;
      });
    }
    if (*invert) {
      return for_each_line(opt, in, out, err,
                           [&](const std::string& line) { return engine->invert(line); });
    }
    if (*trace) {
      return for_each_line(opt, in, out, err, [&](const std::string& line) {
        std::string text = engine->transduce(line).trace.to_interlinear();
        text.pop_back();  // for_each_line adds the newline
        return text;
      });
    }
    if (*roundtrip) return run_roundtrip(opt, *engine, out, err);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitError;
  } catch (const CorpusError& e) {
    err << "corpus error: " << e.what() << '\n';
    return kExitError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace anusaaraka
