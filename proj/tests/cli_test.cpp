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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace anusaaraka {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "anusaaraka");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("anusaaraka-cli-" + std::to_string(::testing::UnitTest::GetInstance()
                                                     ->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kKanHin = testing::data_path("kan-hin.anu");
const std::string kTelHin = testing::data_path("tel-hin.anu");
const std::string kHinEng = testing::data_path("hin-eng.anu");
const std::string kGold = testing::data_path("gold.tsv");

TEST(Cli, ValidateBundled) {
  CliRun r = run({"validate", "--resources", kTelHin});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "injectivity: 0 collision(s)\n");
  r = run({"validate", "--resources", kHinEng, "--corpus", kGold});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("filters: 0 violation(s)"), std::string::npos);
}

TEST(Cli, ValidateSabotage) {
  CliRun r = run({"validate", "--resources", testing::fixture_path("tel-hin-sabotage.anu")});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("1 collision(s)"), std::string::npos);
  EXPECT_NE(r.out.find("vaHa"), std::string::npos);
}

TEST(Cli, ValidateFilterViolation) {
  TempDir dir;
  std::string corpus = dir.write("c.tsv", "[hin-eng]\napanA khAtA\t\t1:v\n");
  CliRun r = run({"validate", "--resources", kHinEng, "--corpus", corpus});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("1 violation(s)"), std::string::npos);
}

TEST(Cli, TransduceStdin) {
  CliRun r = run({"transduce", "--resources", kKanHin},
              "mohana nALe baruvanu eMdu rAma heLidanu .\n\n");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "mohana kala AyegA EsA rAma kahA .\n\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, TransduceFilesAndTrace) {
  TempDir dir;
  std::string in = dir.write("in.txt", "rAma apanA khAtA kholA.\r\n");
  std::string out = dir.path("out.txt");
  CliRun r = run({"transduce", "--resources", kHinEng, "--in", in, "--out", out, "--trace"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(out), "Ram his{refl.} ledger open.PFV{masc.} .\n");
  EXPECT_NE(r.err.find("flt: khAtA after:apanA keep:n"), std::string::npos);
}

TEST(Cli, TransduceThenInvertReproducesInput) {
  TempDir dir;
  std::string text =
      "rAma ne bEnka meM apanA khAtA kholA .\nchAvala  rAma khAtA hE.\nvaHa ghara gayA .\n";
  CliRun fwd = run({"transduce", "--resources", kHinEng}, text);
  ASSERT_EQ(fwd.code, kExitOk) << fwd.err;
  CliRun back = run({"invert", "--resources", kHinEng}, fwd.out);
  EXPECT_EQ(back.code, kExitOk) << back.err;
  EXPECT_EQ(back.out,
            "rAma ne bEnka meM apanA khAtA kholA .\nchAvala rAma khAtA hE .\n"
            "vaHa ghara gayA .\n");
}

TEST(Cli, InvertFailure) {
  CliRun r = run({"invert", "--resources", kHinEng}, "Ram\nzebra\n");
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_EQ(r.out, "rAma\n");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, TraceSubcommand) {
  CliRun r = run({"trace", "--resources", kTelHin}, "rAmuDu tinina camacA veVMDidi .\n");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "src: rAmuDu tinina camacA veVMDidi .\n"
            "grp: [rAmuDu] [tinina] [camacA] [veVMDidi] [.]\n"
            "ana: rAmuDu:n | tin:v+ina | camacA:n | veVMDidi:n | .\n"
            "out: rAma khAyA_[HE/tHA]_jo_*_vaHa- cammaca cAMdI_kA .\n");
}

TEST(Cli, RoundtripGoldAndRandom) {
  for (const auto& rs : {kKanHin, kTelHin, kHinEng}) {
    CliRun r = run({"roundtrip", "--resources", rs, "--corpus", kGold, "--random", "200",
                 "--seed", "5"});
    EXPECT_EQ(r.code, kExitOk) << rs << "\n" << r.err;
    EXPECT_NE(r.out.find(" ok"), std::string::npos);
  }
}

TEST(Cli, RoundtripVacuous) {
  CliRun r = run({"roundtrip", "--resources", kKanHin, "--corpus",
               testing::fixture_path("empty-corpus.tsv"), "--random", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "roundtrip: 0/0 ok\n");
}

TEST(Cli, RoundtripMismatch) {
  TempDir dir;
  std::string corpus = dir.write("c.tsv", "[kan-hin]\nrAma baruvanu .\trAma AyA .\n");
  CliRun r = run({"roundtrip", "--resources", kKanHin, "--corpus", corpus});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_EQ(r.out, "roundtrip: 0/1 ok\n");
  EXPECT_NE(r.err.find("output mismatch"), std::string::npos);
}

TEST(Cli, Gen) {
  CliRun a = run({"gen", "--resources", kTelHin, "--seed", "3", "--count", "4"});
  CliRun b = run({"gen", "--resources", kTelHin, "--seed", "3", "--count", "4"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({"transduce"}).code, kExitError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"gen", "--resources", kTelHin, "--seed", "1", "--count", "1",
                 "--max-len", "0"})
                .code,
            kExitError);
}

TEST(Cli, ResourceAndIoErrors) {
  TempDir dir;
  CliRun r = run({"validate", "--resources", dir.path("missing.anu")});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("resource error"), std::string::npos);

  std::string bad = dir.write("bad.anu", "[lexicon]\nrA-ma\tn\tRam\n");
  r = run({"transduce", "--resources", bad}, "rAma\n");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find(":2"), std::string::npos);

  r = run({"transduce", "--resources", kHinEng, "--in", dir.path("nope.txt")});
  EXPECT_EQ(r.code, kExitError);

  r = run({"roundtrip", "--resources", kHinEng, "--corpus", dir.path("nope.tsv")});
  EXPECT_EQ(r.code, kExitError);

  r = run({"transduce", "--resources", kHinEng}, "rAma_ne\n");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("input error"), std::string::npos);
}

TEST(Cli, EngineRefusesSabotage) {
  CliRun r = run({"transduce", "--resources", testing::fixture_path("tel-hin-sabotage.anu")},
              "A\n");
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_EQ(r.out, "");
}

}  // namespace
}  // namespace anusaaraka
