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

#include "anusaaraka/inverter.hpp"

#include <gtest/gtest.h>

#include "anusaaraka/validation.hpp"
#include "test_util.hpp"

namespace anusaaraka {
namespace {

using Words = std::vector<std::string>;

TEST(ReverseIndexBuild, PronounEntry) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("tel-hin"));
  EXPECT_EQ(idx.lookup("vaHa{masculine,singular}`"), Words{"vADu"});
  EXPECT_EQ(idx.entries().at("vaHa{masculine,singular}`"), Words{"vADu"});
  EXPECT_EQ(idx.lookup("vaHa-"), Words{"A"});
  EXPECT_EQ(idx.lookup("khAyA_[HE/tHA]_jo_*_vaHa-"), Words{"tinina"});
}

TEST(ReverseIndexBuild, FunctionWord) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("kan-hin"));
  EXPECT_EQ(idx.lookup("EsA"), Words{"eMdu"});
  EXPECT_EQ(idx.entries().at("EsA"), Words{"eMdu"});
}

TEST(ReverseIndexBuild, GroupUnits) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("kan-hin"));
  EXPECT_EQ(idx.entries().at("Gara_aMdara"), (Words{"mane", "oLage"}));
  EXPECT_EQ(idx.lookup("Gara_aMdara_HE"), (Words{"mane", "oLage", "ide"}));
}

TEST(ReverseIndexBuild, EmptyResourceSet) {
  ReverseIndex idx = build_reverse_index(parse_resources("[lexicon]\n", "p"));
  EXPECT_TRUE(idx.empty());
  EXPECT_TRUE(idx.entries().empty());
  EXPECT_EQ(idx.lookup("vaHa"), std::nullopt);
}

TEST(ReverseIndexBuild, RefusesCollidingSet) {
  ResourceSet rs = load_resources(testing::fixture_path("tel-hin-sabotage.anu"));
  try {
    build_reverse_index(rs);
    FAIL() << "expected InjectivityError";
  } catch (const InjectivityError& e) {
    ASSERT_EQ(e.report().collisions.size(), 1u);
    EXPECT_NE(std::string(e.what()).find("vaHa"), std::string::npos);
  }
}

TEST(ReverseIndexBuild, AgreesWithEnumeration) {
  for (const char* pair : {"kan-hin", "tel-hin", "hin-eng"}) {
    ResourceSet rs = testing::load_bundled(pair);
    ReverseIndex idx = build_reverse_index(rs);
    for (const auto& item : enumerate_renderings(rs).heads) {
      EXPECT_EQ(idx.lookup(item.rendered), item.source) << pair << " " << item.rendered;
    }
    for (const auto& [rendered, source] : idx.entries()) {
      EXPECT_EQ(idx.lookup(rendered), source) << pair << " " << rendered;
    }
  }
}

TEST(InvertText, KannadaSentence) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("kan-hin"));
  EXPECT_EQ(invert_text("mohana kala AyegA EsA rAma kahA .", idx),
            "mohana nALe baruvanu eMdu rAma heLidanu .");
}

TEST(InvertText, Empty) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("kan-hin"));
  EXPECT_EQ(invert_text("", idx), "");
  EXPECT_EQ(invert_text("   ", idx), "");
}

TEST(InvertText, AlternativesShareSource) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("hin-eng"));
  EXPECT_EQ(invert_text("eats/ledger", idx), "khAtA");
  EXPECT_EQ(invert_text("ledger", idx), "khAtA");
  EXPECT_EQ(invert_text("eats_is/ledger_is", idx), "khAtA HE");
}

TEST(InvertText, UnknownsAndPunctuation) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("hin-eng"));
  EXPECT_EQ(invert_text("Ram hE# ?!", idx), "rAma hE ? !");
  EXPECT_EQ(invert_text("Ram  ,\tbread", idx), "rAma , roTI");
  EXPECT_THROW(invert_text("xy_is", idx), InversionError);
}

TEST(InvertText, Errors) {
  ReverseIndex idx = build_reverse_index(testing::load_bundled("hin-eng"));
  EXPECT_THROW(invert_text("Ram zebra", idx), InversionError);
  EXPECT_THROW(invert_text("eats/bread", idx), InversionError);
  EXPECT_THROW(invert_text("a//b", idx), InversionError);
  try {
    invert_text("Ram zebra", idx);
  } catch (const InversionError& e) {
    EXPECT_NE(std::string(e.what()).find("zebra"), std::string::npos);
  }
}

TEST(InvertText, UnknownGroupWordInChain) {
  ResourceSet rs = parse_resources("[lexicon]\nrAma\tn\tRam\n[group]\npostp\tne\n", "p");
  ReverseIndex idx = build_reverse_index(rs);
  EXPECT_EQ(invert_text("Ram_ne#", idx), "rAma ne");
  EXPECT_THROW(invert_text("Ram_zz#", idx), InversionError);
}

TEST(InvertText, AmbiguousSegmentationIsReported) {
  // Single attachments are all distinct, but "x_y_z" reads as a+p and as
  // a+q+r once two attachments chain.
  ResourceSet rs = parse_resources(
      "[lexicon]\na\tn\tx\n"
      "[suffix]\np\tadj\tl\ty_z\n"
      "[function]\nq\ty\t0\t0\nr\tz\t0\t0\n"
      "[group]\npostp\tp\npostp\tq\npostp\tr\n",
      "p");
  InjectivityReport report = validate_injectivity(rs);
  if (!report.ok()) GTEST_SKIP() << "caught statically:\n" << report.to_string();
  ReverseIndex idx = build_reverse_index(rs);
  EXPECT_THROW(idx.lookup("x_y_z"), InversionError);
}

}  // namespace
}  // namespace anusaaraka
