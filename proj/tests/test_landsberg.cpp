//------------------------------------------------------------------------------
//
//   Copyright 2026 The qentropy Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "qentropy/landsberg.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qentropy;

namespace {

SamplerConfig cfg_with_seed(std::uint64_t seed)
{
  SamplerConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Landsberg, RegressionLabels)
{
  auto const cfg = cfg_with_seed(20260101);
  EXPECT_EQ(classify(EntropySpec::shannon(), cfg).class_label, "SHC");
  EXPECT_EQ(classify(EntropySpec::tsallis(2.0), cfg).class_label, "~S~HC");
  EXPECT_EQ(classify(EntropySpec::tsallis(0.5), cfg).class_label, "S~HC");
}

TEST(Landsberg, LabelsStableAcrossSeeds)
{
  for (std::uint64_t seed : {1u, 2u, 3u})
  {
    auto const cfg = cfg_with_seed(seed);
    EXPECT_EQ(classify(EntropySpec::shannon(), cfg).class_label, "SHC");
    EXPECT_EQ(classify(EntropySpec::tsallis(2.0), cfg).class_label, "~S~HC");
    EXPECT_EQ(classify(EntropySpec::tsallis(0.5), cfg).class_label, "S~HC");
  }
}

TEST(Landsberg, ShannonHoldsOnAllSamples)
{
  auto const v = classify(EntropySpec::shannon(), cfg_with_seed(5));
  EXPECT_EQ(v.samples_used, 3000u);
  EXPECT_FALSE(v.impossible);
  EXPECT_FALSE(v.concave.counterexample.has_value());
}

TEST(Landsberg, JaBelowOneKeepsSuperadditivity)
{
  auto const v = classify(EntropySpec::ja(0.5), cfg_with_seed(20260101));
  EXPECT_TRUE(v.superadditive.holds);
  EXPECT_FALSE(v.homogeneous.holds);
  // concavity is where sampling disagrees with the expected S~HC
  EXPECT_FALSE(v.concave.holds);
  EXPECT_EQ(v.class_label, "S~H~C");
}

TEST(Landsberg, ZeroTrialsIsVacuous)
{
  SamplerConfig cfg;
  cfg.trials   = 0;
  auto const v = classify(EntropySpec::tsallis(2.0), cfg);
  EXPECT_EQ(v.class_label, "SHC");
  EXPECT_EQ(v.samples_used, 0u);
}

TEST(Landsberg, CorrelatedShannonStaysSubadditive)
{
  SamplerConfig cfg = cfg_with_seed(9);
  cfg.composition   = Composition::Correlated;
  auto const v      = classify(EntropySpec::shannon(), cfg);
  EXPECT_FALSE(v.superadditive.holds);
  EXPECT_EQ(v.class_label, "~SHC");
  EXPECT_TRUE(v.impossible);
}

TEST(Landsberg, ImpossibleLabels)
{
  EXPECT_TRUE(is_impossible_label("SH~C"));
  EXPECT_TRUE(is_impossible_label("~SHC"));
  EXPECT_FALSE(is_impossible_label("SHC"));
  EXPECT_FALSE(is_impossible_label("~S~H~C"));
}

TEST(Landsberg, BadDimensionsRejected)
{
  SamplerConfig cfg;
  cfg.min_dim = 4;
  cfg.max_dim = 3;
  EXPECT_THROW(probe_property(EntropySpec::shannon(), Property::Concavity, cfg), Error);
}

// ---------------------------------------------------------------------------
// invariants

TEST(LandsbergInvariants, Reproducible)
{
  for (auto const &s : {EntropySpec::tsallis(2.0), EntropySpec::ja(0.5), EntropySpec::renyi(2.0)})
  {
    auto const a = classify(s, cfg_with_seed(77));
    auto const b = classify(s, cfg_with_seed(77));
    EXPECT_EQ(a.class_label, b.class_label);
    for (auto [pa, pb] : {std::pair{&a.superadditive, &b.superadditive},
                          std::pair{&a.homogeneous, &b.homogeneous}, std::pair{&a.concave, &b.concave}})
    {
      ASSERT_EQ(pa->counterexample.has_value(), pb->counterexample.has_value());
      EXPECT_EQ(pa->samples_used, pb->samples_used);
      if (pa->counterexample)
      {
        EXPECT_EQ(pa->counterexample->inputs, pb->counterexample->inputs);
        EXPECT_EQ(pa->counterexample->mix, pb->counterexample->mix);
        EXPECT_EQ(pa->counterexample->gap, pb->counterexample->gap);
      }
    }
  }
}

TEST(LandsbergInvariants, CounterexamplesReevaluate)
{
  std::vector<EntropySpec> specs;
  for (double q : {0.5, 2.0})
  {
    specs.push_back(EntropySpec::tsallis(q));
    specs.push_back(EntropySpec::landsberg(q));
    specs.push_back(EntropySpec::ja(q));
    specs.push_back(EntropySpec::renyi(q));
  }
  for (auto comp : {Composition::Independent, Composition::Correlated})
  {
    SamplerConfig cfg = cfg_with_seed(31);
    cfg.composition   = comp;
    for (auto const &s : specs)
    {
      auto const v = classify(s, cfg);
      for (auto const *pv : {&v.superadditive, &v.homogeneous, &v.concave})
      {
        if (!pv->counterexample)
        {
          continue;
        }
        auto const again = reevaluate(s, pv->property, comp, *pv->counterexample);
        EXPECT_GT(again.gap, 1e-9) << describe(s) << " " << to_string(pv->property);
        EXPECT_EQ(again.gap, pv->counterexample->gap);
      }
    }
  }
}

TEST(LandsbergInvariants, NoImpossibleLabelsForNamedFamilies)
{
  std::vector<EntropySpec> specs{EntropySpec::shannon(), EntropySpec::renyi(0.5),
                                 EntropySpec::behara_chawla(0.5), EntropySpec::behara_chawla(2.0)};
  for (double q : {0.5, 2.0})
  {
    specs.push_back(EntropySpec::tsallis(q));
    specs.push_back(EntropySpec::landsberg(q));
    specs.push_back(EntropySpec::ja(q));
    for (double r : {0.5, 2.0})
    {
      specs.push_back(EntropySpec::sharma_mittal(q, r));
      specs.push_back(EntropySpec::frank_daffertshofer(q, r));
    }
  }
  for (auto const &s : specs)
  {
    auto const v = classify(s, cfg_with_seed(20260101));
    EXPECT_FALSE(v.impossible) << describe(s) << " -> " << v.class_label;
  }
}

TEST(LandsbergInvariants, RenyiTwoIsAdditiveButNotConcave)
{
  // renyi(2) is additive on products and so S and H hold with equality; it
  // is not concave on three or more outcomes
  auto const v = classify(EntropySpec::renyi(2.0), cfg_with_seed(20260101));
  EXPECT_EQ(v.class_label, "SH~C");
  EXPECT_TRUE(v.impossible);
  ASSERT_TRUE(v.concave.counterexample.has_value());
  EXPECT_NEAR(v.concave.counterexample->gap, 1.198762780200413705e-5, 1e-12);
}
