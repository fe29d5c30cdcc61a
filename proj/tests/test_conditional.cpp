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

#include "oracles.hpp"
#include "qentropy/conditional.hpp"
#include "qentropy/sampling.hpp"

#include <gtest/gtest.h>

using namespace qentropy;

namespace {

JointTable const kSym  = JointTable::from_rows({{0.4, 0.1}, {0.1, 0.4}});
JointTable const kAsym = JointTable::from_rows({{0.6, 0.2}, {0.1, 0.1}});

std::vector<EntropySpec> conditional_specs()
{
  std::vector<EntropySpec> s{EntropySpec::shannon()};
  for (double q : {0.5, 2.0})
  {
    s.push_back(EntropySpec::renyi(q));
    s.push_back(EntropySpec::tsallis(q));
    s.push_back(EntropySpec::ja(q));
    for (double r : {0.5, 2.0})
    {
      s.push_back(EntropySpec::frank_daffertshofer(q, r));
      s.push_back(EntropySpec::sharma_mittal(q, r));
    }
  }
  return s;
}

}  // namespace

TEST(Conditional, ShannonHandValue)
{
  EXPECT_NEAR(conditional(EntropySpec::shannon(), kSym, Axis::Y), 0.7219280948873623, 1e-15);
}

TEST(Conditional, FrozenOracleValues)
{
  EXPECT_NEAR(conditional(EntropySpec::shannon(), kAsym, Axis::Y), 0.68965969522397602077, 1e-15);
  EXPECT_NEAR(conditional(EntropySpec::renyi(2.0), kAsym, Axis::Y), 0.46566357234881183182, 1e-14);
  EXPECT_NEAR(conditional(EntropySpec::tsallis(2.0), kAsym, Axis::Y), 0.27586206896551724138, 1e-15);
}

TEST(Conditional, RenyiClosedFormDiagonal)
{
  auto const d = JointTable::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  EXPECT_NEAR(renyi_conditional_closed(d, 2.0, Axis::Y), 0.0, 1e-15);
  EXPECT_THROW(renyi_conditional_closed(d, 1.0, Axis::Y), Error);
}

TEST(Conditional, UndefinedFamiliesRejected)
{
  EXPECT_THROW(conditional(EntropySpec::landsberg(2.0), kSym, Axis::Y), Error);
  EXPECT_THROW(conditional(EntropySpec::behara_chawla(2.0), kSym, Axis::Y), Error);
}

TEST(Conditional, NullColumnsSkipped)
{
  auto const j = JointTable::from_rows({{0.3, 0.0, 0.2}, {0.1, 0.0, 0.4}});
  auto const s = EntropySpec::shannon();
  auto const k = JointTable::from_rows({{0.3, 0.2}, {0.1, 0.4}});
  EXPECT_NEAR(conditional(s, j, Axis::Y), conditional(s, k, Axis::Y), 1e-15);
}

// ---------------------------------------------------------------------------
// invariants

TEST(ConditionalInvariants, RenyiClosedFormMatchesConstruction)
{
  Rng rng(41);
  for (double q : {0.5, 2.0, 3.0})
  {
    for (int t = 0; t < 1000; ++t)
    {
      auto const j     = oracle::random_joint(rng, 8);
      Axis const given = t % 2 ? Axis::X : Axis::Y;
      ASSERT_NEAR(conditional(EntropySpec::renyi(q), j, given), renyi_conditional_closed(j, q, given),
                  1e-10);
    }
  }
}

TEST(ConditionalInvariants, DeterminedIsZero)
{
  // each Y value pins X
  auto const j = JointTable::from_rows({{0.2, 0.0, 0.3}, {0.0, 0.5, 0.0}});
  auto const d = JointTable::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  for (auto const &s : conditional_specs())
  {
    EXPECT_NEAR(conditional(s, j, Axis::Y), 0.0, 1e-12) << describe(s);
    EXPECT_NEAR(conditional(s, d, Axis::Y), 0.0, 1e-12) << describe(s);
  }
}

TEST(ConditionalInvariants, ProductReducesToMarginal)
{
  Rng rng(42);
  for (auto const &s : conditional_specs())
  {
    for (int t = 0; t < 200; ++t)
    {
      auto const px = oracle::random_simplex(rng, 6);
      auto const py = oracle::random_simplex(rng, 6);
      auto const j  = product_join(px, py);
      ASSERT_NEAR(conditional(s, j, Axis::Y), entropy(s, px), 1e-10) << describe(s);
      ASSERT_NEAR(conditional(s, j, Axis::X), entropy(s, py), 1e-10) << describe(s);
    }
  }
}

TEST(ConditionalInvariants, ShannonConditioningReduces)
{
  Rng rng(43);
  for (int t = 0; t < 1000; ++t)
  {
    auto const j = oracle::random_joint(rng, 8);
    ASSERT_LE(conditional(EntropySpec::shannon(), j, Axis::Y),
              entropy(EntropySpec::shannon(), marginal(j, Axis::X)) + 1e-12);
  }
}

TEST(ConditionalInvariants, ShannonBayesRule)
{
  Rng        rng(44);
  auto const s = EntropySpec::shannon();
  for (int t = 0; t < 1000; ++t)
  {
    auto const   j = oracle::random_joint(rng, 8);
    double const r = conditional(s, j, Axis::X) - conditional(s, j, Axis::Y) +
                     entropy(s, marginal(j, Axis::X)) - entropy(s, marginal(j, Axis::Y));
    ASSERT_NEAR(r, 0.0, 1e-10);
  }
}

TEST(ConditionalInvariants, ShannonMatchesLongDoubleOracle)
{
  Rng rng(45);
  for (int t = 0; t < 500; ++t)
  {
    auto const j = oracle::random_joint(rng, 8);
    ASSERT_NEAR(conditional(EntropySpec::shannon(), j, Axis::Y),
                static_cast<double>(oracle::shannon_conditional_given_y(j)), 1e-13);
  }
}
