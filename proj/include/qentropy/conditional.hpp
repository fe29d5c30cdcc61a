#pragma once
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

/*
 * Conditional entropies H(other | given), built in two steps:
 *
 *   1. entropy of every slice p(. | given = y) with nonzero mass
 *   2. aggregation over y
 *
 *        shannon    arithmetic mean under p(y)
 *        tsallis    arithmetic mean under rho_q(y)
 *        renyi      KN mean, phi = 2^{(1-q)x},  weights rho_q(y)
 *        fd, sm     KN mean, their generators,  weights rho_r(y)
 *        ja         renyi-generator KN mean of the slice ja_inner values
 *                   under rho_q(y), mapped back through the JA formula
 *
 * The ja conditional is not an axiomatic one. It exists to show that JA
 * breaks the q-extensive chain rule on correlated joints.
 */

#include "qentropy/deformed.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/prob.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qentropy {

/// Slices of a joint with nonzero conditioning mass, plus that mass.
struct SliceSet
{
  std::vector<ProbVector> slices;
  ProbVector              mass;  ///< marginal of the conditioning axis over non-null events
};

inline SliceSet non_null_slices(JointTable const &j, Axis given)
{
  ProbVector const    m = marginal(j, given);
  std::vector<double> kept_mass;
  SliceSet            out{{}, ProbVector::uniform(1)};
  for (std::size_t i = 0; i < m.size(); ++i)
  {
    if (m[i] > 0.0)
    {
      out.slices.push_back(conditional_slice(j, given, i));
      kept_mass.push_back(m[i]);
    }
  }
  out.mass = ProbVector::normalize(kept_mass);
  return out;
}

/// phi^{-1}( sum_y rho_order(y) phi(slice_entropy(p(.|y))) ).
template <typename SliceEntropy>
double conditional_by_kn(JointTable const &j, Axis given, SliceEntropy &&slice_entropy,
                         KNFunction const &kn, double order)
{
  SliceSet const      set = non_null_slices(j, given);
  std::vector<double> values;
  values.reserve(set.slices.size());
  for (auto const &s : set.slices)
  {
    values.push_back(slice_entropy(s));
  }
  return kn_mean(values, escort(set.mass, order), kn);
}

inline bool has_conditional(Family f) noexcept
{
  switch (f)
  {
  case Family::Shannon:
  case Family::Renyi:
  case Family::Tsallis:
  case Family::FrankDaffertshofer:
  case Family::SharmaMittal:
  case Family::Ja:
    return true;
  default:
    return false;
  }
}

/// The generator the family aggregates its slices with.
inline KNFunction conditional_kn(EntropySpec const &spec)
{
  switch (spec.family)
  {
  case Family::Renyi:
    return make_renyi_kn(spec.q);
  case Family::FrankDaffertshofer:
    return make_fd_kn(spec.q, spec.r);
  case Family::SharmaMittal:
    return make_sm_kn(spec.q, spec.r);
  default:
    return make_linear_kn();
  }
}

/// H(other | given) for the family.
inline double conditional(EntropySpec const &spec, JointTable const &j, Axis given)
{
  if (!has_conditional(spec.family))
  {
    fail(ErrorCode::InvalidParameters,
         "no conditional entropy is defined for " + std::string(to_string(spec.family)));
  }

  if (spec.family == Family::Ja)
  {
    double const q     = spec.q;
    double const inner = conditional_by_kn(
        j, given, [q](ProbVector const &s) { return ja_inner(s, q); }, make_renyi_kn(q), q);
    if (near_one(q))
    {
      return std::numbers::ln2 * inner;
    }
    return std::expm1((1.0 - q) * std::numbers::ln2 * inner) / (1.0 - q);
  }

  return conditional_by_kn(
      j, given, [&spec](ProbVector const &s) { return entropy(spec, s); }, conditional_kn(spec),
      escort_order(spec));
}

/// (1/(1-q)) log2( sum p^q(x,y) / sum p^q(given) ), the closed form of the
/// Renyi KN construction.
inline double renyi_conditional_closed(JointTable const &j, double q, Axis given)
{
  if (!std::isfinite(q) || near_one(q))
  {
    fail(ErrorCode::InvalidParameters, "closed-form Renyi conditional needs q != 1");
  }
  double joint_sum = 0.0;
  for (double c : j.cells())
  {
    if (c > 0.0)
    {
      joint_sum += std::pow(c, q);
    }
  }
  ProbVector const m_given   = marginal(j, given);
  double           given_sum = 0.0;
  for (double m : m_given.weights())
  {
    if (m > 0.0)
    {
      given_sum += std::pow(m, q);
    }
  }
  if (!(joint_sum > 0.0) || !(given_sum > 0.0))
  {
    fail(ErrorCode::InvalidParameters, "power sums must be positive");
  }
  return std::log2(joint_sum / given_sum) / (1.0 - q);
}

}  // namespace qentropy
