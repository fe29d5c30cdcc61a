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
 * Darotzy's mapping
 *
 *     h(x) = a x                        lambda = 0
 *     h(x) = (2^{lambda x} - 1)/gamma   lambda gamma > 0
 *
 * is a homomorphism from (R, +) to (R, x + y + gamma x y). Applied to an
 * entropy H whose conditional is a KN mean with generator phi, the pair
 * (h o H, phi o h^{-1}) follows the pseudo-extensive chain rule with
 * coefficient gamma, i.e. the q-extensive rule for q = 1 - gamma.
 */

#include "qentropy/conditional.hpp"
#include "qentropy/deformed.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/prob.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qentropy {

struct DarotzyParams
{
  double a      = 1.0;
  double lambda = 0.0;
  double gamma  = 0.0;

  /// a = 1, lambda = gamma: the map (2^{gamma x} - 1)/gamma.
  static DarotzyParams standard(double gamma)
  {
    return checked({1.0, gamma, gamma});
  }

  static DarotzyParams checked(DarotzyParams p)
  {
    p.validate();
    return p;
  }

  void validate() const
  {
    if (!std::isfinite(a) || !std::isfinite(lambda) || !std::isfinite(gamma))
    {
      fail(ErrorCode::InvalidParameters, "Darotzy parameters must be finite");
    }
    if (lambda == 0.0)
    {
      if (!(a > 0.0))
      {
        fail(ErrorCode::InvalidParameters, "linear Darotzy map needs a > 0");
      }
      if (gamma != 0.0)
      {
        fail(ErrorCode::InvalidParameters, "linear Darotzy map is additive only for gamma = 0");
      }
    }
    else if (!(lambda * gamma > 0.0))
    {
      fail(ErrorCode::InvalidParameters, "Darotzy map needs lambda * gamma > 0");
    }
  }
};

enum class Direction
{
  Forward,
  Inverse
};

inline double h_map(double x, DarotzyParams const &p, Direction dir = Direction::Forward)
{
  p.validate();
  using std::numbers::ln2;
  if (p.lambda == 0.0)
  {
    return dir == Direction::Forward ? p.a * x : x / p.a;
  }
  if (dir == Direction::Forward)
  {
    return std::expm1(p.lambda * x * ln2) / p.gamma;
  }
  if (!(1.0 + p.gamma * x > 0.0))
  {
    fail(ErrorCode::OutOfRange,
         "h inverse needs 1 + gamma y > 0, got y = " + std::to_string(x));
  }
  return std::log1p(p.gamma * x) / (p.lambda * ln2);
}

/// x (+)_gamma y = x + y + gamma x y
constexpr double pseudo_add(double x, double y, double gamma) noexcept
{
  return x + y + gamma * x * y;
}

/// An entropy and its conditional carried through h. Holds the base spec by
/// value; evaluations compose the base evaluator with h.
class DarotzyTransform
{
public:
  DarotzyTransform(EntropySpec base, DarotzyParams params)
    : base_(base)
    , params_(DarotzyParams::checked(params))
  {
    if (!has_conditional(base_.family))
    {
      fail(ErrorCode::InvalidParameters,
           "base family " + std::string(to_string(base_.family)) + " has no conditional entropy");
    }
  }

  EntropySpec const &base() const noexcept
  {
    return base_;
  }

  DarotzyParams const &params() const noexcept
  {
    return params_;
  }

  /// The chain-rule coefficient gamma; the rule is q-extensive for q = 1 - gamma.
  double coefficient() const noexcept
  {
    return params_.gamma;
  }

  double entropy(ProbVector const &p) const
  {
    return h_map(qentropy::entropy(base_, p), params_);
  }

  /// phi o h^{-1}, with phi the base conditional generator.
  KNFunction kn() const
  {
    KNFunction const    phi = conditional_kn(base_);
    DarotzyParams const p   = params_;
    Interval const      domain =
        p.lambda == 0.0 ? Interval{} : detail::cutoff_domain(p.gamma);
    return KNFunction(
        KnTag::Composed, [phi, p](double y) { return phi(h_map(y, p, Direction::Inverse)); },
        [phi, p](double z) { return h_map(phi.inverse(z), p); }, domain, base_.q, base_.r);
  }

  double conditional(JointTable const &j, Axis given) const
  {
    return conditional_by_kn(
        j, given, [this](ProbVector const &s) { return entropy(s); }, kn(),
        escort_order(base_));
  }

  /// H'(X,Y) - H'(G) - H'(O|G) - gamma H'(G) H'(O|G).
  double chain_residual(JointTable const &j, Axis given) const
  {
    double const hj = entropy(j.flatten());
    double const hg = entropy(marginal(j, given));
    double const hc = conditional(j, given);
    return hj - pseudo_add(hg, hc, params_.gamma);
  }

private:
  EntropySpec   base_;
  DarotzyParams params_;
};

inline DarotzyTransform transform(EntropySpec const &base, DarotzyParams const &params)
{
  return DarotzyTransform(base, params);
}

}  // namespace qentropy
