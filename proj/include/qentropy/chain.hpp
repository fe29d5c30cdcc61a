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
 * Residuals (LHS - RHS) of composition rules. A residual of zero within
 * tolerance certifies the rule on that input.
 *
 * Joint entropies are the family entropy of the flattened joint.
 */

#include "qentropy/conditional.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/prob.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qentropy {

enum class RuleKind
{
  Additive,
  TsallisAdd,
  LandsbergAdd,
  DeltaAdd,
  AdditiveChain,
  QExtensiveChain
};

constexpr std::string_view to_string(RuleKind k) noexcept
{
  switch (k)
  {
  case RuleKind::Additive:
    return "additive";
  case RuleKind::TsallisAdd:
    return "tsallis_add";
  case RuleKind::LandsbergAdd:
    return "landsberg_add";
  case RuleKind::DeltaAdd:
    return "delta_add";
  case RuleKind::AdditiveChain:
    return "additive_chain";
  case RuleKind::QExtensiveChain:
    return "q_extensive_chain";
  }
  return "unknown";
}

struct RuleSpec
{
  RuleKind kind  = RuleKind::Additive;
  double   param = 1.0;  ///< q for the deformed rules, delta for delta_add

  static RuleSpec additive()
  {
    return {RuleKind::Additive, 1.0};
  }
  static RuleSpec tsallis_add(double q)
  {
    return checked({RuleKind::TsallisAdd, q});
  }
  static RuleSpec landsberg_add(double q)
  {
    return checked({RuleKind::LandsbergAdd, q});
  }
  static RuleSpec delta_add(double delta)
  {
    if (!(delta > 0.0) || !std::isfinite(delta))
    {
      fail(ErrorCode::InvalidParameters, "delta_add needs delta > 0");
    }
    return {RuleKind::DeltaAdd, delta};
  }
  static RuleSpec additive_chain()
  {
    return {RuleKind::AdditiveChain, 1.0};
  }
  static RuleSpec q_extensive_chain(double q)
  {
    return checked({RuleKind::QExtensiveChain, q});
  }

  bool is_chain() const noexcept
  {
    return kind == RuleKind::AdditiveChain || kind == RuleKind::QExtensiveChain;
  }

private:
  static RuleSpec checked(RuleSpec r)
  {
    if (!std::isfinite(r.param))
    {
      fail(ErrorCode::InvalidParameters, "rule parameter must be finite");
    }
    return r;
  }
};

/// One verified identity, for JSON-lines reports.
struct ResidualRecord
{
  std::string rule;
  std::string family;
  EntropySpec spec;
  double      rule_param = 0.0;
  std::string input_digest;
  double      residual = 0.0;
};

// ---------------------------------------------------------------------------

/// Residual of an additivity rule on the independent pair (px, py).
inline double pseudo_add_residual(EntropySpec const &spec, ProbVector const &px,
                                  ProbVector const &py, RuleSpec const &rule)
{
  double const hxy = entropy(spec, product_join(px, py).flatten());
  double const hx  = entropy(spec, px);
  double const hy  = entropy(spec, py);

  switch (rule.kind)
  {
  case RuleKind::Additive:
    return hxy - hx - hy;
  case RuleKind::TsallisAdd:
    return hxy - hx - hy - (1.0 - rule.param) * hx * hy;
  case RuleKind::LandsbergAdd:
    return hxy - hx - hy - (rule.param - 1.0) * hx * hy;
  case RuleKind::DeltaAdd: {
    if (hxy < 0.0 || hx < 0.0 || hy < 0.0)
    {
      fail(ErrorCode::NegativeEntropyForDeltaRule,
           "delta additivity needs nonnegative entropies");
    }
    double const e = 1.0 / rule.param;
    return std::pow(hxy, e) - std::pow(hx, e) - std::pow(hy, e);
  }
  default:
    fail(ErrorCode::InvalidParameters,
         std::string(to_string(rule.kind)) + " is a chain rule, not an additivity rule");
  }
}

/// H(X,Y) - H(G) - H(O|G) [- (1-q) H(G) H(O|G)], where G is the `given`
/// variable and O the other one.
inline double chain_residual(EntropySpec const &spec, JointTable const &j, RuleSpec const &rule,
                             Axis given)
{
  if (!rule.is_chain())
  {
    fail(ErrorCode::InvalidParameters,
         std::string(to_string(rule.kind)) + " is an additivity rule, not a chain rule");
  }
  double const hj = entropy(spec, j.flatten());
  double const hg = entropy(spec, marginal(j, given));
  double const hc = conditional(spec, j, given);
  double const c  = rule.kind == RuleKind::QExtensiveChain ? 1.0 - rule.param : 0.0;
  return hj - hg - hc - c * hg * hc;
}

/// The q-extensive chain rule in product form: (prod (1 + (1-q) H_i) - 1)/(1-q).
inline double q_extensive_compose(std::span<double const> terms, double q)
{
  if (near_one(q))
  {
    double s = 0.0;
    for (double h : terms)
    {
      s += h;
    }
    return s;
  }
  double const k    = 1.0 - q;
  double       prod = 1.0;
  for (double h : terms)
  {
    prod *= 1.0 + k * h;
  }
  return (prod - 1.0) / k;
}

/// The same rule written as sum_{m=1}^{n} (1-q)^{m-1} e_m(H), with e_m the
/// sum over all m-element subsets. Exponential in n; meant for checks.
inline double q_extensive_expanded(std::span<double const> terms, double q)
{
  std::size_t const n = terms.size();
  if (n > 20)
  {
    fail(ErrorCode::InvalidParameters, "expanded form limited to 20 terms");
  }
  double const k     = 1.0 - q;
  double       total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
  {
    double prod  = 1.0;
    int    count = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
      if (mask & (1u << i))
      {
        prod *= terms[i];
        ++count;
      }
    }
    total += std::pow(k, count - 1) * prod;
  }
  return total;
}

/// H(X_1|) , H(X_2|X_1), ..., H(X_n|X_{n-1},...,X_1). Each conditional
/// aggregates over the joint history X_1..X_{i-1}.
inline std::vector<double> chain_terms(EntropySpec const &spec, JointTensor const &j)
{
  if (j.rank() < 2)
  {
    fail(ErrorCode::InvalidParameters, "chain expansion needs at least two variables");
  }
  std::vector<double> terms;
  terms.push_back(entropy(spec, j.leading_marginal(1).flatten()));
  for (std::size_t i = 1; i < j.rank(); ++i)
  {
    terms.push_back(conditional(spec, j.history_table(i), Axis::Y));
  }
  return terms;
}

/// H(X_1..X_n) minus the q-extensive composition of the chain terms.
inline double n_chain_residual(EntropySpec const &spec, JointTensor const &j, double q)
{
  std::vector<double> const terms = chain_terms(spec, j);
  return entropy(spec, j.flatten()) - q_extensive_compose(terms, q);
}

/// Phi(X) H(Y|X) - H(Y) + H(X) - Phi(Y) H(X|Y), Phi(Z) = 1 + (1-q) H(Z).
inline double bayes_residual(EntropySpec const &spec, JointTable const &j, double q)
{
  double const hx    = entropy(spec, marginal(j, Axis::X));
  double const hy    = entropy(spec, marginal(j, Axis::Y));
  double const hy_x  = conditional(spec, j, Axis::X);
  double const hx_y  = conditional(spec, j, Axis::Y);
  double const k     = near_one(q) ? 0.0 : 1.0 - q;
  double const phi_x = 1.0 + k * hx;
  double const phi_y = 1.0 + k * hy;
  return phi_x * hy_x - hy + hx - phi_y * hx_y;
}

inline double mutual_information(EntropySpec const &spec, JointTable const &j)
{
  return entropy(spec, marginal(j, Axis::X)) + entropy(spec, marginal(j, Axis::Y)) -
         entropy(spec, j.flatten());
}

}  // namespace qentropy
