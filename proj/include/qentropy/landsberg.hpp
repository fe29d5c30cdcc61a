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
 * Sampling-based falsification of Landsberg's three entropy properties.
 *
 *   S  superadditivity  H(X+Y) >= H(X) + H(Y)
 *                       X+Y is the independent composition (product joint)
 *                       by default, an arbitrary joint in correlated mode
 *   H  homogeneity      H(lambda X) = lambda H(X), lambda in {2, 3} read as
 *                       lambda independent copies
 *   C  concavity        H(l p + (1-l) p') >= l H(p) + (1-l) H(p')
 *
 * "Holds" means no sample violated the property beyond the tolerance; a
 * violation carries the exact inputs that reproduce it.
 */

#include "qentropy/entropy.hpp"
#include "qentropy/prob.hpp"
#include "qentropy/sampling.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qentropy {

enum class Property
{
  Superadditivity,
  Homogeneity,
  Concavity
};

constexpr std::string_view to_string(Property p) noexcept
{
  switch (p)
  {
  case Property::Superadditivity:
    return "S";
  case Property::Homogeneity:
    return "H";
  case Property::Concavity:
    return "C";
  }
  return "?";
}

enum class Composition
{
  Independent,
  Correlated
};

struct SamplerConfig
{
  std::size_t   trials      = 1000;
  std::size_t   min_dim     = 2;
  std::size_t   max_dim     = 6;
  std::uint64_t seed        = 0;
  Composition   composition = Composition::Independent;
  double        tolerance   = 1e-9;
};

/// Inputs that reproduce a violation. For S in correlated mode `inputs`
/// holds the joint's rows; otherwise one entry per distribution.
struct Counterexample
{
  std::vector<std::vector<double>> inputs;
  unsigned                         copies = 0;    ///< H only
  double                           mix    = 0.0;  ///< C only
  double                           lhs    = 0.0;
  double                           rhs    = 0.0;
  double                           gap    = 0.0;  ///< amount by which the property fails
};

struct PropertyVerdict
{
  Property                      property = Property::Superadditivity;
  bool                          holds    = true;
  std::optional<Counterexample> counterexample;
  std::size_t                   samples_used = 0;
};

struct ClassVerdict
{
  PropertyVerdict superadditive;
  PropertyVerdict homogeneous;
  PropertyVerdict concave;
  std::string     class_label;
  bool            impossible   = false;  ///< label is SH~C or ~SHC
  std::size_t     samples_used = 0;
  std::uint64_t   seed         = 0;
  Composition     composition  = Composition::Independent;
};

namespace detail {

struct Evaluation
{
  double lhs;
  double rhs;
  double gap;  ///< > 0 means the property fails by that much
};

inline Evaluation evaluate(EntropySpec const &spec, Property property, Composition composition,
                           Counterexample const &c)
{
  switch (property)
  {
  case Property::Superadditivity: {
    JointTable const j = composition == Composition::Independent
                             ? product_join(ProbVector::normalize(c.inputs.at(0)),
                                            ProbVector::normalize(c.inputs.at(1)))
                             : JointTable::from_rows(c.inputs);
    double const lhs = entropy(spec, j.flatten());
    double const rhs = entropy(spec, marginal(j, Axis::X)) + entropy(spec, marginal(j, Axis::Y));
    return {lhs, rhs, rhs - lhs};
  }
  case Property::Homogeneity: {
    ProbVector const p   = ProbVector::normalize(c.inputs.at(0));
    double const     lhs = entropy(spec, product_power(p, c.copies));
    double const     rhs = static_cast<double>(c.copies) * entropy(spec, p);
    return {lhs, rhs, std::abs(lhs - rhs)};
  }
  case Property::Concavity: {
    ProbVector const    a = ProbVector::normalize(c.inputs.at(0));
    ProbVector const    b = ProbVector::normalize(c.inputs.at(1));
    std::vector<double> mixed(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
      mixed[i] = c.mix * a[i] + (1.0 - c.mix) * b[i];
    }
    double const lhs = entropy(spec, ProbVector::normalize(mixed));
    double const rhs = c.mix * entropy(spec, a) + (1.0 - c.mix) * entropy(spec, b);
    return {lhs, rhs, rhs - lhs};
  }
  }
  return {0.0, 0.0, 0.0};
}

inline Counterexample draw(Rng &rng, Property property, std::size_t trial,
                           SamplerConfig const &cfg)
{
  Counterexample c;
  auto           dim = [&] { return rng.uniform_int(cfg.min_dim, cfg.max_dim); };
  switch (property)
  {
  case Property::Superadditivity:
    if (cfg.composition == Composition::Independent)
    {
      c.inputs.push_back(rng.simplex(dim()).to_vector());
      c.inputs.push_back(rng.simplex(dim()).to_vector());
    }
    else
    {
      std::size_t const rows = dim();
      c.inputs               = rng.joint(rows, dim()).to_rows();
    }
    break;
  case Property::Homogeneity:
    c.inputs.push_back(rng.simplex(dim()).to_vector());
    c.copies = trial % 2 == 0 ? 2 : 3;
    break;
  case Property::Concavity: {
    std::size_t const n = dim();
    c.inputs.push_back(rng.simplex(n).to_vector());
    c.inputs.push_back(rng.simplex(n).to_vector());
    c.mix = rng.uniform();
    break;
  }
  }
  return c;
}

}  // namespace detail

/// Recomputes (lhs, rhs, gap) of a stored counterexample from its inputs alone.
inline Counterexample reevaluate(EntropySpec const &spec, Property property,
                                 Composition composition, Counterexample c)
{
  auto const e = detail::evaluate(spec, property, composition, c);
  c.lhs        = e.lhs;
  c.rhs        = e.rhs;
  c.gap        = e.gap;
  return c;
}

inline PropertyVerdict probe_property(EntropySpec const &spec, Property property,
                                      SamplerConfig const &cfg)
{
  if (cfg.min_dim < 1 || cfg.max_dim < cfg.min_dim)
  {
    fail(ErrorCode::InvalidParameters, "sampler needs 1 <= min_dim <= max_dim");
  }
  PropertyVerdict verdict;
  verdict.property          = property;
  std::uint64_t const salt  = static_cast<std::uint64_t>(property) * 0x100000001b3ULL;
  for (std::size_t t = 0; t < cfg.trials; ++t)
  {
    Rng  rng = Rng::substream(cfg.seed ^ salt, t);
    auto c   = reevaluate(spec, property, cfg.composition, detail::draw(rng, property, t, cfg));
    ++verdict.samples_used;
    if (c.gap > cfg.tolerance)
    {
      verdict.holds          = false;
      verdict.counterexample = std::move(c);
      break;
    }
  }
  return verdict;
}

inline bool is_impossible_label(std::string_view label) noexcept
{
  return label == "SH~C" || label == "~SHC";
}

inline ClassVerdict classify(EntropySpec const &spec, SamplerConfig const &cfg)
{
  ClassVerdict v;
  v.superadditive = probe_property(spec, Property::Superadditivity, cfg);
  v.homogeneous   = probe_property(spec, Property::Homogeneity, cfg);
  v.concave       = probe_property(spec, Property::Concavity, cfg);
  v.class_label   = std::string(v.superadditive.holds ? "S" : "~S") +
                  (v.homogeneous.holds ? "H" : "~H") + (v.concave.holds ? "C" : "~C");
  v.impossible   = is_impossible_label(v.class_label);
  v.samples_used = v.superadditive.samples_used + v.homogeneous.samples_used +
                   v.concave.samples_used;
  v.seed        = cfg.seed;
  v.composition = cfg.composition;
  return v;
}

}  // namespace qentropy
