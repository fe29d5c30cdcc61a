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

#include "qentropy/errors.hpp"
#include "qentropy/prob.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <string_view>

namespace qentropy {

/// Parameters this close to a degenerate value (q = 1, r = 1, gamma = 1)
/// are evaluated with the analytic limit instead of the 0/0 expression.
inline constexpr double kLimitEpsilon = 1e-9;

inline bool near_one(double v) noexcept
{
  return std::abs(1.0 - v) <= kLimitEpsilon;
}

/// Deformed logarithm (x^{1-q} - 1)/(1-q); ln(x) at q = 1.
inline double q_log(double x, double q)
{
  if (!(x > 0.0))
  {
    fail(ErrorCode::NonPositiveArgument, "q_log needs x > 0, got " + std::to_string(x));
  }
  if (near_one(q))
  {
    return std::log(x);
  }
  double const k = 1.0 - q;
  return std::expm1(k * std::log(x)) / k;
}

/// Deformed exponential [1 + (1-q) x]^{1/(1-q)}; e^x at q = 1.
inline double q_exp(double x, double q)
{
  if (near_one(q))
  {
    return std::exp(x);
  }
  double const k    = 1.0 - q;
  double const base = 1.0 + k * x;
  if (!(base > 0.0))
  {
    fail(ErrorCode::CutoffViolation,
         "q_exp cutoff: 1 + (1-q)x = " + std::to_string(base) + " <= 0");
  }
  return std::exp(std::log1p(k * x) / k);
}

/// Open interval (lower, upper).
struct Interval
{
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept
  {
    return x > lower && x < upper;
  }
};

enum class KnTag
{
  Linear,
  Renyi,
  FrankDaffertshofer,
  SharmaMittal,
  Composed
};

constexpr std::string_view to_string(KnTag tag) noexcept
{
  switch (tag)
  {
  case KnTag::Linear:
    return "linear";
  case KnTag::Renyi:
    return "renyi";
  case KnTag::FrankDaffertshofer:
    return "fd";
  case KnTag::SharmaMittal:
    return "sm";
  case KnTag::Composed:
    return "composed";
  }
  return "unknown";
}

/// A strictly monotone generator phi together with its inverse, for use in
/// Kolmogorov-Nagumo means. Immutable; copies share nothing mutable.
class KNFunction
{
public:
  using Map = std::function<double(double)>;

  KNFunction(KnTag tag, Map generator, Map inverse, Interval domain, double q = 1.0,
             double r = 1.0)
    : tag_(tag)
    , generator_(std::move(generator))
    , inverse_(std::move(inverse))
    , domain_(domain)
    , q_(q)
    , r_(r)
  {}

  double operator()(double x) const
  {
    return generator_(x);
  }

  double inverse(double y) const
  {
    return inverse_(y);
  }

  Interval domain() const noexcept
  {
    return domain_;
  }

  KnTag tag() const noexcept
  {
    return tag_;
  }

  double q() const noexcept
  {
    return q_;
  }

  double r() const noexcept
  {
    return r_;
  }

private:
  KnTag    tag_;
  Map      generator_;
  Map      inverse_;
  Interval domain_;
  double   q_;
  double   r_;
};

namespace detail {

inline void require_finite(double v, char const *name)
{
  if (!std::isfinite(v))
  {
    fail(ErrorCode::InvalidParameters, std::string(name) + " must be finite");
  }
}

/// Domain {x : 1 + k x > 0}.
inline Interval cutoff_domain(double k)
{
  Interval d;
  if (k > 0.0)
  {
    d.lower = -1.0 / k;
  }
  else if (k < 0.0)
  {
    d.upper = -1.0 / k;
  }
  return d;
}

}  // namespace detail

inline KNFunction make_linear_kn()
{
  return KNFunction(
      KnTag::Linear, [](double x) { return x; }, [](double y) { return y; }, Interval{});
}

/// phi(x) = 2^{(1-q) x}. Base 2 matches the bit-valued Renyi entropy.
inline KNFunction make_renyi_kn(double q)
{
  detail::require_finite(q, "q");
  if (near_one(q))
  {
    return KNFunction(
        KnTag::Renyi, [](double x) { return x; }, [](double y) { return y; }, Interval{}, q);
  }
  double const k = 1.0 - q;
  return KNFunction(
      KnTag::Renyi, [k](double x) { return std::exp2(k * x); },
      [k](double y) {
        if (!(y > 0.0))
        {
          fail(ErrorCode::DomainViolation, "renyi generator inverse needs y > 0");
        }
        return std::log2(y) / k;
      },
      Interval{}, q);
}

/// phi(x) = log_r(e_q^x) = ([1 + (1-q)x]^{(1-r)/(1-q)} - 1)/(1-r).
/// Maps a Frank-Daffertshofer slice entropy onto the Tsallis-r value of the slice.
inline KNFunction make_fd_kn(double q, double r)
{
  detail::require_finite(q, "q");
  detail::require_finite(r, "r");
  Interval const domain = near_one(q) ? Interval{} : detail::cutoff_domain(1.0 - q);
  return KNFunction(
      KnTag::FrankDaffertshofer, [q, r](double x) { return q_log(q_exp(x, q), r); },
      [q, r](double y) { return q_log(q_exp(y, r), q); }, domain, q, r);
}

/// phi(x) = ([1 + delta x]^{(1-r)/(1-q)} - 1)/(1-r), delta = 2^{1-q} - 1.
/// Maps a Sharma-Mittal slice entropy onto the Tsallis-r value of the slice.
inline KNFunction make_sm_kn(double q, double r)
{
  detail::require_finite(q, "q");
  detail::require_finite(r, "r");
  if (near_one(q))
  {
    // 1 + delta x -> 2^{(1-q)x}, so the inner power tends to 2^x
    return KNFunction(
        KnTag::SharmaMittal, [r](double x) { return q_log(std::exp2(x), r); },
        [r](double y) { return std::log2(q_exp(y, r)); }, Interval{}, q, r);
  }
  double const k     = 1.0 - q;
  double const delta = std::exp2(k) - 1.0;
  return KNFunction(
      KnTag::SharmaMittal,
      [k, delta, r](double x) {
        if (!(1.0 + delta * x > 0.0))
        {
          fail(ErrorCode::DomainViolation, "sm generator needs 1 + delta x > 0");
        }
        return q_log(std::exp(std::log1p(delta * x) / k), r);
      },
      [k, delta, r](double y) { return std::expm1(k * std::log(q_exp(y, r))) / delta; },
      detail::cutoff_domain(delta), q, r);
}

/// Builds one of the four named generators.
inline KNFunction make_kn(KnTag tag, double q = 1.0, double r = 1.0)
{
  switch (tag)
  {
  case KnTag::Linear:
    return make_linear_kn();
  case KnTag::Renyi:
    return make_renyi_kn(q);
  case KnTag::FrankDaffertshofer:
    return make_fd_kn(q, r);
  case KnTag::SharmaMittal:
    return make_sm_kn(q, r);
  case KnTag::Composed:
    break;
  }
  fail(ErrorCode::InvalidParameters, "composed generators are built by the Darotzy transform");
}

/// Quasi-linear mean phi^{-1}(sum_i w_i phi(v_i)). Entries with zero weight
/// are skipped, so values for null events are never evaluated.
inline double kn_mean(std::span<double const> values, ProbVector const &weights,
                      KNFunction const &kn)
{
  if (values.size() != weights.size())
  {
    fail(ErrorCode::ShapeMismatch, "kn_mean needs one weight per value");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    if (weights[i] == 0.0)
    {
      continue;
    }
    if (!kn.domain().contains(values[i]))
    {
      fail(ErrorCode::DomainViolation, "value " + std::to_string(values[i]) +
                                           " outside the domain of the " +
                                           std::string(to_string(kn.tag())) + " generator");
    }
    acc += weights[i] * kn(values[i]);
  }
  return kn.inverse(acc);
}

}  // namespace qentropy
