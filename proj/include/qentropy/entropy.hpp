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
 * Entropy functionals on a ProbVector. Logarithms are base 2.
 *
 *   shannon              -sum p log2 p
 *   renyi(q)             log2(sum p^q) / (1-q)
 *   tsallis(q)           (sum p^q - 1) / (1-q)
 *   landsberg(q)         ((sum p^{2-q})^{-1} - 1) / (1-q)
 *   behara_chawla(g)     (1 - (sum p^{1/g})^g) / (1 - 2^{g-1}),   q = 2 - 2^{g-1}
 *   frank_daffertshofer  ((sum p^r)^{(1-q)/(1-r)} - 1) / (1-q)
 *   sharma_mittal        ((sum p^r)^{(1-q)/(1-r)} - 1) / delta,  delta = 2^{1-q} - 1
 *   ja(q)                (2^{(1-q) J} - 1) / (1-q),  J = -sum rho_q(p)_k log2 p_k
 *
 * Near q = 1 (and r = 1, g = 1) the analytic limits are used. Families whose
 * deformation is a q-logarithm (tsallis, landsberg, ja, and fd in q) tend to
 * Shannon entropy in nats; renyi, behara_chawla and sharma_mittal tend to
 * Shannon entropy in bits.
 */

#include "qentropy/deformed.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/prob.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace qentropy {

enum class Family
{
  Shannon,
  Renyi,
  Tsallis,
  Landsberg,
  BeharaChawla,
  SharmaMittal,
  FrankDaffertshofer,
  Ja
};

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::Shannon,      Family::Renyi,        Family::Tsallis,
    Family::Landsberg,    Family::BeharaChawla, Family::SharmaMittal,
    Family::FrankDaffertshofer, Family::Ja};

constexpr std::string_view to_string(Family f) noexcept
{
  switch (f)
  {
  case Family::Shannon:
    return "shannon";
  case Family::Renyi:
    return "renyi";
  case Family::Tsallis:
    return "tsallis";
  case Family::Landsberg:
    return "landsberg";
  case Family::BeharaChawla:
    return "behara_chawla";
  case Family::SharmaMittal:
    return "sharma_mittal";
  case Family::FrankDaffertshofer:
    return "frank_daffertshofer";
  case Family::Ja:
    return "ja";
  }
  return "unknown";
}

/// Accepts the canonical names above plus the short forms bc, sm, fd.
inline std::optional<Family> parse_family(std::string_view name)
{
  for (auto f : kAllFamilies)
  {
    if (to_string(f) == name)
    {
      return f;
    }
  }
  if (name == "bc")
  {
    return Family::BeharaChawla;
  }
  if (name == "sm")
  {
    return Family::SharmaMittal;
  }
  if (name == "fd")
  {
    return Family::FrankDaffertshofer;
  }
  return std::nullopt;
}

struct EntropySpec
{
  Family family = Family::Shannon;
  double q      = 1.0;  ///< deformation; for behara_chawla the induced 2 - 2^{gamma-1}
  double r      = 1.0;  ///< second deformation (fd, sm)
  double gamma  = 1.0;  ///< behara_chawla only

  static EntropySpec shannon()
  {
    return {};
  }

  static EntropySpec renyi(double q)
  {
    return make(Family::Renyi, q);
  }

  static EntropySpec tsallis(double q)
  {
    return make(Family::Tsallis, q);
  }

  static EntropySpec landsberg(double q)
  {
    return make(Family::Landsberg, q);
  }

  static EntropySpec ja(double q)
  {
    return make(Family::Ja, q);
  }

  static EntropySpec frank_daffertshofer(double q, double r)
  {
    return make(Family::FrankDaffertshofer, q, r);
  }

  static EntropySpec sharma_mittal(double q, double r)
  {
    return make(Family::SharmaMittal, q, r);
  }

  static EntropySpec behara_chawla(double gamma)
  {
    if (!std::isfinite(gamma) || !(gamma > 0.0))
    {
      fail(ErrorCode::InvalidParameters, "behara_chawla needs gamma > 0");
    }
    EntropySpec s;
    s.family = Family::BeharaChawla;
    s.gamma  = gamma;
    s.q      = 2.0 - std::exp2(gamma - 1.0);
    return s;
  }

  /// Builds a spec from a family and whichever parameters it uses.
  static EntropySpec of(Family f, double q = 1.0, double r = 1.0, double gamma = 1.0)
  {
    switch (f)
    {
    case Family::Shannon:
      return shannon();
    case Family::BeharaChawla:
      return behara_chawla(gamma);
    case Family::SharmaMittal:
    case Family::FrankDaffertshofer:
      return make(f, q, r);
    default:
      return make(f, q);
    }
  }

  /// delta = 2^{1-q} - 1 (sharma_mittal normalization).
  double delta() const
  {
    return std::exp2(1.0 - q) - 1.0;
  }

  friend bool operator==(EntropySpec const &, EntropySpec const &) = default;

private:
  static EntropySpec make(Family f, double q, double r = 1.0)
  {
    if (!std::isfinite(q) || !std::isfinite(r))
    {
      fail(ErrorCode::InvalidParameters, std::string(to_string(f)) + " parameters must be finite");
    }
    EntropySpec s;
    s.family = f;
    s.q      = q;
    s.r      = r;
    return s;
  }
};

/// Coefficient c of the composition law H(X,Y) = H(X) + H(Y|X) + c H(X) H(Y|X)
/// that the family follows: 0 for shannon/renyi, 1-q for the q-log families,
/// delta for sharma_mittal.
inline double chain_coefficient(EntropySpec const &s)
{
  switch (s.family)
  {
  case Family::Shannon:
  case Family::Renyi:
    return 0.0;
  case Family::SharmaMittal:
    return near_one(s.q) ? 0.0 : s.delta();
  default:
    return 1.0 - s.q;
  }
}

/// The q for which the family is q-extensive, i.e. 1 - chain_coefficient.
inline double natural_chain_q(EntropySpec const &s)
{
  return 1.0 - chain_coefficient(s);
}

/// Order of the escort weights used when aggregating conditional slices.
inline double escort_order(EntropySpec const &s)
{
  switch (s.family)
  {
  case Family::Shannon:
    return 1.0;
  case Family::SharmaMittal:
  case Family::FrankDaffertshofer:
    return s.r;
  default:
    return s.q;
  }
}

namespace detail {

inline std::string fmt_param(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace detail

/// Short human-readable form, e.g. "tsallis(q=2)".
inline std::string describe(EntropySpec const &s)
{
  using detail::fmt_param;
  std::string out(to_string(s.family));
  switch (s.family)
  {
  case Family::Shannon:
    break;
  case Family::BeharaChawla:
    out += "(gamma=" + fmt_param(s.gamma) + ")";
    break;
  case Family::SharmaMittal:
  case Family::FrankDaffertshofer:
    out += "(q=" + fmt_param(s.q) + ",r=" + fmt_param(s.r) + ")";
    break;
  default:
    out += "(q=" + fmt_param(s.q) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

/// sum_i p_i^a over the support.
inline double power_sum(ProbVector const &p, double a)
{
  double s = 0.0;
  for (double w : p.weights())
  {
    if (w > 0.0)
    {
      s += std::pow(w, a);
    }
  }
  return s;
}

inline double shannon_bits(ProbVector const &p)
{
  double h = 0.0;
  for (double w : p.weights())
  {
    if (w > 0.0)
    {
      h -= w * std::log2(w);
    }
  }
  return h;
}

inline double renyi_bits(ProbVector const &p, double q)
{
  if (near_one(q))
  {
    return shannon_bits(p);
  }
  return std::log2(power_sum(p, q)) / (1.0 - q);
}

}  // namespace detail

/// -sum_k rho_q(p)_k log2 p_k, the escort-weighted log-likelihood.
inline double ja_inner(ProbVector const &p, double q)
{
  ProbVector const rho = escort(p, q);
  double           acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
  {
    if (rho[k] > 0.0)
    {
      acc -= rho[k] * std::log2(p[k]);
    }
  }
  return acc;
}

inline double entropy(EntropySpec const &spec, ProbVector const &p)
{
  using std::numbers::ln2;
  double const q = spec.q;
  double const r = spec.r;

  switch (spec.family)
  {
  case Family::Shannon:
    return detail::shannon_bits(p);

  case Family::Renyi:
    return detail::renyi_bits(p, q);

  case Family::Tsallis:
    if (near_one(q))
    {
      return ln2 * detail::shannon_bits(p);
    }
    return (detail::power_sum(p, q) - 1.0) / (1.0 - q);

  case Family::Landsberg:
    if (near_one(q))
    {
      return ln2 * detail::shannon_bits(p);
    }
    return (1.0 / detail::power_sum(p, 2.0 - q) - 1.0) / (1.0 - q);

  case Family::BeharaChawla: {
    double const g = spec.gamma;
    if (!(g > 0.0))
    {
      fail(ErrorCode::InvalidParameters, "behara_chawla needs gamma > 0");
    }
    if (near_one(g))
    {
      return detail::shannon_bits(p);
    }
    double const a = detail::power_sum(p, 1.0 / g);
    return std::expm1(g * std::log(a)) / std::expm1((g - 1.0) * ln2);
  }

  case Family::FrankDaffertshofer: {
    if (near_one(r))
    {
      double const h = detail::shannon_bits(p);
      return near_one(q) ? ln2 * h : std::expm1((1.0 - q) * ln2 * h) / (1.0 - q);
    }
    double const log_sum = std::log(detail::power_sum(p, r));
    if (near_one(q))
    {
      return log_sum / (1.0 - r);
    }
    return std::expm1((1.0 - q) / (1.0 - r) * log_sum) / (1.0 - q);
  }

  case Family::SharmaMittal: {
    if (near_one(q))
    {
      return detail::renyi_bits(p, r);
    }
    double const delta = spec.delta();
    if (near_one(r))
    {
      return std::expm1((1.0 - q) * ln2 * detail::shannon_bits(p)) / delta;
    }
    double const log_sum = std::log(detail::power_sum(p, r));
    return std::expm1((1.0 - q) / (1.0 - r) * log_sum) / delta;
  }

  case Family::Ja: {
    double const inner = ja_inner(p, q);
    if (near_one(q))
    {
      return ln2 * inner;
    }
    return std::expm1((1.0 - q) * ln2 * inner) / (1.0 - q);
  }
  }
  fail(ErrorCode::InvalidParameters, "unknown entropy family");
}

/// Shannon entropy in the unit the family tends to at q, r, gamma -> 1.
inline double shannon_limit(Family f, ProbVector const &p)
{
  double const bits = detail::shannon_bits(p);
  switch (f)
  {
  case Family::Tsallis:
  case Family::Landsberg:
  case Family::Ja:
  case Family::FrankDaffertshofer:
    return std::numbers::ln2 * bits;
  default:
    return bits;
  }
}

}  // namespace qentropy
