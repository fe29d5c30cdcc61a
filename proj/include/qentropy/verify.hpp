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
 * Certification suite. Each criterion samples inputs from a seed-derived
 * stream, evaluates residuals, and compares the worst case against a fixed
 * bound. Criterion 11 checks the suite itself: the other criteria pass, and
 * tightening any single tolerance to 1e-15 makes its owner fail.
 */

#include "qentropy/chain.hpp"
#include "qentropy/conditional.hpp"
#include "qentropy/darotzy.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/landsberg.hpp"
#include "qentropy/prob.hpp"
#include "qentropy/sampling.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace qentropy::verify {

/// Upper bounds on residuals, one per certified identity.
struct Tolerances
{
  double pseudo_additivity = 1e-9;
  double additive_chain    = 1e-9;
  double renyi_closed_form = 1e-10;
  double q_extensive_chain = 1e-9;
  double transform_chain   = 1e-9;
  double darotzy_identity  = 1e-9;
  double escort_product    = 1e-12;
  double escort_golden     = 1e-15;
  double ja_additivity     = 1e-9;
  double expansion         = 1e-10;
  double n_chain           = 1e-9;
  double bayes             = 1e-9;
  double limit             = 1e-4;
  double landsberg         = 1e-9;
};

/// Lower bounds that a quantity must exceed. These separate two regimes and
/// are not tightened by the sensitivity check.
struct Thresholds
{
  double distinct_transforms = 1e-6;
  double escort_fixed_joint  = 1e-3;
  double ja_chain_fixed      = 1e-6;
};

struct ToleranceEntry
{
  char const *name;
  double Tolerances::*field;
  int criterion;
};

inline constexpr std::array<ToleranceEntry, 14> kToleranceTable = {{
    {"pseudo_additivity", &Tolerances::pseudo_additivity, 1},
    {"additive_chain", &Tolerances::additive_chain, 2},
    {"renyi_closed_form", &Tolerances::renyi_closed_form, 2},
    {"q_extensive_chain", &Tolerances::q_extensive_chain, 3},
    {"transform_chain", &Tolerances::transform_chain, 4},
    {"darotzy_identity", &Tolerances::darotzy_identity, 5},
    {"escort_product", &Tolerances::escort_product, 6},
    {"escort_golden", &Tolerances::escort_golden, 6},
    {"ja_additivity", &Tolerances::ja_additivity, 6},
    {"expansion", &Tolerances::expansion, 7},
    {"n_chain", &Tolerances::n_chain, 7},
    {"bayes", &Tolerances::bayes, 8},
    {"limit", &Tolerances::limit, 9},
    {"landsberg", &Tolerances::landsberg, 10},
}};

struct SuiteConfig
{
  std::uint64_t seed    = 20260101;
  std::size_t   samples = 1000;
  Tolerances    tol;
  Thresholds    thresholds;
};

struct Check
{
  std::string name;
  double      measured = 0.0;
  double      bound    = 0.0;
  bool        at_most  = true;   ///< measured <= bound, otherwise measured > bound
  bool        counted  = true;   ///< informational checks do not affect the verdict
  std::string note;

  bool pass() const
  {
    if (!std::isfinite(measured))
    {
      return false;
    }
    return at_most ? measured <= bound : measured > bound;
  }
};

inline Check at_most(std::string name, double measured, double bound, std::string note = {})
{
  return Check{std::move(name), measured, bound, true, true, std::move(note)};
}

inline Check exceeds(std::string name, double measured, double bound, std::string note = {})
{
  return Check{std::move(name), measured, bound, false, true, std::move(note)};
}

inline Check informational(Check c)
{
  c.counted = false;
  return c;
}

struct CriterionResult
{
  int                id = 0;
  std::string        title;
  std::vector<Check> checks;

  bool pass() const
  {
    return std::all_of(checks.begin(), checks.end(),
                       [](Check const &c) { return !c.counted || c.pass(); });
  }
};

inline constexpr int kCriterionCount = 11;

/// Fixed correlated joint used by the escort and JA checks.
inline JointTable fixed_joint()
{
  return JointTable::from_rows({{0.4, 0.1}, {0.1, 0.4}});
}

/// Escort discrepancy of fixed_joint() at q = 2 from an exact rational
/// evaluation: both escort joints equal [[8/17, 1/34], [1/34, 8/17]].
inline constexpr double kFixedJointDiscrepancyGolden = 0.0;

/// A correlated joint whose conditional slices have unequal power sums.
inline JointTable asymmetric_joint()
{
  return JointTable::from_rows({{0.6, 0.2}, {0.1, 0.1}});
}

namespace detail {

class MaxAbs
{
public:
  void add(double v)
  {
    double const a = std::abs(v);
    if (!std::isfinite(a))
    {
      value_ = a;
      return;
    }
    if (std::isfinite(value_))
    {
      value_ = std::max(value_, a);
    }
  }
  double value() const
  {
    return value_;
  }

private:
  double value_ = 0.0;
};

inline std::string q_label(double q)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", q);
  return buf;
}

inline Rng stream(SuiteConfig const &cfg, int criterion, std::uint64_t part = 0)
{
  return Rng::substream(cfg.seed, static_cast<std::uint64_t>(criterion) * 1000 + part);
}

inline std::size_t dim(Rng &rng, std::size_t hi)
{
  return rng.uniform_int(2, hi);
}

inline Axis alternate(std::size_t i)
{
  return i % 2 == 0 ? Axis::Y : Axis::X;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CriterionResult criterion_1(SuiteConfig const &cfg)
{
  CriterionResult res{1, "pseudo-additivity degeneracy (tsallis, landsberg, behara_chawla)", {}};
  auto sweep = [&](EntropySpec const &spec, double rule_q, std::uint64_t part) {
    Rng            rng = detail::stream(cfg, 1, part);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      ProbVector const px = rng.simplex(detail::dim(rng, 6));
      ProbVector const py = rng.simplex(detail::dim(rng, 6));
      worst.add(pseudo_add_residual(spec, px, py, RuleSpec::tsallis_add(rule_q)));
    }
    res.checks.push_back(at_most(describe(spec) + " tsallis_add(q=" + detail::q_label(rule_q) + ")",
                          worst.value(), cfg.tol.pseudo_additivity));
  };
  std::uint64_t part = 0;
  for (double q : {0.5, 2.0})
  {
    sweep(EntropySpec::tsallis(q), q, part++);
    sweep(EntropySpec::landsberg(q), q, part++);
  }
  for (double g : {0.5, 2.0, 1.0 + std::log2(1.5)})
  {
    auto const bc = EntropySpec::behara_chawla(g);
    sweep(bc, bc.q, part++);
  }
  return res;
}

inline CriterionResult criterion_2(SuiteConfig const &cfg)
{
  CriterionResult res{2, "additive chain rule (shannon linear mean, renyi KN mean)", {}};
  {
    Rng            rng = detail::stream(cfg, 2, 0);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      JointTable const j = rng.joint(detail::dim(rng, 8), detail::dim(rng, 8));
      worst.add(chain_residual(EntropySpec::shannon(), j, RuleSpec::additive_chain(),
                               detail::alternate(i)));
    }
    res.checks.push_back(at_most("shannon additive_chain", worst.value(), cfg.tol.additive_chain));
  }
  std::uint64_t part = 1;
  for (double q : {0.5, 2.0, 3.0})
  {
    Rng            rng = detail::stream(cfg, 2, part++);
    detail::MaxAbs chain;
    detail::MaxAbs closed;
    auto const     spec = EntropySpec::renyi(q);
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      JointTable const j     = rng.joint(detail::dim(rng, 8), detail::dim(rng, 8));
      Axis const       given = detail::alternate(i);
      chain.add(chain_residual(spec, j, RuleSpec::additive_chain(), given));
      closed.add(conditional(spec, j, given) - renyi_conditional_closed(j, q, given));
    }
    res.checks.push_back(at_most(describe(spec) + " additive_chain", chain.value(),
                          cfg.tol.additive_chain));
    res.checks.push_back(at_most(describe(spec) + " KN conditional vs closed form", closed.value(),
                          cfg.tol.renyi_closed_form));
  }
  return res;
}

inline CriterionResult criterion_3(SuiteConfig const &cfg)
{
  CriterionResult res{3, "q-extensive chain rule (tsallis/Abe, fd, sm)", {}};
  auto sweep = [&](EntropySpec const &spec, std::uint64_t part, std::string const &note) {
    Rng            rng    = detail::stream(cfg, 3, part);
    double const   rule_q = natural_chain_q(spec);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      JointTable const j = rng.joint(detail::dim(rng, 8), detail::dim(rng, 8));
      worst.add(chain_residual(spec, j, RuleSpec::q_extensive_chain(rule_q), detail::alternate(i)));
    }
    res.checks.push_back(at_most(describe(spec) + " q_extensive_chain(q=" +
                                     detail::q_label(rule_q) + ")",
                                 worst.value(), cfg.tol.q_extensive_chain, note));
  };
  std::uint64_t part = 0;
  for (double q : {0.5, 2.0})
  {
    sweep(EntropySpec::tsallis(q), part++, "");
    for (double r : {0.5, 2.0})
    {
      sweep(EntropySpec::frank_daffertshofer(q, r), part++, "");
      sweep(EntropySpec::sharma_mittal(q, r), part++,
            "coefficient delta = 2^{1-q} - 1, i.e. q_eff = 2 - 2^{1-q}");
    }
  }
  return res;
}

inline CriterionResult criterion_4(SuiteConfig const &cfg)
{
  CriterionResult res{4, "Darotzy transform certificate and degeneracy", {}};
  std::uint64_t part = 0;
  for (double q : {0.5, 2.0})
  {
    auto const params = DarotzyParams::standard(1.0 - q);
    auto const from_shannon = transform(EntropySpec::shannon(), params);
    for (double r : {0.5, 2.0})
    {
      auto const     from_renyi = transform(EntropySpec::renyi(r), params);
      Rng            rng        = detail::stream(cfg, 4, part++);
      detail::MaxAbs shannon_res;
      detail::MaxAbs renyi_res;
      double         separation = 0.0;
      for (std::size_t i = 0; i < cfg.samples; ++i)
      {
        JointTable const j     = rng.joint(detail::dim(rng, 6), detail::dim(rng, 6));
        Axis const       given = detail::alternate(i);
        shannon_res.add(from_shannon.chain_residual(j, given));
        renyi_res.add(from_renyi.chain_residual(j, given));
        ProbVector const p = rng.simplex(detail::dim(rng, 6));
        separation = std::max(separation, std::abs(from_shannon.entropy(p) - from_renyi.entropy(p)));
      }
      std::string const tag = "q=" + detail::q_label(q) + ", r=" + detail::q_label(r);
      res.checks.push_back(at_most("h(shannon) chain residual, " + tag, shannon_res.value(),
                            cfg.tol.transform_chain));
      res.checks.push_back(at_most("h(renyi) chain residual, " + tag, renyi_res.value(),
                            cfg.tol.transform_chain));
      res.checks.push_back(exceeds("max |h(shannon) - h(renyi)|, " + tag, separation,
                            cfg.thresholds.distinct_transforms));
    }
  }
  return res;
}

inline CriterionResult criterion_5(SuiteConfig const &cfg)
{
  CriterionResult res{5, "FD = h_{1-q}(I_r) and SM = h_delta(I_r)", {}};
  std::uint64_t part = 0;
  for (double q : {0.5, 2.0})
  {
    for (double r : {0.5, 2.0})
    {
      auto const     fd = EntropySpec::frank_daffertshofer(q, r);
      auto const     sm = EntropySpec::sharma_mittal(q, r);
      auto const     h_fd = DarotzyParams::checked({1.0, 1.0 - q, 1.0 - q});
      auto const     h_sm = DarotzyParams::checked({1.0, 1.0 - q, sm.delta()});
      Rng            rng  = detail::stream(cfg, 5, part++);
      detail::MaxAbs fd_err;
      detail::MaxAbs sm_err;
      for (std::size_t i = 0; i < cfg.samples; ++i)
      {
        ProbVector const p  = rng.simplex(detail::dim(rng, 8));
        double const     ir = entropy(EntropySpec::renyi(r), p);
        fd_err.add(entropy(fd, p) - h_map(ir, h_fd));
        sm_err.add(entropy(sm, p) - h_map(ir, h_sm));
      }
      std::string const tag = "q=" + detail::q_label(q) + ", r=" + detail::q_label(r);
      res.checks.push_back(at_most("FD vs h_{1-q}(I_r), " + tag, fd_err.value(), cfg.tol.darotzy_identity));
      res.checks.push_back(at_most("SM vs h_delta(I_r), " + tag, sm_err.value(), cfg.tol.darotzy_identity));
    }
  }
  return res;
}

inline CriterionResult criterion_6(SuiteConfig const &cfg)
{
  CriterionResult res{6, "escort joints and the DeFinetti-Kolmogorov relation", {}};
  {
    Rng    rng   = detail::stream(cfg, 6, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 100; ++i)
    {
      JointTable const j = product_join(rng.simplex(detail::dim(rng, 6)),
                                        rng.simplex(detail::dim(rng, 6)));
      worst = std::max(worst, escort_discrepancy(j, 2.0));
    }
    res.checks.push_back(at_most("escort discrepancy on 100 product joints, q=2", worst,
                          cfg.tol.escort_product));
  }

  JointTable const fixed = fixed_joint();
  double const     d     = escort_discrepancy(fixed, 2.0);
  res.checks.push_back(exceeds("escort discrepancy on [[0.4,0.1],[0.1,0.4]], q=2", d,
                               cfg.thresholds.escort_fixed_joint,
                               "slices have equal power sums, so both escort joints coincide"));
  res.checks.push_back(at_most("fixed-joint discrepancy vs golden value", std::abs(d - kFixedJointDiscrepancyGolden),
                        cfg.tol.escort_golden));

  for (double q : {0.5, 2.0})
  {
    Rng            rng = detail::stream(cfg, 6, q < 1.0 ? 1 : 2);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      ProbVector const px = rng.simplex(detail::dim(rng, 6));
      ProbVector const py = rng.simplex(detail::dim(rng, 6));
      worst.add(pseudo_add_residual(EntropySpec::ja(q), px, py, RuleSpec::tsallis_add(q)));
    }
    res.checks.push_back(at_most("ja(q=" + detail::q_label(q) + ") tsallis_add on products", worst.value(),
                          cfg.tol.ja_additivity));
  }

  double const ja_fixed =
      std::abs(chain_residual(EntropySpec::ja(2.0), fixed, RuleSpec::q_extensive_chain(2.0), Axis::Y));
  res.checks.push_back(exceeds("|ja(q=2) q_extensive_chain residual| on [[0.4,0.1],[0.1,0.4]]", ja_fixed,
                        cfg.thresholds.ja_chain_fixed));

  JointTable const asym = asymmetric_joint();
  res.checks.push_back(informational(exceeds("escort discrepancy on [[0.6,0.2],[0.1,0.1]], q=2",
                                             escort_discrepancy(asym, 2.0),
                                             cfg.thresholds.escort_fixed_joint)));
  res.checks.push_back(informational(exceeds(
      "|ja(q=2) q_extensive_chain residual| on [[0.6,0.2],[0.1,0.1]]",
      std::abs(chain_residual(EntropySpec::ja(2.0), asym, RuleSpec::q_extensive_chain(2.0), Axis::Y)),
      cfg.thresholds.ja_chain_fixed)));
  return res;
}

inline CriterionResult criterion_7(SuiteConfig const &cfg)
{
  CriterionResult res{7, "n-partite q-extensive expansion", {}};
  std::uint64_t part = 0;
  for (std::size_t n : {3u, 4u})
  {
    for (double q : {0.5, 2.0})
    {
      Rng            rng = detail::stream(cfg, 7, part++);
      detail::MaxAbs worst;
      for (std::size_t i = 0; i < cfg.samples; ++i)
      {
        std::vector<double> terms(n);
        for (auto &t : terms)
        {
          t = 3.0 * rng.uniform();
        }
        worst.add(q_extensive_compose(terms, q) - q_extensive_expanded(terms, q));
      }
      res.checks.push_back(at_most("product form vs expanded sum, n=" + std::to_string(n) +
                                ", q=" + detail::q_label(q),
                            worst.value(), cfg.tol.expansion));
    }
  }
  for (double q : {0.5, 2.0})
  {
    Rng            rng = detail::stream(cfg, 7, part++);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      worst.add(n_chain_residual(EntropySpec::tsallis(q), rng.tensor({2, 2, 2}), q));
    }
    res.checks.push_back(at_most("tsallis(q=" + detail::q_label(q) + ") n-chain on 2x2x2 joints",
                          worst.value(), cfg.tol.n_chain));
  }
  return res;
}

inline CriterionResult criterion_8(SuiteConfig const &cfg)
{
  CriterionResult res{8, "q-entropic Bayes rule (tsallis)", {}};
  std::uint64_t part = 0;
  for (double q : {0.5, 2.0})
  {
    Rng            rng = detail::stream(cfg, 8, part++);
    detail::MaxAbs worst;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
      worst.add(bayes_residual(EntropySpec::tsallis(q),
                               rng.joint(detail::dim(rng, 8), detail::dim(rng, 8)), q));
    }
    res.checks.push_back(at_most("tsallis(q=" + detail::q_label(q) + ") Bayes residual", worst.value(),
                          cfg.tol.bayes));
  }
  return res;
}

inline CriterionResult criterion_9(SuiteConfig const &cfg)
{
  CriterionResult res{9, "q -> 1 limits", {}};
  std::uint64_t part = 0;
  for (Family f : {Family::Renyi, Family::Tsallis, Family::Landsberg, Family::Ja})
  {
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6})
    {
      Rng            rng = detail::stream(cfg, 9, part++);
      detail::MaxAbs worst;
      auto const     spec = EntropySpec::of(f, q);
      for (std::size_t i = 0; i < 100; ++i)
      {
        ProbVector const p = rng.simplex(detail::dim(rng, 8));
        worst.add(entropy(spec, p) - shannon_limit(f, p));
      }
      res.checks.push_back(at_most(std::string(to_string(f)) + " at q=1" + (q < 1.0 ? "-" : "+") +
                                       "1e-6",
                                   worst.value(), cfg.tol.limit,
                                   f == Family::Renyi ? "reference: shannon in bits"
                                                      : "reference: shannon in nats"));
    }
  }
  return res;
}

inline CriterionResult criterion_10(SuiteConfig const &cfg)
{
  CriterionResult res{10, "Landsberg classification regression", {}};
  SamplerConfig   sc;
  sc.trials    = cfg.samples;
  sc.seed      = cfg.seed;
  sc.tolerance = cfg.tol.landsberg;
  struct Case
  {
    EntropySpec spec;
    char const *expected;
  };
  for (auto const &c : {Case{EntropySpec::shannon(), "SHC"}, Case{EntropySpec::tsallis(2.0), "~S~HC"},
                        Case{EntropySpec::tsallis(0.5), "S~HC"}})
  {
    ClassVerdict const v = classify(c.spec, sc);
    res.checks.push_back(at_most(describe(c.spec) + " -> " + v.class_label + " (expected " +
                                     c.expected + ")",
                                 v.class_label == c.expected && !v.impossible ? 0.0 : 1.0, 0.0));
  }
  return res;
}

inline CriterionResult run_criterion(int id, SuiteConfig const &cfg);

inline CriterionResult criterion_11(SuiteConfig const &cfg)
{
  CriterionResult res{11, "suite verdict and sensitivity", {}};
  double failing = 0.0;
  for (int id = 1; id < kCriterionCount; ++id)
  {
    if (!run_criterion(id, cfg).pass())
    {
      failing += 1.0;
    }
  }
  res.checks.push_back(at_most("criteria 1-10 failing under default tolerances", failing, 0.0,
                               "verify-all exits 0 iff this is 0"));

  for (auto const &entry : kToleranceTable)
  {
    SuiteConfig tight          = cfg;
    tight.tol.*(entry.field)   = 1e-15;
    // Count checks that flip from pass to fail.
    CriterionResult const base = run_criterion(entry.criterion, cfg);
    CriterionResult const flip = run_criterion(entry.criterion, tight);
    double                newly_failing = 0.0;
    for (std::size_t i = 0; i < flip.checks.size() && i < base.checks.size(); ++i)
    {
      if (flip.checks[i].counted && base.checks[i].pass() && !flip.checks[i].pass())
      {
        newly_failing += 1.0;
      }
    }
    Check c = exceeds(std::string("tolerance ") + entry.name +
                          " = 1e-15 -> new failures in criterion " + std::to_string(entry.criterion),
                      newly_failing, 0.0);
    if (!base.pass())
    {
      c.note = "criterion fails at default tolerances too";
    }
    res.checks.push_back(c);
  }
  return res;
}

inline CriterionResult run_criterion(int id, SuiteConfig const &cfg)
{
  switch (id)
  {
  case 1:
    return criterion_1(cfg);
  case 2:
    return criterion_2(cfg);
  case 3:
    return criterion_3(cfg);
  case 4:
    return criterion_4(cfg);
  case 5:
    return criterion_5(cfg);
  case 6:
    return criterion_6(cfg);
  case 7:
    return criterion_7(cfg);
  case 8:
    return criterion_8(cfg);
  case 9:
    return criterion_9(cfg);
  case 10:
    return criterion_10(cfg);
  case 11:
    return criterion_11(cfg);
  default:
    fail(ErrorCode::OutOfRange, "no criterion " + std::to_string(id));
  }
}

inline std::vector<CriterionResult> run_all(SuiteConfig const &cfg)
{
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
  {
    out.push_back(run_criterion(id, cfg));
  }
  return out;
}

inline nlohmann::json to_json(Check const &c)
{
  nlohmann::json j = {{"name", c.name},
                      {"measured", c.measured},
                      {"relation", c.at_most ? "<=" : ">"},
                      {"bound", c.bound},
                      {"pass", c.pass()},
                      {"counted", c.counted}};
  if (!c.note.empty())
  {
    j["note"] = c.note;
  }
  return j;
}

inline nlohmann::json to_json(CriterionResult const &r)
{
  nlohmann::json checks = nlohmann::json::array();
  for (auto const &c : r.checks)
  {
    checks.push_back(to_json(c));
  }
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
}

inline nlohmann::json to_json(Tolerances const &t)
{
  nlohmann::json j;
  for (auto const &e : kToleranceTable)
  {
    j[e.name] = t.*(e.field);
  }
  return j;
}

/// "PASS  [ 3] title" or "FAIL  [ 6] title".
inline std::string summary_line(CriterionResult const &r)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "[%2d] ", r.id);
  return std::string(r.pass() ? "PASS  " : "FAIL  ") + buf + r.title;
}

}  // namespace qentropy::verify
