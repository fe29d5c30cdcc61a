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

// qentropy: batch computation and verification reports.
//
// Every invocation prints exactly one JSON report on stdout, errors included.
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 parameter error.

#include "qentropy/io.hpp"
#include "qentropy/qentropy.hpp"
#include "qentropy/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace qentropy;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 20260101;

enum Exit
{
  kOk              = 0,
  kVerifyFailed    = 1,
  kInputError      = 2,
  kParameterError  = 3,
};

std::string sha256_hex(std::string const &data)
{
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int  len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
  {
    throw std::runtime_error("sha256 failed");
  }
  static char const hex[] = "0123456789abcdef";
  std::string       out;
  for (unsigned i = 0; i < len; ++i)
  {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

/// Files read during a run. The digest covers role names and raw bytes.
class Inputs
{
public:
  io::NumericArray load(std::string const &role, std::string const &path)
  {
    std::string text = io::read_text(path);
    files_.push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(text)}});
    blob_ += role;
    blob_ += '\0';
    blob_ += text;
    blob_ += '\0';
    return io::parse_array(text, path);
  }

  std::string digest() const
  {
    return sha256_hex(blob_);
  }

  json files() const
  {
    return files_.empty() ? json::array() : json(files_);
  }

private:
  std::vector<json> files_;
  std::string       blob_;
};

std::uint64_t parse_seed(std::string const &text, char const *what)
{
  std::uint64_t v = 0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
  {
    fail(ErrorCode::InvalidParameters, std::string(what) + " is not an unsigned integer: '" + text + "'");
  }
  return v;
}

struct FamilyArgs
{
  std::string family = "shannon";
  double      q      = 1.0;
  double      r      = 1.0;
  double      gamma  = 1.0;

  EntropySpec spec() const
  {
    auto const f = parse_family(family);
    if (!f)
    {
      fail(ErrorCode::InvalidParameters, "unknown entropy family '" + family + "'");
    }
    return EntropySpec::of(*f, q, r, gamma);
  }
};

void add_family(CLI::App *sub, FamilyArgs &a, std::string const &flag = "--family",
                bool with_gamma = true)
{
  sub->add_option(flag, a.family, "entropy family")->capture_default_str();
  sub->add_option("--q", a.q, "deformation q")->capture_default_str();
  sub->add_option("--r", a.r, "second deformation r (fd, sm)")->capture_default_str();
  if (with_gamma)
  {
    sub->add_option("--gamma", a.gamma, "behara_chawla gamma")->capture_default_str();
  }
}

Axis to_axis(std::string const &s)
{
  return s == "x" ? Axis::X : Axis::Y;
}

struct Run
{
  json          results = json::object();
  int           exit    = kOk;
  std::uint64_t seed    = kDefaultSeed;
  std::vector<ResidualRecord> records;
};

json verdict(double residual, double tol)
{
  return {{"residual", residual}, {"tolerance", tol}, {"pass", std::abs(residual) <= tol}};
}

}  // namespace

int main(int argc, char **argv)
{
  auto const start = std::chrono::steady_clock::now();

  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"]        = std::vector<std::string>(argv + 1, argv + argc);

  verify::Tolerances tol;
  Inputs             inputs;
  Run                run;
  std::string        records_path;

  CLI::App app{"Generalized entropies, conditionals and chain-rule verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("-h,--help", "print help inside the JSON report");
  for (auto const &e : verify::kToleranceTable)
  {
    std::string flag = std::string("--tol-") + e.name;
    for (auto &c : flag)
    {
      c = c == '_' ? '-' : c;
    }
    app.add_option(flag, tol.*(e.field), "tolerance")->capture_default_str();
  }
  app.add_option("--records", records_path, "write residual records as JSON lines");

  std::string seed_flag;

  // entropy
  FamilyArgs  ent;
  std::string dist_path;
  auto       *c_entropy = app.add_subcommand("entropy", "entropy of a distribution");
  add_family(c_entropy, ent);
  c_entropy->add_option("--dist", dist_path, "distribution file")->required();

  // conditional
  FamilyArgs  cond;
  std::string cond_joint, cond_given = "y";
  auto       *c_cond = app.add_subcommand("conditional", "conditional entropy H(other | given)");
  add_family(c_cond, cond);
  c_cond->add_option("--joint", cond_joint, "joint table file")->required();
  c_cond->add_option("--given", cond_given)->check(CLI::IsMember({"x", "y"}))->capture_default_str();

  // chain-check
  FamilyArgs  ch;
  std::string ch_joint, ch_rule, ch_given = "x";
  double      ch_rule_q = 0.0;
  auto       *c_chain   = app.add_subcommand("chain-check", "chain-rule residual on a joint");
  add_family(c_chain, ch);
  c_chain->add_option("--rule", ch_rule)->required()->check(CLI::IsMember({"additive", "q-extensive"}));
  c_chain->add_option("--joint", ch_joint)->required();
  c_chain->add_option("--given", ch_given)->check(CLI::IsMember({"x", "y"}))->capture_default_str();
  auto *ch_rule_q_opt = c_chain->add_option("--rule-q", ch_rule_q,
                                            "q of the q-extensive rule (default: the family's own)");

  // pseudo-add-check
  FamilyArgs  pa;
  std::string pa_px, pa_py, pa_rule;
  double      pa_param = 0.0;
  auto       *c_padd   = app.add_subcommand("pseudo-add-check", "additivity residual on px (x) py");
  add_family(c_padd, pa);
  c_padd->add_option("--rule", pa_rule)
      ->required()
      ->check(CLI::IsMember({"additive", "tsallis", "landsberg", "delta"}));
  c_padd->add_option("--px", pa_px)->required();
  c_padd->add_option("--py", pa_py)->required();
  auto *pa_param_opt = c_padd->add_option("--rule-param", pa_param,
                                          "q for tsallis/landsberg (default: family q), delta for delta");

  // nchain-check
  FamilyArgs  nc;
  std::string nc_joint;
  double      nc_rule_q = 0.0;
  auto       *c_nchain  = app.add_subcommand("nchain-check", "n-variable q-extensive chain rule");
  add_family(c_nchain, nc);
  c_nchain->add_option("--joint", nc_joint, "N-D joint file")->required();
  auto *nc_rule_q_opt = c_nchain->add_option("--rule-q", nc_rule_q);

  // escort-discrepancy
  double      es_q = 2.0;
  std::string es_joint;
  auto       *c_escort = app.add_subcommand("escort-discrepancy", "half-L1 gap between the two escort joints");
  c_escort->add_option("--q", es_q)->capture_default_str();
  c_escort->add_option("--joint", es_joint)->required();

  // darotzy-transform
  FamilyArgs    dz;
  DarotzyParams dz_params{1.0, 0.0, 0.0};
  std::string   dz_joint, dz_given = "x";
  auto         *c_dz = app.add_subcommand("darotzy-transform", "entropy carried through h");
  add_family(c_dz, dz, "--base", false);
  c_dz->add_option("--gamma", dz_params.gamma)->required();
  auto *dz_lambda_opt = c_dz->add_option("--lambda", dz_params.lambda, "default: gamma");
  c_dz->add_option("--a", dz_params.a)->capture_default_str();
  c_dz->add_option("--joint", dz_joint)->required();
  c_dz->add_option("--given", dz_given)->check(CLI::IsMember({"x", "y"}))->capture_default_str();

  // classify
  FamilyArgs  cl;
  std::size_t cl_trials = 1000, cl_min_dim = 2, cl_max_dim = 6;
  bool        cl_correlated = false;
  auto       *c_classify    = app.add_subcommand("classify", "Landsberg S/H/C class by sampling");
  add_family(c_classify, cl);
  c_classify->add_option("--trials", cl_trials)->capture_default_str();
  c_classify->add_option("--min-dim", cl_min_dim)->capture_default_str();
  c_classify->add_option("--max-dim", cl_max_dim)->capture_default_str();
  c_classify->add_option("--seed", seed_flag);
  c_classify->add_flag("--correlated", cl_correlated, "compose through correlated joints");

  // verify-all
  std::size_t       va_samples = 1000;
  std::vector<int>  va_only;
  auto             *c_verify = app.add_subcommand("verify-all", "run the acceptance suite");
  c_verify->add_option("--seed", seed_flag);
  c_verify->add_option("--samples", va_samples)->capture_default_str();
  c_verify->add_option("--only", va_only, "criterion ids to run");

  int exit_code = kOk;
  try
  {
    try
    {
      app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const &)
    {
      report["help"] = app.help();
      throw;
    }
    catch (CLI::CallForAllHelp const &)
    {
      report["help"] = app.help("", CLI::AppFormatMode::All);
      throw;
    }

    if (char const *env = std::getenv("QENTROPY_SEED"); env != nullptr && *env != '\0')
    {
      run.seed = parse_seed(env, "QENTROPY_SEED");
    }
    if (!seed_flag.empty())
    {
      run.seed = parse_seed(seed_flag, "--seed");
    }

    auto *sub = app.get_subcommands().front();
    report["subcommand"] = sub->get_name();

    if (sub == c_entropy)
    {
      EntropySpec const spec = ent.spec();
      ProbVector const  p    = io::to_prob_vector(inputs.load("dist", dist_path));
      run.results = {{"entropy", io::to_json(spec)}, {"support", p.size()}, {"value", entropy(spec, p)}};
    }
    else if (sub == c_cond)
    {
      EntropySpec const spec  = cond.spec();
      JointTable const  j     = io::to_joint_table(inputs.load("joint", cond_joint));
      Axis const        given = to_axis(cond_given);
      run.results = {{"entropy", io::to_json(spec)},
                     {"given", cond_given},
                     {"value", conditional(spec, j, given)},
                     {"given_entropy", entropy(spec, marginal(j, given))},
                     {"joint_entropy", entropy(spec, j.flatten())}};
    }
    else if (sub == c_chain)
    {
      EntropySpec const spec = ch.spec();
      JointTable const  j    = io::to_joint_table(inputs.load("joint", ch_joint));
      RuleSpec const    rule =
          ch_rule == "additive"
                 ? RuleSpec::additive_chain()
                 : RuleSpec::q_extensive_chain(*ch_rule_q_opt ? ch_rule_q : natural_chain_q(spec));
      Axis const   given = to_axis(ch_given);
      double const res   = chain_residual(spec, j, rule, given);
      double const t     = rule.kind == RuleKind::AdditiveChain ? tol.additive_chain : tol.q_extensive_chain;
      run.results = {{"entropy", io::to_json(spec)},
                     {"rule", to_string(rule.kind)},
                     {"rule_q", rule.param},
                     {"given", ch_given},
                     {"joint_entropy", entropy(spec, j.flatten())},
                     {"given_entropy", entropy(spec, marginal(j, given))},
                     {"conditional_entropy", conditional(spec, j, given)},
                     {"check", verdict(res, t)}};
      run.exit = std::abs(res) <= t ? kOk : kVerifyFailed;
      run.records.push_back({std::string(to_string(rule.kind)), std::string(to_string(spec.family)),
                             spec, rule.param, "", res});
    }
    else if (sub == c_padd)
    {
      EntropySpec const spec = pa.spec();
      ProbVector const  px   = io::to_prob_vector(inputs.load("px", pa_px));
      ProbVector const  py   = io::to_prob_vector(inputs.load("py", pa_py));
      RuleSpec          rule;
      if (pa_rule == "additive")
      {
        rule = RuleSpec::additive();
      }
      else if (pa_rule == "delta")
      {
        if (!*pa_param_opt)
        {
          fail(ErrorCode::InvalidParameters, "--rule delta needs --rule-param");
        }
        rule = RuleSpec::delta_add(pa_param);
      }
      else
      {
        double const q = *pa_param_opt ? pa_param : spec.q;
        rule = pa_rule == "tsallis" ? RuleSpec::tsallis_add(q) : RuleSpec::landsberg_add(q);
      }
      double const res = pseudo_add_residual(spec, px, py, rule);
      run.results = {{"entropy", io::to_json(spec)},
                     {"rule", to_string(rule.kind)},
                     {"rule_param", rule.param},
                     {"hx", entropy(spec, px)},
                     {"hy", entropy(spec, py)},
                     {"hxy", entropy(spec, product_join(px, py).flatten())},
                     {"check", verdict(res, tol.pseudo_additivity)}};
      run.exit = std::abs(res) <= tol.pseudo_additivity ? kOk : kVerifyFailed;
      run.records.push_back({std::string(to_string(rule.kind)), std::string(to_string(spec.family)),
                             spec, rule.param, "", res});
    }
    else if (sub == c_nchain)
    {
      EntropySpec const spec = nc.spec();
      JointTensor const j    = io::to_joint_tensor(inputs.load("joint", nc_joint));
      double const      q    = *nc_rule_q_opt ? nc_rule_q : natural_chain_q(spec);
      auto const        terms = chain_terms(spec, j);
      double const      res   = entropy(spec, j.flatten()) - q_extensive_compose(terms, q);
      run.results = {{"entropy", io::to_json(spec)},
                     {"rule_q", q},
                     {"variables", j.rank()},
                     {"chain_terms", terms},
                     {"joint_entropy", entropy(spec, j.flatten())},
                     {"composed", q_extensive_compose(terms, q)},
                     {"check", verdict(res, tol.n_chain)}};
      run.exit = std::abs(res) <= tol.n_chain ? kOk : kVerifyFailed;
      run.records.push_back({"q_extensive_nchain", std::string(to_string(spec.family)), spec, q, "", res});
    }
    else if (sub == c_escort)
    {
      JointTable const j = io::to_joint_table(inputs.load("joint", es_joint));
      run.results = {{"q", es_q},
                     {"discrepancy", escort_discrepancy(j, es_q)},
                     {"escort_direct", escort_joint_direct(j, es_q).to_rows()},
                     {"escort_composed", escort_joint_composed(j, es_q).to_rows()}};
    }
    else if (sub == c_dz)
    {
      if (!*dz_lambda_opt)
      {
        dz_params.lambda = dz_params.gamma;
      }
      EntropySpec const      base  = dz.spec();
      JointTable const       j     = io::to_joint_table(inputs.load("joint", dz_joint));
      DarotzyTransform const t     = transform(base, dz_params);
      Axis const             given = to_axis(dz_given);
      double const           res   = t.chain_residual(j, given);
      run.results = {{"base", io::to_json(base)},
                     {"a", dz_params.a},
                     {"lambda", dz_params.lambda},
                     {"gamma", dz_params.gamma},
                     {"given", dz_given},
                     {"joint_entropy", t.entropy(j.flatten())},
                     {"given_entropy", t.entropy(marginal(j, given))},
                     {"conditional_entropy", t.conditional(j, given)},
                     {"check", verdict(res, tol.transform_chain)}};
      run.exit = std::abs(res) <= tol.transform_chain ? kOk : kVerifyFailed;
      run.records.push_back({"darotzy_chain", std::string(to_string(base.family)), base,
                             dz_params.gamma, "", res});
    }
    else if (sub == c_classify)
    {
      SamplerConfig cfg;
      cfg.trials      = cl_trials;
      cfg.min_dim     = cl_min_dim;
      cfg.max_dim     = cl_max_dim;
      cfg.seed        = run.seed;
      cfg.composition = cl_correlated ? Composition::Correlated : Composition::Independent;
      cfg.tolerance   = tol.landsberg;
      EntropySpec const  spec = cl.spec();
      ClassVerdict const v    = classify(spec, cfg);
      run.results             = io::to_json(v);
      run.results["entropy"]  = io::to_json(spec);
      run.exit                = v.impossible ? kVerifyFailed : kOk;
    }
    else if (sub == c_verify)
    {
      verify::SuiteConfig cfg;
      cfg.seed    = run.seed;
      cfg.samples = va_samples;
      cfg.tol     = tol;
      if (va_only.empty())
      {
        for (int id = 1; id <= verify::kCriterionCount; ++id)
        {
          va_only.push_back(id);
        }
      }
      json criteria = json::array();
      int  failed   = 0;
      for (int id : va_only)
      {
        auto const r = verify::run_criterion(id, cfg);
        failed += r.pass() ? 0 : 1;
        criteria.push_back(verify::to_json(r));
      }
      run.results = {{"criteria", criteria}, {"failed", failed}, {"all_pass", failed == 0}};
      run.exit    = failed == 0 ? kOk : kVerifyFailed;
    }

    if (!records_path.empty())
    {
      for (auto &r : run.records)
      {
        r.input_digest = inputs.digest();
      }
      std::ofstream out(records_path, std::ios::binary | std::ios::trunc);
      if (!out)
      {
        fail(ErrorCode::ParseError, records_path + ": cannot open for writing");
      }
      out << io::to_json_lines(run.records);
    }

    report["results"] = run.results;
    exit_code         = run.exit;
  }
  catch (CLI::ParseError const &e)
  {
    exit_code = e.get_exit_code() == 0 ? kOk : kParameterError;
    if (exit_code != kOk)
    {
      report["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    }
  }
  catch (Error const &e)
  {
    exit_code       = e.is_parameter_error() ? kParameterError : kInputError;
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  catch (std::exception const &e)
  {
    exit_code       = kInputError;
    report["error"] = {{"code", "Internal"}, {"message", e.what()}};
  }

  static char const *const status[] = {"ok", "verification_failed", "input_error", "parameter_error"};
  report["status"]        = status[exit_code];
  report["exit_code"]     = exit_code;
  report["inputs"]        = inputs.files();
  report["inputs_digest"] = inputs.digest();
  report["tolerances"]    = verify::to_json(tol);
  report["seed"]          = run.seed;
  report["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << report.dump(2) << '\n';
  return exit_code;
}
