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
 * File forms
 *
 *   ProbVector   JSON flat array            [0.5, 0.5]
 *                CSV single row or column   0.5,0.5
 *   JointTable   JSON nested rows           [[0.4,0.1],[0.1,0.4]]
 *                CSV one line per row
 *   JointTensor  JSON nested arrays of any depth >= 2, rectangular
 *
 * The format is sniffed: text starting with '[' is JSON, anything else CSV.
 * CSV lines that are blank or start with '#' are skipped.
 */

#include "qentropy/chain.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/landsberg.hpp"
#include "qentropy/prob.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qentropy::io {

/// Rectangular numeric array: shape plus row-major values.
struct NumericArray
{
  std::vector<std::size_t> shape;
  std::vector<double>      values;
};

namespace detail {

inline void flatten_json(nlohmann::json const &node, std::size_t depth, NumericArray &out,
                         std::string const &source)
{
  if (node.is_array())
  {
    if (node.empty())
    {
      fail(ErrorCode::ParseError, source + ": empty array at depth " + std::to_string(depth));
    }
    if (depth == out.shape.size())
    {
      out.shape.push_back(node.size());
    }
    else if (depth > out.shape.size() || out.shape[depth] != node.size())
    {
      fail(ErrorCode::ParseError,
           source + ": ragged array at depth " + std::to_string(depth));
    }
    for (auto const &child : node)
    {
      flatten_json(child, depth + 1, out, source);
    }
    return;
  }
  if (!node.is_number())
  {
    fail(ErrorCode::ParseError, source + ": non-numeric entry at depth " + std::to_string(depth));
  }
  if (depth != out.shape.size())
  {
    fail(ErrorCode::ParseError, source + ": ragged array at depth " + std::to_string(depth));
  }
  out.values.push_back(node.get<double>());
}

inline std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline NumericArray parse_csv(std::string_view text, std::string const &source)
{
  std::vector<std::vector<double>> rows;
  std::size_t                      line_no = 0;
  std::size_t                      pos     = 0;
  while (pos <= text.size())
  {
    auto const end  = text.find('\n', pos);
    auto const line = trim(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
    ++line_no;
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.empty() || line.front() == '#')
    {
      continue;
    }
    std::vector<double> row;
    std::size_t         col = 0;
    std::size_t         fp  = 0;
    while (fp <= line.size())
    {
      auto const comma = line.find(',', fp);
      auto const field = trim(line.substr(fp, comma == std::string_view::npos ? line.npos : comma - fp));
      ++col;
      double v = 0.0;
      auto const [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      {
        fail(ErrorCode::ParseError, source + ": line " + std::to_string(line_no) + ", field " +
                                        std::to_string(col) + ": not a number '" +
                                        std::string(field) + "'");
      }
      row.push_back(v);
      fp = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
    }
    if (!rows.empty() && rows.front().size() != row.size())
    {
      fail(ErrorCode::ParseError, source + ": line " + std::to_string(line_no) + " has " +
                                      std::to_string(row.size()) + " fields, expected " +
                                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty())
  {
    fail(ErrorCode::ParseError, source + ": no data rows");
  }
  NumericArray out;
  out.shape = {rows.size(), rows.front().size()};
  for (auto const &r : rows)
  {
    out.values.insert(out.values.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace detail

inline NumericArray parse_array(std::string_view text, std::string const &source = "<input>")
{
  auto const first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
  {
    fail(ErrorCode::ParseError, source + ": empty input");
  }
  if (text[first] != '[')
  {
    return detail::parse_csv(text, source);
  }
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(text);
  }
  catch (nlohmann::json::parse_error const &e)
  {
    fail(ErrorCode::ParseError,
         source + ": JSON error at byte offset " + std::to_string(e.byte) + ": " + e.what());
  }
  NumericArray out;
  detail::flatten_json(doc, 0, out, source);
  return out;
}

inline std::string read_text(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    fail(ErrorCode::ParseError, path + ": cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProbVector to_prob_vector(NumericArray const &a)
{
  bool const flat = a.shape.size() == 1 ||
                    (a.shape.size() == 2 && (a.shape[0] == 1 || a.shape[1] == 1));
  if (!flat)
  {
    fail(ErrorCode::ShapeMismatch, "expected a flat array of weights");
  }
  return ProbVector::normalize(a.values);
}

inline JointTable to_joint_table(NumericArray const &a)
{
  if (a.shape.size() != 2)
  {
    fail(ErrorCode::ShapeMismatch, "expected a 2-D table of nested rows");
  }
  return JointTable::normalize(a.shape[0], a.shape[1], a.values);
}

inline JointTensor to_joint_tensor(NumericArray const &a)
{
  if (a.shape.size() < 2)
  {
    fail(ErrorCode::ShapeMismatch, "expected an array with at least two axes");
  }
  return JointTensor::normalize(a.shape, a.values);
}

inline ProbVector load_prob_vector(std::string const &path)
{
  return to_prob_vector(parse_array(read_text(path), path));
}

inline JointTable load_joint_table(std::string const &path)
{
  return to_joint_table(parse_array(read_text(path), path));
}

inline JointTensor load_joint_tensor(std::string const &path)
{
  return to_joint_tensor(parse_array(read_text(path), path));
}

// ---------------------------------------------------------------------------
// JSON serialization

inline nlohmann::json to_json(EntropySpec const &s)
{
  nlohmann::json j = {{"family", std::string(to_string(s.family))}};
  switch (s.family)
  {
  case Family::Shannon:
    break;
  case Family::BeharaChawla:
    j["gamma"] = s.gamma;
    j["q"]     = s.q;
    break;
  case Family::SharmaMittal:
  case Family::FrankDaffertshofer:
    j["q"] = s.q;
    j["r"] = s.r;
    break;
  default:
    j["q"] = s.q;
  }
  return j;
}

inline EntropySpec entropy_spec_from_json(nlohmann::json const &j)
{
  auto const name = j.at("family").get<std::string>();
  auto const fam  = parse_family(name);
  if (!fam)
  {
    fail(ErrorCode::InvalidParameters, "unknown entropy family '" + name + "'");
  }
  return EntropySpec::of(*fam, j.value("q", 1.0), j.value("r", 1.0), j.value("gamma", 1.0));
}

inline nlohmann::json to_json(ResidualRecord const &r)
{
  return {{"rule", r.rule},
          {"family", r.family},
          {"parameters", to_json(r.spec)},
          {"rule_param", r.rule_param},
          {"input_digest", r.input_digest},
          {"residual", r.residual}};
}

/// One JSON object per line.
inline std::string to_json_lines(std::vector<ResidualRecord> const &records)
{
  std::string out;
  for (auto const &r : records)
  {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(PropertyVerdict const &v)
{
  nlohmann::json j = {{"property", std::string(to_string(v.property))},
                      {"verdict", v.holds ? "holds-on-samples" : "violated"},
                      {"samples_used", v.samples_used}};
  if (v.counterexample)
  {
    auto const &c           = *v.counterexample;
    nlohmann::json cj       = {{"inputs", c.inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"gap", c.gap}};
    if (v.property == Property::Homogeneity)
    {
      cj["copies"] = c.copies;
    }
    if (v.property == Property::Concavity)
    {
      cj["mix"] = c.mix;
    }
    j["counterexample"] = std::move(cj);
  }
  return j;
}

inline nlohmann::json to_json(ClassVerdict const &v)
{
  return {{"class_label", v.class_label},
          {"impossible_class", v.impossible},
          {"composition", v.composition == Composition::Independent ? "independent" : "correlated"},
          {"seed", v.seed},
          {"samples_used", v.samples_used},
          {"superadditive", to_json(v.superadditive)},
          {"homogeneous", to_json(v.homogeneous)},
          {"concave", to_json(v.concave)}};
}

}  // namespace qentropy::io
