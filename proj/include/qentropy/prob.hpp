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
 * Finite discrete distributions.
 *
 *   ProbVector   normalized weights p_i
 *   JointTable   2-D joint r_kl, rows are X (index k), columns are Y (index l)
 *   JointTensor  N-D joint over X_1..X_n, row-major with X_1 slowest
 *
 * All values are immutable after construction. Construction either
 * renormalizes once (normalize / from_rows) or checks that the input is
 * already normalized to kNormTolerance (from_normalized).
 */

#include "qentropy/errors.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace qentropy {

inline constexpr double kNormTolerance = 1e-12;

enum class Axis
{
  X,
  Y
};

namespace detail {

inline double validated_sum(std::span<double const> raw)
{
  if (raw.empty())
  {
    fail(ErrorCode::EmptyInput, "distribution has no weights");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i)
  {
    double const w = raw[i];
    if (!std::isfinite(w))
    {
      fail(ErrorCode::NegativeWeight, "weight " + std::to_string(i) + " is not finite");
    }
    if (w < 0.0)
    {
      fail(ErrorCode::NegativeWeight, "weight " + std::to_string(i) + " is negative");
    }
    sum += w;
  }
  if (!(sum > 0.0))
  {
    fail(ErrorCode::ZeroMass, "weights sum to zero");
  }
  return sum;
}

inline std::vector<double> divided(std::span<double const> raw, double sum)
{
  std::vector<double> out(raw.begin(), raw.end());
  for (auto &w : out)
  {
    w /= sum;
  }
  return out;
}

inline void check_normalized(std::span<double const> w)
{
  double const sum = validated_sum(w);
  if (std::abs(sum - 1.0) > kNormTolerance)
  {
    fail(ErrorCode::NotNormalized, "weights sum to " + std::to_string(sum));
  }
}

}  // namespace detail

class ProbVector
{
public:
  /// Divides by the sum. Rejects empty input, negative weights and zero mass.
  static ProbVector normalize(std::span<double const> raw)
  {
    double const sum = detail::validated_sum(raw);
    return ProbVector(detail::divided(raw, sum));
  }

  static ProbVector normalize(std::vector<double> const &raw)
  {
    return normalize(std::span<double const>(raw));
  }

  /// Accepts weights as given; they must already sum to one within kNormTolerance.
  static ProbVector from_normalized(std::vector<double> weights)
  {
    detail::check_normalized(weights);
    return ProbVector(std::move(weights));
  }

  static ProbVector uniform(std::size_t n)
  {
    if (n == 0)
    {
      fail(ErrorCode::EmptyInput, "uniform distribution over zero outcomes");
    }
    return ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  /// Point mass at `index` over `n` outcomes.
  static ProbVector point_mass(std::size_t n, std::size_t index)
  {
    if (index >= n)
    {
      fail(ErrorCode::OutOfRange, "point mass index outside support");
    }
    std::vector<double> w(n, 0.0);
    w[index] = 1.0;
    return ProbVector(std::move(w));
  }

  std::span<double const> weights() const noexcept
  {
    return w_;
  }

  std::vector<double> const &to_vector() const noexcept
  {
    return w_;
  }

  std::size_t size() const noexcept
  {
    return w_.size();
  }

  double operator[](std::size_t i) const
  {
    return w_[i];
  }

  bool all_positive() const noexcept
  {
    for (double w : w_)
    {
      if (!(w > 0.0))
      {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(ProbVector const &, ProbVector const &) = default;

private:
  explicit ProbVector(std::vector<double> w)
    : w_(std::move(w))
  {}

  std::vector<double> w_;
};

inline ProbVector normalize_validate(std::span<double const> raw)
{
  return ProbVector::normalize(raw);
}

class JointTable
{
public:
  /// Row-major cells, renormalized once.
  static JointTable normalize(std::size_t rows, std::size_t cols, std::span<double const> cells)
  {
    check_shape(rows, cols, cells.size());
    double const sum = detail::validated_sum(cells);
    return JointTable(rows, cols, detail::divided(cells, sum));
  }

  static JointTable from_normalized(std::size_t rows, std::size_t cols, std::vector<double> cells)
  {
    check_shape(rows, cols, cells.size());
    detail::check_normalized(cells);
    return JointTable(rows, cols, std::move(cells));
  }

  /// Nested row-major form; every row must have the same length.
  static JointTable from_rows(std::vector<std::vector<double>> const &table)
  {
    if (table.empty() || table.front().empty())
    {
      fail(ErrorCode::EmptyInput, "joint table has no cells");
    }
    std::size_t const cols = table.front().size();
    std::vector<double> cells;
    cells.reserve(table.size() * cols);
    for (std::size_t k = 0; k < table.size(); ++k)
    {
      if (table[k].size() != cols)
      {
        fail(ErrorCode::ShapeMismatch, "row " + std::to_string(k) + " has " +
                                           std::to_string(table[k].size()) + " cells, expected " +
                                           std::to_string(cols));
      }
      cells.insert(cells.end(), table[k].begin(), table[k].end());
    }
    return normalize(table.size(), cols, cells);
  }

  std::size_t rows() const noexcept
  {
    return rows_;
  }

  std::size_t cols() const noexcept
  {
    return cols_;
  }

  double operator()(std::size_t k, std::size_t l) const
  {
    return cells_[k * cols_ + l];
  }

  std::span<double const> cells() const noexcept
  {
    return cells_;
  }

  /// The joint viewed as a single distribution over rows*cols outcomes.
  ProbVector flatten() const
  {
    return ProbVector::from_normalized(cells_);
  }

  /// Swaps the roles of X and Y.
  JointTable transposed() const
  {
    std::vector<double> t(cells_.size());
    for (std::size_t k = 0; k < rows_; ++k)
    {
      for (std::size_t l = 0; l < cols_; ++l)
      {
        t[l * rows_ + k] = cells_[k * cols_ + l];
      }
    }
    return JointTable(cols_, rows_, std::move(t));
  }

  std::vector<std::vector<double>> to_rows() const
  {
    std::vector<std::vector<double>> out(rows_);
    for (std::size_t k = 0; k < rows_; ++k)
    {
      out[k].assign(cells_.begin() + static_cast<std::ptrdiff_t>(k * cols_),
                    cells_.begin() + static_cast<std::ptrdiff_t>((k + 1) * cols_));
    }
    return out;
  }

  friend bool operator==(JointTable const &, JointTable const &) = default;

private:
  JointTable(std::size_t rows, std::size_t cols, std::vector<double> cells)
    : rows_(rows)
    , cols_(cols)
    , cells_(std::move(cells))
  {}

  static void check_shape(std::size_t rows, std::size_t cols, std::size_t n)
  {
    if (rows == 0 || cols == 0)
    {
      fail(ErrorCode::EmptyInput, "joint table has an empty axis");
    }
    if (rows * cols != n)
    {
      fail(ErrorCode::ShapeMismatch, "cell count does not match shape");
    }
  }

  std::size_t         rows_;
  std::size_t         cols_;
  std::vector<double> cells_;
};

/// N-dimensional joint over X_1..X_n, row-major (X_1 varies slowest).
class JointTensor
{
public:
  static JointTensor normalize(std::vector<std::size_t> shape, std::span<double const> cells)
  {
    check_shape(shape, cells.size());
    double const sum = detail::validated_sum(cells);
    return JointTensor(std::move(shape), detail::divided(cells, sum));
  }

  static JointTensor from_table(JointTable const &j)
  {
    return JointTensor({j.rows(), j.cols()},
                       std::vector<double>(j.cells().begin(), j.cells().end()));
  }

  std::vector<std::size_t> const &shape() const noexcept
  {
    return shape_;
  }

  std::size_t rank() const noexcept
  {
    return shape_.size();
  }

  std::span<double const> cells() const noexcept
  {
    return cells_;
  }

  ProbVector flatten() const
  {
    return ProbVector::from_normalized(cells_);
  }

  /// Joint of the first `count` variables X_1..X_count, other axes summed out.
  JointTensor leading_marginal(std::size_t count) const
  {
    if (count == 0 || count > rank())
    {
      fail(ErrorCode::OutOfRange, "leading marginal count outside [1, rank]");
    }
    std::size_t inner = 1;
    for (std::size_t i = count; i < rank(); ++i)
    {
      inner *= shape_[i];
    }
    std::vector<double> out(cells_.size() / inner, 0.0);
    for (std::size_t c = 0; c < cells_.size(); ++c)
    {
      out[c / inner] += cells_[c];
    }
    return JointTensor(std::vector<std::size_t>(shape_.begin(),
                                                shape_.begin() + static_cast<std::ptrdiff_t>(count)),
                       std::move(out));
  }

  /// Joint of X_i (rows, 0-based index i >= 1) against the flattened history
  /// X_1..X_{i-1} (columns). Conditioning on the history is `given = Axis::Y`.
  JointTable history_table(std::size_t i) const
  {
    if (i == 0 || i >= rank())
    {
      fail(ErrorCode::OutOfRange, "history table needs 1 <= i < rank");
    }
    JointTensor const lead    = leading_marginal(i + 1);
    std::size_t const target  = shape_[i];
    std::size_t const history = lead.cells_.size() / target;
    std::vector<double> t(lead.cells_.size());
    for (std::size_t h = 0; h < history; ++h)
    {
      for (std::size_t x = 0; x < target; ++x)
      {
        t[x * history + h] = lead.cells_[h * target + x];
      }
    }
    return JointTable::from_normalized(target, history, std::move(t));
  }

private:
  JointTensor(std::vector<std::size_t> shape, std::vector<double> cells)
    : shape_(std::move(shape))
    , cells_(std::move(cells))
  {}

  static void check_shape(std::vector<std::size_t> const &shape, std::size_t n)
  {
    if (shape.empty())
    {
      fail(ErrorCode::EmptyInput, "tensor has no axes");
    }
    std::size_t total = 1;
    for (auto s : shape)
    {
      if (s == 0)
      {
        fail(ErrorCode::EmptyInput, "tensor has an empty axis");
      }
      total *= s;
    }
    if (total != n)
    {
      fail(ErrorCode::ShapeMismatch, "cell count does not match shape");
    }
  }

  std::vector<std::size_t> shape_;
  std::vector<double>      cells_;
};

// ---------------------------------------------------------------------------
// Marginals, conditionals, products

/// Distribution of `axis`: over rows for X, over columns for Y.
inline ProbVector marginal(JointTable const &j, Axis axis)
{
  std::vector<double> m(axis == Axis::X ? j.rows() : j.cols(), 0.0);
  for (std::size_t k = 0; k < j.rows(); ++k)
  {
    for (std::size_t l = 0; l < j.cols(); ++l)
    {
      m[axis == Axis::X ? k : l] += j(k, l);
    }
  }
  return ProbVector::normalize(m);
}

/// Distribution of the other variable given `given == index`.
/// For given = Y this is r_{k|l} = r_kl / p_l.
inline ProbVector conditional_slice(JointTable const &j, Axis given, std::size_t index)
{
  std::size_t const n_given = given == Axis::Y ? j.cols() : j.rows();
  if (index >= n_given)
  {
    fail(ErrorCode::OutOfRange, "conditioning index " + std::to_string(index) + " out of range");
  }
  std::size_t const   n_other = given == Axis::Y ? j.rows() : j.cols();
  std::vector<double> slice(n_other);
  double              mass = 0.0;
  for (std::size_t o = 0; o < n_other; ++o)
  {
    slice[o] = given == Axis::Y ? j(o, index) : j(index, o);
    mass += slice[o];
  }
  if (!(mass > 0.0))
  {
    fail(ErrorCode::ConditionOnNullEvent,
         "conditioning event " + std::to_string(index) + " has zero probability");
  }
  return ProbVector::normalize(slice);
}

inline JointTable product_join(ProbVector const &px, ProbVector const &py)
{
  std::vector<double> cells;
  cells.reserve(px.size() * py.size());
  for (double a : px.weights())
  {
    for (double b : py.weights())
    {
      cells.push_back(a * b);
    }
  }
  return JointTable::normalize(px.size(), py.size(), cells);
}

/// N-fold product p ⊗ p ⊗ ... ⊗ p, flattened.
inline ProbVector product_power(ProbVector const &p, unsigned copies)
{
  if (copies == 0)
  {
    fail(ErrorCode::InvalidParameters, "product power needs at least one copy");
  }
  std::vector<double> acc(p.weights().begin(), p.weights().end());
  for (unsigned c = 1; c < copies; ++c)
  {
    std::vector<double> next;
    next.reserve(acc.size() * p.size());
    for (double a : acc)
    {
      for (double b : p.weights())
      {
        next.push_back(a * b);
      }
    }
    acc = std::move(next);
  }
  return ProbVector::normalize(acc);
}

// ---------------------------------------------------------------------------
// Escort distributions

namespace detail {

inline std::vector<double> escort_weights(std::span<double const> w, double q)
{
  std::vector<double> out(w.size(), 0.0);
  double              sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    if (w[i] > 0.0)
    {
      out[i] = std::pow(w[i], q);
      sum += out[i];
    }
    else if (q <= 0.0)
    {
      fail(ErrorCode::EscortUndefined, "escort of order " + std::to_string(q) +
                                           " undefined with zero weight at " + std::to_string(i));
    }
  }
  for (auto &v : out)
  {
    v /= sum;
  }
  return out;
}

}  // namespace detail

/// rho_q(i) = p_i^q / sum_j p_j^q, with 0^q = 0 for q > 0.
inline ProbVector escort(ProbVector const &p, double q)
{
  if (q == 1.0)
  {
    return p;
  }
  return ProbVector::normalize(detail::escort_weights(p.weights(), q));
}

/// Escort of the joint taken cell by cell: R(q)_kl = r_kl^q / sum r_mn^q.
inline JointTable escort_joint_direct(JointTable const &j, double q)
{
  if (q == 1.0)
  {
    return j;
  }
  return JointTable::normalize(j.rows(), j.cols(), detail::escort_weights(j.cells(), q));
}

/// Joint assembled from the escort of the Y marginal and the escorts of the
/// X|Y slices: rho_q(p)_l * rho_q(r_{.|l})_k.
inline JointTable escort_joint_composed(JointTable const &j, double q)
{
  if (q == 1.0)
  {
    return j;  // p(y) p(x|y) = p(x,y)
  }
  ProbVector const    ey = escort(marginal(j, Axis::Y), q);
  std::vector<double> cells(j.rows() * j.cols(), 0.0);
  for (std::size_t l = 0; l < j.cols(); ++l)
  {
    ProbVector const slice = escort(conditional_slice(j, Axis::Y, l), q);
    for (std::size_t k = 0; k < j.rows(); ++k)
    {
      cells[k * j.cols() + l] = ey[l] * slice[k];
    }
  }
  return JointTable::normalize(j.rows(), j.cols(), cells);
}

/// Total-variation distance between the direct and composed escort joints.
inline double escort_discrepancy(JointTable const &j, double q)
{
  JointTable const direct   = escort_joint_direct(j, q);
  JointTable const composed = escort_joint_composed(j, q);
  double           l1       = 0.0;
  for (std::size_t c = 0; c < direct.cells().size(); ++c)
  {
    l1 += std::abs(direct.cells()[c] - composed.cells()[c]);
  }
  return 0.5 * l1;
}

}  // namespace qentropy
