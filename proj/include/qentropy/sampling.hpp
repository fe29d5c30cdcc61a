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

#include "qentropy/prob.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qentropy {

// std::mt19937_64 is specified bit-for-bit, the std distributions are not.
// The transforms below keep sampled inputs identical across standard libraries.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index)
  {
    return Rng(splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL)));
  }

  /// Uniform on the open interval (0, 1).
  double uniform()
  {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi)
  {
    std::uint64_t const span  = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t       x;
    do
    {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::size_t>(x % span);
  }

  double exponential()
  {
    return -std::log(uniform());
  }

  /// Symmetric Dirichlet(1), i.e. uniform on the simplex.
  std::vector<double> dirichlet(std::size_t n)
  {
    std::vector<double> w(n);
    for (auto &x : w)
    {
      x = exponential();
    }
    return w;
  }

  ProbVector simplex(std::size_t n)
  {
    return ProbVector::normalize(dirichlet(n));
  }

  JointTable joint(std::size_t rows, std::size_t cols)
  {
    return JointTable::normalize(rows, cols, dirichlet(rows * cols));
  }

  JointTensor tensor(std::vector<std::size_t> shape)
  {
    std::size_t total = 1;
    for (auto s : shape)
    {
      total *= s;
    }
    return JointTensor::normalize(std::move(shape), dirichlet(total));
  }

private:
  static std::uint64_t splitmix64(std::uint64_t x)
  {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace qentropy
