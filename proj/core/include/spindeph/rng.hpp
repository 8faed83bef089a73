// Copyright 2026 The spindeph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace spindeph {

/// Derives a well-mixed stream key from a base seed and a stream index
/// (splitmix64 finalizer). Used to give every shot, sweep point and
/// bootstrap resample its own independent, reproducible stream.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

/// Small counter-style PRNG (splitmix64). Sampling helpers consume the
/// stream in a fixed documented order so results are bit-reproducible for a
/// given (seed, stream) regardless of execution order or thread count.
/// std::* distributions are deliberately not used: their draw sequences are
/// implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_oc();
  /// Uniform on [0, 1).
  double uniform_co();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Box-Muller (cosine branch); consumes exactly two uniforms.
  double normal(double mean, double stddev);
  /// Exponential with the given mean; consumes one uniform.
  double exponential(double mean);
  /// Sum of n Bernoulli(p) draws; consumes exactly n uniforms.
  int binomial(int n, double p);
  /// Poisson draw; inversion for small means, PTRD rejection for large.
  long poisson(double mean);

 private:
  std::uint64_t state_;
};

}  // namespace spindeph
