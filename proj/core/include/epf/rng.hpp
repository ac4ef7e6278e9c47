// Copyright 2026 The epf authors
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

#ifndef EPF_RNG_HPP
#define EPF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace epf {

/// What a derived stream is consumed for. Keeping purposes on separate
/// streams means two algorithms that share a subset of draws (e.g. the
/// Liu-West filter at rho=1 versus the augmented-state SIR) consume
/// identical bits for the shared part regardless of what else they draw.
enum class StreamPurpose : std::uint64_t {
  kInitState = 1,
  kInitTheta = 2,
  kTransitionNoise = 3,
  kObservationNoise = 4,
  kParamSampler = 5,
  kPerturbation = 6,
  kResample = 7,
  kGeneric = 8,
};

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + kGolden + (h << 6) + (h >> 2)));
}

}  // namespace detail

/// Counter-based pseudo-random stream (splitmix64). A stream is a pure
/// function of its key, so any (seed, t, particle, purpose) tuple can be
/// replayed independently of execution order or thread scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(detail::mix64(key ^ detail::kGolden)) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform draw strictly inside (0, 1); never returns 0, so log(u) is safe.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    cached_ = r * std::sin(phi);
    have_cached_ = true;
    return r * std::cos(phi);
  }

  /// Cauchy(0, gamma) via the inverse CDF: gamma * tan(pi * (u - 1/2)).
  double cauchy(double gamma) {
    return gamma * std::tan(std::numbers::pi * (uniform() - 0.5));
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Derives the stream for (seed, time step, particle index, purpose).
inline RngStream make_stream(std::uint64_t seed, std::uint64_t t, std::uint64_t particle,
                             StreamPurpose purpose) {
  std::uint64_t h = detail::mix64(seed);
  h = detail::combine(h, t);
  h = detail::combine(h, particle);
  h = detail::combine(h, static_cast<std::uint64_t>(purpose));
  return RngStream(h);
}

}  // namespace epf

#endif  // EPF_RNG_HPP
