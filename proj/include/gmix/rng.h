// Copyright 2026 The gmix Authors.
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

#ifndef GMIX_RNG_H_
#define GMIX_RNG_H_

#include <cstdint>
#include <random>

namespace gmix {

// Seedable generator with a platform-independent stream. std::mt19937_64 is
// fully specified by the standard; the std:: distributions are not, so all
// variates are derived here from raw 64-bit words.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t below(uint64_t bound);

  // Uniform integer in [lo, hi], inclusive.
  int64_t between(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double p) { return uniform() < p; }

  uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Mixes (seed, stream) into an independent child seed (splitmix64 finalizer).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

}  // namespace gmix

#endif  // GMIX_RNG_H_
