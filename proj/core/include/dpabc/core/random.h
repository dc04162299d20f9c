//
// Copyright 2026 The dpabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPABC_CORE_RANDOM_H_
#define DPABC_CORE_RANDOM_H_

#include <cstdint>
#include <random>

namespace dpabc {

struct RandomSeed {
  uint64_t value = 0;
};

// Bit-reproducible uniform source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; doubles are built from the top 53 bits
// of each draw, so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(RandomSeed seed) : engine_(seed.value) {}

  uint64_t NextBits() { return engine_(); }
  // Uniform in [0, 1).
  double NextDouble();
  // Uniform integer in [0, bound). bound must be positive.
  uint64_t NextBelow(uint64_t bound);
  // True with probability p.
  bool Bernoulli(double p) { return NextDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dpabc

#endif  // DPABC_CORE_RANDOM_H_
