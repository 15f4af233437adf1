// Copyright 2026 The chartclean Authors.
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

// Portable deterministic randomness for splitting and noise injection.
//
// Every seeded decision in the toolkit goes through SplitMix64 so results are
// identical across compilers, standard libraries and platforms (the standard
// <random> distributions are not portable). The generator is the
// SplitMix64 of Steele, Lea and Flood as used to seed the xoshiro family; its
// published reference outputs for seed 1234567 are pinned in random_test.cc.

#ifndef CHARTCLEAN_RANDOM_H_
#define CHARTCLEAN_RANDOM_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace chartclean {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). Rejection sampling: a draw r is accepted
  // when r >= 2^64 mod bound and reduced to r mod bound; smaller draws are
  // discarded. bound must be positive.
  uint64_t Below(uint64_t bound) {
    const uint64_t rejection_floor = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const uint64_t r = Next();
      if (r >= rejection_floor) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

// FNV-1a, 64-bit. Stable identifier hash used to derive per-record seeds.
constexpr uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Fisher-Yates, walking from the back: for i = n-1 down to 1, swap element i
// with element Below(i + 1).
template <typename T>
void Shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.Below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace chartclean

#endif  // CHARTCLEAN_RANDOM_H_
