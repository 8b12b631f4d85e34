/*
   Copyright 2026 The qlin authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLIN_RNG_HPP
#define QLIN_RNG_HPP

#include <cstdint>

namespace qlin {

/// splitmix64: tiny deterministic generator for seeded property tests and
/// CLI randomized checks. Identical output on every platform, which the
/// byte-identical-output contract needs (std::uniform_int_distribution is
/// not portable across standard libraries).
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bias is irrelevant at test scales.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

   private:
    std::uint64_t state_;
};

}  // namespace qlin

#endif  // QLIN_RNG_HPP
