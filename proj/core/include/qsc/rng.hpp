// Copyright 2026 The qsc authors
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

#ifndef QSC_RNG_HPP
#define QSC_RNG_HPP

#include <cstdint>

namespace qsc {

/// Counter-based splitmix64 stream: the sequence is a pure function of
/// (seed, stream), so per-trial streams are reproducible no matter how
/// trials are scheduled.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream) {
        state_ = seed ^ (0x9E3779B97F4A7C15ull * (stream + 0x632BE59BD9B4E019ull));
        next();
        next();
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection (n > 0).
    uint64_t below(uint64_t n) {
        uint64_t limit = ~0ull - ~0ull % n;
        uint64_t v = next();
        while (v >= limit) {
            v = next();
        }
        return v % n;
    }

    /// Uniform double in [0, 1).
    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

  private:
    uint64_t state_;
};

}  // namespace qsc

#endif
