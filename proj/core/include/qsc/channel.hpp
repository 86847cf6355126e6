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

#ifndef QSC_CHANNEL_HPP
#define QSC_CHANNEL_HPP

#include <iosfwd>
#include <optional>

#include "qsc/decoder.hpp"
#include "qsc/stabilizer_code.hpp"

namespace qsc {

/// Discrete symplectic error channel. fixed_weight corrupts exactly
/// `weight` positions chosen uniformly; iid corrupts each position
/// independently with probability `rate`. Corrupted positions get a uniform
/// nonzero local (a|b) block. Both are conventions: the source model only
/// bounds the number of affected subsystems.
struct ChannelSpec {
    enum class Kind { fixed_weight, iid };
    Kind kind = Kind::fixed_weight;
    uint32_t weight = 1;
    double rate = 0.0;
    uint64_t seed = 1;
};

struct TrialReport {
    uint64_t trials = 0;
    uint64_t successes = 0;  // exact + degenerate
    uint64_t exact_recoveries = 0;
    uint64_t degenerate_recoveries = 0;
    uint64_t detected_failures = 0;
    uint64_t logical_errors = 0;
    double elapsed_sec = 0.0;  // not part of the deterministic output

    /// One-line machine-readable summary (deterministic; no timing).
    std::string summary_line() const;
    /// Multi-line human-readable block (deterministic; no timing).
    std::string text_block() const;
};

/// Deterministic given (spec.seed, trial_index).
SymplecticVector sample_error(const ChannelSpec &spec, uint32_t p, uint32_t m, uint32_t n,
                              uint64_t trial_index);

/// Measurement exponents s_i = alt_inner(generator_i, e), linear in e.
std::vector<uint32_t> measure(const SymplecticVector &e, const StabilizerCode &code);

enum class DecoderChoice { table, bm };

struct SimOptions {
    DecoderChoice decoder = DecoderChoice::table;
    uint64_t table_bound = kDefaultTableBound;
    std::ostream *transcript = nullptr;  // optional line-oriented decode log
};

/// The full cycle per trial: sample -> measure -> convert -> decode ->
/// classify the residual as exact / degenerate (residual in the stabilizer
/// span) / logical error. Reproducible given the seed.
TrialReport run_trials(const StabilizerCode &code, const ChannelSpec &spec, uint64_t n_trials,
                       const SimOptions &opts = {});

/// Same cycle over every error of symplectic weight exactly t.
TrialReport run_exhaustive_weight(const StabilizerCode &code, uint32_t t,
                                  const SimOptions &opts = {});

}  // namespace qsc

#endif
