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

#ifndef QSC_LINEAR_CODE_HPP
#define QSC_LINEAR_CODE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsc/fq_linalg.hpp"

namespace qsc {

/// Default cap on full codeword enumeration (min_weight and friends).
constexpr uint64_t kDefaultEnumBound = 1ull << 24;

/// A classical [n, r] linear code over GF(q), held as a row-reduced
/// generator matrix. Immutable.
class LinearCode {
  public:
    /// Rows are reduced to RREF; dependent rows are dropped.
    static LinearCode from_rows(FieldPtr field, uint32_t n,
                                std::vector<std::vector<FieldElement>> rows);
    static LinearCode zero_code(FieldPtr field, uint32_t n);
    static LinearCode full_space(FieldPtr field, uint32_t n);

    const FieldPtr &field() const { return field_; }
    uint32_t length() const { return n_; }
    uint32_t dim() const { return static_cast<uint32_t>(gen_.size()); }
    const std::vector<std::vector<FieldElement>> &generator_rows() const { return gen_; }

    bool contains(std::span<const FieldElement> word) const;
    bool sub_code_of(const LinearCode &other) const;
    bool same_code_as(const LinearCode &other) const;

    /// Number of codewords q^r; throws BoundError past the given cap.
    uint64_t codeword_count(uint64_t bound = kDefaultEnumBound) const;

    /// Calls fn for every codeword, including zero (message-space order).
    void for_each_codeword(const std::function<void(std::span<const FieldElement>)> &fn,
                           uint64_t bound = kDefaultEnumBound) const;

    /// Standard dual: [n, n-r] code with all cross pairings zero.
    LinearCode dual() const;

    /// Entrywise Frobenius x -> x^{p^j}; same dimension.
    LinearCode conjugate(uint32_t frobenius_power) const;

    /// True iff <x, y^{p^m}> = 0 for all generator pairs. Requires the field
    /// degree to be even (q = p^{2m}).
    bool is_hermitian_self_orthogonal() const;
    /// Reports the first violating generator pair, if any.
    bool hermitian_violation(std::pair<uint32_t, uint32_t> *pair_out) const;

    /// Exact minimum nonzero Hamming weight by full enumeration.
    /// Throws MathError for the zero code, BoundError past the cap.
    uint32_t min_weight(uint64_t bound = kDefaultEnumBound) const;

    /// Minimum Hamming weight over (this) \ (sub); sub must be a subcode.
    uint32_t min_weight_diff(const LinearCode &sub, uint64_t bound = kDefaultEnumBound) const;

  private:
    LinearCode(FieldPtr f, uint32_t n, std::vector<std::vector<FieldElement>> gen)
        : field_(std::move(f)), n_(n), gen_(std::move(gen)) {}

    FieldPtr field_;
    uint32_t n_;
    std::vector<std::vector<FieldElement>> gen_;
};

/// Syndrome (<h_1, e>, ..., <h_r, e>) of a word against check rows.
std::vector<FieldElement> syndrome_of(const std::vector<std::vector<FieldElement>> &check_rows,
                                      std::span<const FieldElement> word);

}  // namespace qsc

#endif
