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

#ifndef QSC_FP_LINALG_HPP
#define QSC_FP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qsc {

// Scalar arithmetic mod a prime p. Inputs need not be reduced.
uint32_t fp_add(uint32_t p, uint64_t a, uint64_t b);
uint32_t fp_sub(uint32_t p, uint64_t a, uint64_t b);
uint32_t fp_mul(uint32_t p, uint64_t a, uint64_t b);
uint32_t fp_neg(uint32_t p, uint64_t a);
uint32_t fp_inv(uint32_t p, uint64_t a);  // throws MathError on 0

/// Dense matrix over the prime field F_p, entries stored reduced in [0, p).
class FpMat {
  public:
    FpMat() = default;
    FpMat(uint32_t p, std::size_t rows, std::size_t cols);
    static FpMat identity(uint32_t p, std::size_t n);
    static FpMat from_rows(uint32_t p, const std::vector<std::vector<uint32_t>> &rows);

    uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint32_t &at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    std::span<const uint32_t> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }

    FpMat mul(const FpMat &other) const;
    FpMat transposed() const;

    /// Reduced row echelon form; optionally reports pivot columns.
    FpMat rref(std::vector<std::size_t> *pivots = nullptr) const;
    std::size_t rank() const;
    std::optional<FpMat> inverse() const;

    /// One solution x of A x = b (free variables set to zero), or nullopt.
    std::optional<std::vector<uint32_t>> solve(std::span<const uint32_t> b) const;

    /// Row basis of the right null space {x : A x^t = 0}.
    FpMat nullspace() const;

    /// Row vector times matrix.
    std::vector<uint32_t> apply_left(std::span<const uint32_t> v) const;

    bool operator==(const FpMat &) const = default;

  private:
    uint32_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> e_;
};

}  // namespace qsc

#endif
