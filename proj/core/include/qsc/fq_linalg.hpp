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

#ifndef QSC_FQ_LINALG_HPP
#define QSC_FQ_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "qsc/field.hpp"

namespace qsc {

/// Dense matrix over an arbitrary GF(q).
class FqMat {
  public:
    FqMat() = default;
    FqMat(FieldPtr field, std::size_t rows, std::size_t cols);
    static FqMat from_rows(FieldPtr field, std::vector<std::vector<FieldElement>> rows);

    const FieldPtr &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement &at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const FieldElement &at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    std::vector<FieldElement> row_copy(std::size_t r) const;

    FqMat rref(std::vector<std::size_t> *pivots = nullptr) const;
    std::size_t rank() const;
    FqMat nullspace() const;

    /// One solution x of A x = b (free variables zero), or nullopt.
    std::optional<std::vector<FieldElement>> solve(std::span<const FieldElement> b) const;

    /// Coefficients x with x * A = target (target in the row space), or nullopt.
    std::optional<std::vector<FieldElement>> express_in_rows(
        std::span<const FieldElement> target) const;

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

/// Standard inner product sum_i x_i y_i.
FieldElement dot(std::span<const FieldElement> x, std::span<const FieldElement> y);

/// Hermitian-type pairing <x, y^{p^m}> = sum_i x_i y_i^{p^m}.
FieldElement hermitian_inner(std::span<const FieldElement> x, std::span<const FieldElement> y,
                             uint32_t m);

}  // namespace qsc

#endif
