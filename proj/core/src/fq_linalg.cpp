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

#include "qsc/fq_linalg.hpp"

#include "qsc/errors.hpp"

namespace qsc {

FqMat::FqMat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    e_.assign(rows_ * cols_, field_->zero());
}

FqMat FqMat::from_rows(FieldPtr field, std::vector<std::vector<FieldElement>> rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    FqMat m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw MathError("ragged rows in FqMat::from_rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            m.at(r, c) = std::move(rows[r][c]);
        }
    }
    return m;
}

std::vector<FieldElement> FqMat::row_copy(std::size_t r) const {
    return std::vector<FieldElement>(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                     e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FqMat FqMat::rref(std::vector<std::size_t> *pivots) const {
    FqMat m = *this;
    if (pivots) {
        pivots->clear();
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; col++) {
        std::size_t piv = lead;
        while (piv < rows_ && m.at(piv, col).is_zero()) {
            piv++;
        }
        if (piv == rows_) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; c++) {
            std::swap(m.at(piv, c), m.at(lead, c));
        }
        FieldElement inv = m.at(lead, col).inv();
        for (std::size_t c = 0; c < cols_; c++) {
            m.at(lead, c) = m.at(lead, c) * inv;
        }
        for (std::size_t r = 0; r < rows_; r++) {
            if (r == lead || m.at(r, col).is_zero()) {
                continue;
            }
            FieldElement f = m.at(r, col);
            for (std::size_t c = 0; c < cols_; c++) {
                m.at(r, c) = m.at(r, c) - f * m.at(lead, c);
            }
        }
        if (pivots) {
            pivots->push_back(col);
        }
        lead++;
    }
    return m;
}

std::size_t FqMat::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

FqMat FqMat::nullspace() const {
    std::vector<std::size_t> piv;
    FqMat red = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : piv) {
        is_pivot[c] = true;
    }
    FqMat basis(field_, cols_ - piv.size(), cols_);
    std::size_t bi = 0;
    for (std::size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        basis.at(bi, free) = field_->one();
        for (std::size_t i = 0; i < piv.size(); i++) {
            basis.at(bi, piv[i]) = -red.at(i, free);
        }
        bi++;
    }
    return basis;
}

std::optional<std::vector<FieldElement>> FqMat::solve(std::span<const FieldElement> b) const {
    if (b.size() != rows_) {
        throw MathError("rhs length mismatch in FqMat::solve");
    }
    FqMat aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            aug.at(i, j) = at(i, j);
        }
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    FqMat red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) {
        return std::nullopt;
    }
    std::vector<FieldElement> x(cols_, field_->zero());
    for (std::size_t i = 0; i < piv.size(); i++) {
        x[piv[i]] = red.at(i, cols_);
    }
    return x;
}

std::optional<std::vector<FieldElement>> FqMat::express_in_rows(
    std::span<const FieldElement> target) const {
    if (target.size() != cols_) {
        throw MathError("target length mismatch in FqMat::express_in_rows");
    }
    // x * A = target  <=>  A^t x^t = target^t
    FqMat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            t.at(j, i) = at(i, j);
        }
    }
    return t.solve(target);
}

FieldElement dot(std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size() || x.empty()) {
        throw MathError("length mismatch in dot");
    }
    FieldElement acc = x[0].field()->zero();
    for (std::size_t i = 0; i < x.size(); i++) {
        acc = acc + x[i] * y[i];
    }
    return acc;
}

FieldElement hermitian_inner(std::span<const FieldElement> x, std::span<const FieldElement> y,
                             uint32_t m) {
    if (x.size() != y.size() || x.empty()) {
        throw MathError("length mismatch in hermitian_inner");
    }
    FieldElement acc = x[0].field()->zero();
    for (std::size_t i = 0; i < x.size(); i++) {
        acc = acc + x[i] * y[i].frobenius(m);
    }
    return acc;
}

}  // namespace qsc
