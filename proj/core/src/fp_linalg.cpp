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

#include "qsc/fp_linalg.hpp"

#include "qsc/errors.hpp"

namespace qsc {

uint32_t fp_add(uint32_t p, uint64_t a, uint64_t b) {
    return static_cast<uint32_t>((a % p + b % p) % p);
}

uint32_t fp_sub(uint32_t p, uint64_t a, uint64_t b) {
    return static_cast<uint32_t>((a % p + p - b % p) % p);
}

uint32_t fp_mul(uint32_t p, uint64_t a, uint64_t b) {
    return static_cast<uint32_t>(((a % p) * (b % p)) % p);
}

uint32_t fp_neg(uint32_t p, uint64_t a) {
    return static_cast<uint32_t>((p - a % p) % p);
}

uint32_t fp_inv(uint32_t p, uint64_t a) {
    a %= p;
    if (a == 0) {
        throw MathError("division by zero in F_p");
    }
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) {
        t += p;
    }
    return static_cast<uint32_t>(t);
}

FpMat::FpMat(uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

FpMat FpMat::identity(uint32_t p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

FpMat FpMat::from_rows(uint32_t p, const std::vector<std::vector<uint32_t>> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    FpMat m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw MathError("ragged rows in FpMat::from_rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            m.at(r, c) = rows[r][c] % p;
        }
    }
    return m;
}

FpMat FpMat::mul(const FpMat &other) const {
    if (cols_ != other.rows_ || p_ != other.p_) {
        throw MathError("dimension mismatch in FpMat::mul");
    }
    FpMat out(p_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t k = 0; k < cols_; k++) {
            uint64_t v = at(i, k);
            if (v == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; j++) {
                out.at(i, j) = static_cast<uint32_t>((out.at(i, j) + v * other.at(k, j)) % p_);
            }
        }
    }
    return out;
}

FpMat FpMat::transposed() const {
    FpMat out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

FpMat FpMat::rref(std::vector<std::size_t> *pivots) const {
    FpMat m = *this;
    if (pivots) {
        pivots->clear();
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; col++) {
        std::size_t piv = lead;
        while (piv < rows_ && m.at(piv, col) == 0) {
            piv++;
        }
        if (piv == rows_) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; c++) {
            std::swap(m.at(piv, c), m.at(lead, c));
        }
        uint32_t inv = fp_inv(p_, m.at(lead, col));
        for (std::size_t c = 0; c < cols_; c++) {
            m.at(lead, c) = fp_mul(p_, m.at(lead, c), inv);
        }
        for (std::size_t r = 0; r < rows_; r++) {
            if (r == lead || m.at(r, col) == 0) {
                continue;
            }
            uint32_t f = m.at(r, col);
            for (std::size_t c = 0; c < cols_; c++) {
                m.at(r, c) = fp_sub(p_, m.at(r, c), fp_mul(p_, f, m.at(lead, c)));
            }
        }
        if (pivots) {
            pivots->push_back(col);
        }
        lead++;
    }
    return m;
}

std::size_t FpMat::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

std::optional<FpMat> FpMat::inverse() const {
    if (rows_ != cols_) {
        return std::nullopt;
    }
    // Row-reduce [A | I].
    FpMat aug(p_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            aug.at(i, j) = at(i, j);
        }
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<std::size_t> piv;
    FpMat red = aug.rref(&piv);
    if (piv.size() != rows_ || piv.back() >= cols_) {
        return std::nullopt;
    }
    FpMat inv(p_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            inv.at(i, j) = red.at(i, cols_ + j);
        }
    }
    return inv;
}

std::optional<std::vector<uint32_t>> FpMat::solve(std::span<const uint32_t> b) const {
    if (b.size() != rows_) {
        throw MathError("rhs length mismatch in FpMat::solve");
    }
    FpMat aug(p_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            aug.at(i, j) = at(i, j);
        }
        aug.at(i, cols_) = b[i] % p_;
    }
    std::vector<std::size_t> piv;
    FpMat red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) {
        return std::nullopt;  // inconsistent
    }
    std::vector<uint32_t> x(cols_, 0);
    for (std::size_t i = 0; i < piv.size(); i++) {
        x[piv[i]] = red.at(i, cols_);
    }
    return x;
}

FpMat FpMat::nullspace() const {
    std::vector<std::size_t> piv;
    FpMat red = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : piv) {
        is_pivot[c] = true;
    }
    FpMat basis(p_, cols_ - piv.size(), cols_);
    std::size_t bi = 0;
    for (std::size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        basis.at(bi, free) = 1;
        for (std::size_t i = 0; i < piv.size(); i++) {
            basis.at(bi, piv[i]) = fp_neg(p_, red.at(i, free));
        }
        bi++;
    }
    return basis;
}

std::vector<uint32_t> FpMat::apply_left(std::span<const uint32_t> v) const {
    if (v.size() != rows_) {
        throw MathError("vector length mismatch in FpMat::apply_left");
    }
    std::vector<uint32_t> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; i++) {
        uint64_t s = v[i] % p_;
        if (s == 0) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; j++) {
            out[j] = static_cast<uint32_t>((out[j] + s * at(i, j)) % p_);
        }
    }
    return out;
}

}  // namespace qsc
