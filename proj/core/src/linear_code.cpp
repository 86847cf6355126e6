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

#include "qsc/linear_code.hpp"

#include <algorithm>

#include "qsc/errors.hpp"

namespace qsc {

LinearCode LinearCode::from_rows(FieldPtr field, uint32_t n,
                                 std::vector<std::vector<FieldElement>> rows) {
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw MathError("generator row has wrong length");
        }
    }
    std::vector<std::size_t> piv;
    FqMat red = FqMat::from_rows(field, std::move(rows)).rref(&piv);
    std::vector<std::vector<FieldElement>> gen;
    gen.reserve(piv.size());
    for (std::size_t i = 0; i < piv.size(); i++) {
        gen.push_back(red.row_copy(i));
    }
    return LinearCode(std::move(field), n, std::move(gen));
}

LinearCode LinearCode::zero_code(FieldPtr field, uint32_t n) {
    return LinearCode(std::move(field), n, {});
}

LinearCode LinearCode::full_space(FieldPtr field, uint32_t n) {
    std::vector<std::vector<FieldElement>> gen;
    for (uint32_t i = 0; i < n; i++) {
        std::vector<FieldElement> row(n, field->zero());
        row[i] = field->one();
        gen.push_back(std::move(row));
    }
    return LinearCode(std::move(field), n, std::move(gen));
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
    if (word.size() != n_) {
        throw MathError("word length mismatch");
    }
    if (gen_.empty()) {
        return std::all_of(word.begin(), word.end(),
                           [](const FieldElement &x) { return x.is_zero(); });
    }
    auto gen_copy = gen_;
    return FqMat::from_rows(field_, std::move(gen_copy)).express_in_rows(word).has_value();
}

bool LinearCode::sub_code_of(const LinearCode &other) const {
    if (n_ != other.n_) {
        return false;
    }
    return std::all_of(gen_.begin(), gen_.end(),
                       [&](const auto &row) { return other.contains(row); });
}

bool LinearCode::same_code_as(const LinearCode &other) const {
    // RREF generator matrices are canonical.
    return n_ == other.n_ && gen_ == other.gen_;
}

uint64_t LinearCode::codeword_count(uint64_t bound) const {
    uint64_t count = 1;
    for (uint32_t i = 0; i < dim(); i++) {
        if (count > bound / field_->size()) {
            throw BoundError("codeword enumeration bound exceeded");
        }
        count *= field_->size();
    }
    return count;
}

void LinearCode::for_each_codeword(const std::function<void(std::span<const FieldElement>)> &fn,
                                   uint64_t bound) const {
    codeword_count(bound);
    uint32_t r = dim();
    std::vector<uint64_t> msg(r, 0);
    std::vector<FieldElement> word(n_, field_->zero());
    uint64_t q = field_->size();
    while (true) {
        fn(word);
        // Odometer step; incrementally update the word by the changed digit.
        uint32_t pos = 0;
        while (pos < r) {
            msg[pos]++;
            if (msg[pos] < q) {
                break;
            }
            msg[pos] = 0;
            pos++;
        }
        if (pos == r) {
            return;
        }
        // Recompute the word from scratch (desk scale; keeps this simple).
        for (uint32_t c = 0; c < n_; c++) {
            word[c] = field_->zero();
        }
        for (uint32_t i = 0; i < r; i++) {
            if (msg[i] == 0) {
                continue;
            }
            FieldElement s = field_->from_index(msg[i]);
            for (uint32_t c = 0; c < n_; c++) {
                word[c] = word[c] + s * gen_[i][c];
            }
        }
    }
}

LinearCode LinearCode::dual() const {
    if (gen_.empty()) {
        return full_space(field_, n_);
    }
    auto gen_copy = gen_;
    FqMat null = FqMat::from_rows(field_, std::move(gen_copy)).nullspace();
    std::vector<std::vector<FieldElement>> rows;
    for (std::size_t i = 0; i < null.rows(); i++) {
        rows.push_back(null.row_copy(i));
    }
    return from_rows(field_, n_, std::move(rows));
}

LinearCode LinearCode::conjugate(uint32_t frobenius_power) const {
    std::vector<std::vector<FieldElement>> rows = gen_;
    for (auto &row : rows) {
        for (auto &x : row) {
            x = x.frobenius(frobenius_power);
        }
    }
    return from_rows(field_, n_, std::move(rows));
}

bool LinearCode::is_hermitian_self_orthogonal() const {
    return !hermitian_violation(nullptr);
}

bool LinearCode::hermitian_violation(std::pair<uint32_t, uint32_t> *pair_out) const {
    if (field_->k() % 2 != 0) {
        throw MathError("Hermitian pairing requires GF(p^{2m})");
    }
    uint32_t m = field_->k() / 2;
    for (uint32_t i = 0; i < dim(); i++) {
        for (uint32_t j = 0; j < dim(); j++) {
            if (!hermitian_inner(gen_[i], gen_[j], m).is_zero()) {
                if (pair_out) {
                    *pair_out = {i, j};
                }
                return true;
            }
        }
    }
    return false;
}

namespace {
uint32_t hamming_weight(std::span<const FieldElement> w) {
    uint32_t c = 0;
    for (const auto &x : w) {
        c += x.is_zero() ? 0 : 1;
    }
    return c;
}
}  // namespace

uint32_t LinearCode::min_weight(uint64_t bound) const {
    if (gen_.empty()) {
        throw MathError("minimum weight of the zero code is undefined");
    }
    uint32_t best = n_ + 1;
    for_each_codeword(
        [&](std::span<const FieldElement> w) {
            uint32_t wt = hamming_weight(w);
            if (wt != 0) {
                best = std::min(best, wt);
            }
        },
        bound);
    return best;
}

uint32_t LinearCode::min_weight_diff(const LinearCode &sub, uint64_t bound) const {
    if (!sub.sub_code_of(*this)) {
        throw MathError("min_weight_diff: second code is not a subcode");
    }
    if (sub.dim() == dim()) {
        throw MathError("min_weight_diff over an empty difference");
    }
    uint32_t best = n_ + 1;
    bool found = false;
    for_each_codeword(
        [&](std::span<const FieldElement> w) {
            uint32_t wt = hamming_weight(w);
            if (wt == 0 || wt >= best) {
                return;
            }
            if (!sub.contains(w)) {
                best = wt;
                found = true;
            }
        },
        bound);
    if (!found) {
        throw MathError("min_weight_diff: difference is empty (internal error)");
    }
    return best;
}

std::vector<FieldElement> syndrome_of(const std::vector<std::vector<FieldElement>> &check_rows,
                                      std::span<const FieldElement> word) {
    std::vector<FieldElement> s;
    s.reserve(check_rows.size());
    for (const auto &h : check_rows) {
        s.push_back(dot(h, word));
    }
    return s;
}

}  // namespace qsc
