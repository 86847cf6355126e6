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

#include "qsc/fq_poly.hpp"

#include "qsc/errors.hpp"

namespace qsc {

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

FqPoly FqPoly::from_coeffs(FieldPtr field, std::vector<FieldElement> c) {
    FqPoly p(std::move(field));
    p.c_ = std::move(c);
    p.trim();
    return p;
}

FqPoly FqPoly::constant(const FieldElement &c) {
    FqPoly p(c.field());
    if (!c.is_zero()) {
        p.c_ = {c};
    }
    return p;
}

FqPoly FqPoly::x(FieldPtr field) {
    FqPoly p(field);
    p.c_ = {field->zero(), field->one()};
    return p;
}

FieldElement FqPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_->zero();
}

FqPoly operator+(const FqPoly &a, const FqPoly &b) {
    FqPoly out(a.field_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
    for (std::size_t i = 0; i < out.c_.size(); i++) {
        out.c_[i] = a.coeff(i) + b.coeff(i);
    }
    out.trim();
    return out;
}

FqPoly operator-(const FqPoly &a, const FqPoly &b) {
    FqPoly out(a.field_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
    for (std::size_t i = 0; i < out.c_.size(); i++) {
        out.c_[i] = a.coeff(i) - b.coeff(i);
    }
    out.trim();
    return out;
}

FqPoly operator*(const FqPoly &a, const FqPoly &b) {
    FqPoly out(a.field_);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    out.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_->zero());
    for (std::size_t i = 0; i < a.c_.size(); i++) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); j++) {
            out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
        }
    }
    out.trim();
    return out;
}

FqPoly FqPoly::scaled(const FieldElement &s) const {
    FqPoly out(field_);
    if (s.is_zero()) {
        return out;
    }
    out.c_ = c_;
    for (auto &v : out.c_) {
        v = v * s;
    }
    out.trim();
    return out;
}

FqPoly FqPoly::shifted(std::size_t k) const {
    FqPoly out(field_);
    if (is_zero()) {
        return out;
    }
    out.c_.assign(k, field_->zero());
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

FqPoly FqPoly::mod_xk(std::size_t k) const {
    FqPoly out(field_);
    out.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(k, c_.size())));
    out.trim();
    return out;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly &divisor) const {
    if (divisor.is_zero()) {
        throw MathError("polynomial division by zero");
    }
    FqPoly q(field_), r = *this;
    int dd = divisor.degree();
    FieldElement lead_inv = divisor.c_.back().inv();
    if (r.degree() >= dd) {
        q.c_.assign(static_cast<std::size_t>(r.degree() - dd + 1), field_->zero());
    }
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        FieldElement f = r.c_.back() * lead_inv;
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (int i = 0; i <= dd; i++) {
            std::size_t ri = static_cast<std::size_t>(shift + i);
            r.c_[ri] = r.c_[ri] - f * divisor.c_[static_cast<std::size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

FieldElement FqPoly::eval(const FieldElement &x) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

FqPoly FqPoly::derivative() const {
    FqPoly out(field_);
    if (c_.size() < 2) {
        return out;
    }
    out.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); i++) {
        out.c_.push_back(field_->from_scalar(i % field_->p()) * c_[i]);
    }
    out.trim();
    return out;
}

}  // namespace qsc
