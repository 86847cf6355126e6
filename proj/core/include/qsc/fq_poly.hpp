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

#ifndef QSC_FQ_POLY_HPP
#define QSC_FQ_POLY_HPP

#include <span>
#include <vector>

#include "qsc/field.hpp"

namespace qsc {

/// Dense polynomial over GF(q), little-endian coefficients, kept trimmed
/// (no trailing zero coefficients; the zero polynomial has no coefficients).
class FqPoly {
  public:
    explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
    static FqPoly from_coeffs(FieldPtr field, std::vector<FieldElement> c);
    static FqPoly constant(const FieldElement &c);
    static FqPoly x(FieldPtr field);

    const FieldPtr &field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement> &coeffs() const { return c_; }

    friend FqPoly operator+(const FqPoly &a, const FqPoly &b);
    friend FqPoly operator-(const FqPoly &a, const FqPoly &b);
    friend FqPoly operator*(const FqPoly &a, const FqPoly &b);
    FqPoly scaled(const FieldElement &s) const;
    FqPoly shifted(std::size_t k) const;  // times x^k
    FqPoly mod_xk(std::size_t k) const;   // truncate to degree < k

    /// Quotient and remainder by a nonzero divisor.
    std::pair<FqPoly, FqPoly> divmod(const FqPoly &divisor) const;

    FieldElement eval(const FieldElement &x) const;
    FqPoly derivative() const;

    bool operator==(const FqPoly &) const = default;

  private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

}  // namespace qsc

#endif
