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

#ifndef QSC_FIELD_HPP
#define QSC_FIELD_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qsc/fp_linalg.hpp"

namespace qsc {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^k), stored as its coefficient vector in the power
/// basis of the modulus root: coeffs()[i] is the coefficient of x^i.
///
/// Elements are immutable values. The index of an element is
/// sum_i coeffs[i] * p^i; all deterministic "least element" choices in this
/// library are least-index choices.
class FieldElement {
  public:
    FieldElement() = default;  // detached; any arithmetic on it throws

    const FieldPtr &field() const { return field_; }
    const std::vector<uint32_t> &coeffs() const { return c_; }
    uint64_t index() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement &rhs) const;
    FieldElement operator-(const FieldElement &rhs) const;
    FieldElement operator*(const FieldElement &rhs) const;
    FieldElement operator/(const FieldElement &rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    /// Square-and-multiply power; negative exponents invert first.
    /// pow(0, 0) is 1 by the empty-product convention.
    FieldElement pow(int64_t e) const;

    /// x -> x^{p^j}. frobenius(k) is the identity on GF(p^k).
    FieldElement frobenius(uint32_t j = 1) const;

    /// Order in the multiplicative group; throws on zero.
    uint64_t mult_order() const;

    bool operator==(const FieldElement &other) const;
    bool operator!=(const FieldElement &other) const { return !(*this == other); }

    /// Strict index order within one field (used for deterministic scans).
    bool operator<(const FieldElement &other) const { return index() < other.index(); }

    std::string to_string() const;

  private:
    friend class Field;
    FieldElement(FieldPtr f, std::vector<uint32_t> c) : field_(std::move(f)), c_(std::move(c)) {}

    FieldPtr field_;
    std::vector<uint32_t> c_;
};

/// GF(p^k) for a prime p and k >= 1, represented as F_p[x] modulo a monic
/// irreducible polynomial of degree k.
///
/// Construction is deterministic: Field::create picks the least monic
/// irreducible modulus and the least primitive element in index order, so
/// two runs always agree on every element's coefficient vector. Fields are
/// immutable after creation and safe to share across threads.
/// Creation options for Field.
struct FieldOptions {
    /// Lift the p^k <= 2^20 size bound (arithmetic-only use; exhaustive
    /// scans over such fields are still rejected by their own bounds).
    bool allow_large = false;
};

class Field : public std::enable_shared_from_this<Field> {
  public:
    using Options = FieldOptions;

    /// Field with the lexicographically least (by index) monic irreducible
    /// modulus and least primitive element.
    static FieldPtr create(uint32_t p, uint32_t k, FieldOptions opts = FieldOptions());

    /// Field with an explicit modulus (validated: monic, irreducible).
    /// Modulus is the coefficient list c0..ck with ck = 1.
    static FieldPtr create_with_modulus(uint32_t p, std::vector<uint32_t> modulus,
                                        FieldOptions opts = FieldOptions());

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t size() const { return q_; }
    const std::vector<uint32_t> &modulus() const { return modulus_; }

    /// The stored primitive element omega (least in index order).
    const FieldElement &omega() const { return omega_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_coeffs(std::vector<uint32_t> c) const;  // reduced mod p, length k
    FieldElement from_index(uint64_t idx) const;
    FieldElement from_scalar(uint64_t c) const;  // lift of an F_p value

    /// Structural equality: same p, k and modulus.
    bool same_as(const Field &other) const;

    std::string describe() const;  // one-line reproducibility record

  private:
    Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

    friend class FieldElement;
    std::vector<uint32_t> reduce(std::vector<uint32_t> poly) const;  // mod modulus, mod p
    std::vector<uint32_t> mul_raw(std::span<const uint32_t> a, std::span<const uint32_t> b) const;
    std::vector<uint32_t> inv_raw(std::span<const uint32_t> a) const;

    uint32_t p_, k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    FieldElement omega_;
    std::vector<uint64_t> order_prime_factors_;  // prime factors of q-1
};

/// Least element of multiplicative order p^k - 1 in index order.
FieldElement find_primitive(const FieldPtr &field);

/// A normal basis {theta, theta^p, ..., theta^{p^{k-1}}} of GF(p^k) over F_p,
/// with the change-of-basis data between it and the power basis.
struct NormalBasis {
    FieldPtr field;
    FieldElement theta;
    std::vector<FieldElement> powers;  // theta^{p^i}, i = 0..k-1
    /// Rows of power_matrix are the power-basis coefficients of powers[i];
    /// change_of_basis is its inverse, so normal coords = power coeffs *
    /// change_of_basis.
    FpMat power_matrix;
    FpMat change_of_basis;

    /// Coordinates c with x = sum_i c[i] * theta^{p^i}.
    std::vector<uint32_t> coords(const FieldElement &x) const;
    FieldElement combine(std::span<const uint32_t> c) const;
};

/// Least theta (index order) whose Frobenius orbit is linearly independent.
NormalBasis find_normal_basis(const FieldPtr &field);
NormalBasis find_normal_basis(uint32_t p, uint32_t twom);

/// Coordinates of x in an arbitrary F_p-basis of its field (length k).
/// Throws MathError if the basis is singular.
std::vector<uint32_t> coords_in_basis(const FieldElement &x,
                                      std::span<const FieldElement> basis);

/// The dual-basis data for a nonzero F_p-linear functional P on GF(p^{2m}):
/// betas satisfy P(alphas[j]^{p^m} * betas[k]) = delta_{jk}.
struct DualBasisData {
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> betas;
};

DualBasisData dual_basis_for_p(std::span<const FieldElement> alphas,
                               const std::function<uint32_t(const FieldElement &)> &P,
                               uint32_t m);

/// The embedding GF(p^k) -> GF(p^{ks}) determined by the least root of the
/// small field's modulus in the big field.
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldPtr subfield, FieldPtr superfield);

    const FieldPtr &subfield() const { return sub_; }
    const FieldPtr &superfield() const { return sup_; }
    const FieldElement &root() const { return root_; }

    FieldElement embed(const FieldElement &x) const;
    /// Preimage in the subfield; throws MathError if x is not in the image.
    FieldElement project(const FieldElement &x) const;
    bool in_image(const FieldElement &x) const;

  private:
    std::vector<uint32_t> solve_coords(const FieldElement &x, bool *ok) const;

    FieldPtr sub_, sup_;
    FieldElement root_;
    std::vector<FieldElement> root_powers_;  // root^0 .. root^{k_sub-1}
    FpMat basis_matrix_;                     // k_sub x k_sup, rows = coeffs(root^t)
};

}  // namespace qsc

#endif
