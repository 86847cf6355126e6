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

#ifndef QSC_SYMPLECTIC_HPP
#define QSC_SYMPLECTIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsc/field.hpp"
#include "qsc/fp_linalg.hpp"

namespace qsc {

/// A vector (a|b) in F_p^{2mn}. Entry a[i*m + j] is the j-th "X" coordinate
/// of qudit position i, likewise b for "Z" coordinates. Represents an error
/// or a stabilizer generator.
struct SymplecticVector {
    uint32_t p = 2, m = 1, n = 0;
    std::vector<uint32_t> a, b;  // each of length m*n, entries in [0, p)

    static SymplecticVector zero(uint32_t p, uint32_t m, uint32_t n);

    bool is_zero() const;
    bool dims_match(const SymplecticVector &o) const {
        return p == o.p && m == o.m && n == o.n;
    }

    std::span<const uint32_t> a_block(uint32_t pos) const { return {a.data() + pos * m, m}; }
    std::span<const uint32_t> b_block(uint32_t pos) const { return {b.data() + pos * m, m}; }

    /// this += scalar * other (mod p)
    void add_scaled(const SymplecticVector &other, uint32_t scalar);

    friend SymplecticVector operator+(SymplecticVector lhs, const SymplecticVector &rhs);
    friend SymplecticVector operator-(SymplecticVector lhs, const SymplecticVector &rhs);
    bool operator==(const SymplecticVector &) const = default;

    /// The concatenated row (a|b) of length 2mn, for linear algebra.
    std::vector<uint32_t> concat() const;
    static SymplecticVector from_concat(uint32_t p, uint32_t m, uint32_t n,
                                        std::span<const uint32_t> row);

    /// "a|b" digit string; entries are joined without separators when p <= 9
    /// and comma-separated otherwise.
    std::string to_digit_string() const;
    static SymplecticVector from_digit_string(uint32_t p, uint32_t m, uint32_t n,
                                              const std::string &s);
};

/// Alternating inner product <a,b'> - <a',b> mod p.
uint32_t alt_inner(const SymplecticVector &u, const SymplecticVector &v);

/// Number of qudit positions whose combined 2m coordinates are not all zero.
uint32_t sym_weight(const SymplecticVector &u);

/// phi(a|b) = omega*a + omega^p*b componentwise, for m = 1. omega must be an
/// element of GF(p^2) with {omega, omega^p} independent over F_p.
std::vector<FieldElement> phi_map(const SymplecticVector &u, const FieldElement &omega);
SymplecticVector phi_inv_map(std::span<const FieldElement> c, const FieldElement &omega);

/// <c, d^p> - <c^p, d>, a value of the form z - z^p in GF(p^2).
FieldElement trace_inner(std::span<const FieldElement> c, std::span<const FieldElement> d);

/// trace_inner divided by omega^2 - omega^{2p}; the result lies in the prime
/// subfield and is returned as an F_p value. Satisfies
/// trace_inner_normalized(phi u, phi v) = alt_inner(u, v).
uint32_t trace_inner_normalized(std::span<const FieldElement> c, std::span<const FieldElement> d,
                                const FieldElement &omega);

/// Deterministic symplectic Gram-Schmidt: given an alternating invertible T
/// over F_p, returns an invertible D with D T D^t = S, where
/// S = [[0, I_m], [-I_m, 0]]. Lowest-index pivots first, so the result is
/// reproducible.
FpMat compute_symplectic_d(const FpMat &T);

/// The block matrix S = [[0, I_m], [-I_m, 0]] over F_p.
FpMat standard_symplectic_form(uint32_t p, uint32_t m);

/// The GF(p^{2m}) <-> F_p^{2m} symplectic machinery of a fixed normal basis:
/// the bilinear form T, a matrix D with D T D^t = S, the functional
/// P(x) = c_{m+1} - c_1 in normal coordinates, the coordinate map P_2m with
/// its dual-basis inverse, and the weight-preserving map Phi from vectors
/// over GF(p^{2m}) to symplectic vectors.
class SymplecticStructure {
  public:
    /// Uses the least normal basis element and the power basis as alphas.
    explicit SymplecticStructure(FieldPtr field_2m);
    SymplecticStructure(FieldPtr field_2m, NormalBasis nb, std::vector<FieldElement> alphas);

    uint32_t p() const { return field_->p(); }
    uint32_t m() const { return m_; }
    const FieldPtr &field() const { return field_; }
    const NormalBasis &normal_basis() const { return nb_; }
    const FpMat &t_matrix() const { return T_; }
    const FpMat &d_matrix() const { return D_; }
    const FpMat &d_inverse() const { return Dinv_; }
    const std::vector<FieldElement> &alphas() const { return alphas_; }
    const std::vector<FieldElement> &betas() const { return betas_; }

    /// T(x, y) = P(x * y^{p^m}).
    uint32_t t_form(const FieldElement &x, const FieldElement &y) const;

    /// P(x) = c_{m+1} - c_1 where c are the normal coordinates of x.
    uint32_t p_functional(const FieldElement &x) const;

    /// P_2m(x) = (P(alpha_1^{p^m} x), ..., P(alpha_{2m}^{p^m} x)).
    std::vector<uint32_t> p2m(const FieldElement &x) const;

    /// Inverse of P_2m: sum_j s_j beta_j.
    FieldElement p2m_inv(std::span<const uint32_t> s) const;

    /// Phi: per coordinate, normal coords times D^{-1}, split into an
    /// (a|b) block pair; blocks regrouped as all a's then all b's.
    SymplecticVector big_phi(std::span<const FieldElement> c) const;
    std::vector<FieldElement> big_phi_inv(const SymplecticVector &u) const;

  private:
    void init();

    FieldPtr field_;
    uint32_t m_;
    NormalBasis nb_;
    std::vector<FieldElement> alphas_, alphas_conj_, betas_;
    FpMat T_, D_, Dinv_;
};

}  // namespace qsc

#endif
