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

#ifndef QSC_CYCLIC_CODE_HPP
#define QSC_CYCLIC_CODE_HPP

#include <memory>
#include <set>

#include "qsc/fq_poly.hpp"
#include "qsc/linear_code.hpp"

namespace qsc {

/// Splitting-field data shared by a cyclic code and its decoder: the
/// smallest GF(q^s) containing a primitive n-th root of unity gamma, and the
/// embedding GF(q) -> GF(q^s).
struct CyclicContext {
    FieldPtr base_field;       // GF(q)
    FieldPtr splitting_field;  // GF(q^s)
    SubfieldEmbedding embed;
    FieldElement gamma;  // fixed primitive n-th root: omega^{(q^s-1)/n}
    uint32_t n;
};

/// A cyclic [n, n - deg g] code over GF(q), q = p^k, with gcd(n, p) = 1,
/// defined by a generator polynomial g | x^n - 1 through its root exponents.
class CyclicCode {
  public:
    /// Builds the code whose generator polynomial has roots
    /// {gamma^j : j in the q-cyclotomic closure of root_exponents}.
    /// The closure is applied automatically.
    static CyclicCode from_roots(FieldPtr field, uint32_t n,
                                 const std::vector<uint32_t> &root_exponents);

    const LinearCode &code() const { return code_; }
    const FqPoly &generator_poly() const { return gpoly_; }
    const std::set<uint32_t> &defining_set() const { return defining_set_; }
    const std::shared_ptr<const CyclicContext> &context() const { return ctx_; }

    /// BCH bound: longest cyclic run of consecutive defining exponents + 1.
    uint32_t designed_distance() const { return designed_distance_; }
    /// First exponent of a maximal consecutive run (the b of the BCH window).
    uint32_t bch_run_start() const { return bch_run_start_; }

  private:
    CyclicCode(LinearCode code, FqPoly gpoly, std::set<uint32_t> defining,
               uint32_t designed, uint32_t run_start, std::shared_ptr<const CyclicContext> ctx)
        : code_(std::move(code)),
          gpoly_(std::move(gpoly)),
          defining_set_(std::move(defining)),
          designed_distance_(designed),
          bch_run_start_(run_start),
          ctx_(std::move(ctx)) {}

    LinearCode code_;
    FqPoly gpoly_;
    std::set<uint32_t> defining_set_;
    uint32_t designed_distance_, bch_run_start_;
    std::shared_ptr<const CyclicContext> ctx_;
};

/// The cyclic code (C^{p^m})^perp, whose defining set is
/// {-l mod n : l not in p^m * Z_C}. Agrees with
/// C.code().conjugate(m).dual() as a code, but keeps the cyclic data
/// (designed distance, run start) needed by syndrome decoders.
CyclicCode hermitian_dual_cyclic(const CyclicCode &c, uint32_t m);

/// The puncture of a code at one coordinate together with the check-row
/// expansion 0h_i = sum_j a[i][j] h'_j used for decoding: h' are check rows
/// of the parent, h of the child, and 0h_i is h_i with a zero re-inserted at
/// the punctured position.
struct PunctureExpansion {
    uint32_t position = 0;  // 0-based punctured coordinate
    LinearCode parent, child;
    std::vector<std::vector<FieldElement>> parent_checks;  // h'_1..h'_r
    std::vector<std::vector<FieldElement>> child_checks;   // h_1..h_{r'}
    std::vector<std::vector<FieldElement>> a;               // r' x r expansion
    bool dimension_dropped = false;
};

PunctureExpansion puncture(const LinearCode &parent, uint32_t position = 0);

/// Re-checks the defining identity of an expansion entrywise.
bool verify_puncture_expansion(const PunctureExpansion &pe);

}  // namespace qsc

#endif
