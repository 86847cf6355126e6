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

#ifndef QSC_STABILIZER_CODE_HPP
#define QSC_STABILIZER_CODE_HPP

#include <memory>
#include <optional>

#include "qsc/cyclic_code.hpp"
#include "qsc/linear_code.hpp"
#include "qsc/symplectic.hpp"

namespace qsc {

enum class DistanceKind { exact, bch_lower_bound };
enum class EmbeddingKind { phi, big_phi };

/// An [[n, k, d]]_{p^m} stabilizer code description: the symplectic
/// generator basis, the classical check rows g_i^{p^m} when built from a
/// classical code, and the basis choices (omega / normal basis / D / alphas)
/// needed to reproduce syndrome decoding bit-exactly.
class StabilizerCode {
  public:
    uint32_t p = 2, m = 1, n = 0, k = 0;
    uint32_t d = 1;
    DistanceKind d_kind = DistanceKind::exact;

    FieldPtr field;  // GF(p^{2m})
    EmbeddingKind embedding = EmbeddingKind::phi;
    std::optional<FieldElement> omega;                      // phi path
    std::shared_ptr<const SymplecticStructure> structure;   // big_phi path
    std::vector<FieldElement> alphas;                       // scalar basis per row

    std::vector<SymplecticVector> generators;               // m(n-k) of them
    std::optional<LinearCode> classical_code;               // C
    std::vector<std::vector<FieldElement>> check_rows;      // g_i^{p^m}

    /// Cyclic data for BM decoding: the check code (C^{p^m})^perp when the
    /// construction was cyclic, and the parent check code plus expansion
    /// when it was punctured.
    std::optional<CyclicCode> cyclic_check;
    std::optional<CyclicCode> parent_cyclic_check;
    std::optional<PunctureExpansion> puncture_data;

    /// Membership of v in the F_p-span of the generators (the image of C).
    bool in_stabilizer_span(const SymplecticVector &v) const;

    /// Maps a classical error vector to its symplectic image through the
    /// code's own embedding (phi^{-1} or Phi).
    SymplecticVector embed_error(std::span<const FieldElement> e) const;
    std::vector<FieldElement> unembed_error(const SymplecticVector &v) const;

    std::string params_string() const;  // "[[n,k,d]]_{p^m}" with the d flag

    /// Re-checks the construction invariants (commuting generators,
    /// independence, parameter bookkeeping); throws MathError on violation.
    void verify() const;

  private:
    friend StabilizerCode finish_stabilizer(StabilizerCode code);
    std::optional<FpMat> span_rref_;  // RREF of generator rows, set by finish_stabilizer
};

/// Construction from an explicit commuting symplectic basis.
/// Throws MathError naming the first non-commuting pair, or on dependent
/// input; d is computed by exhaustive enumeration of C^perp \ C.
StabilizerCode stabilizer_from_symplectic_basis(std::vector<SymplecticVector> vectors, uint32_t p,
                                                uint32_t m, uint32_t n,
                                                uint64_t enum_bound = kDefaultEnumBound);

struct ClassicalBuildOptions {
    std::optional<FieldElement> omega_override;   // phi path; needs {w, w^p} independent
    std::vector<FieldElement> alphas;             // default: {1, omega} (phi), power basis (Phi)
    std::optional<EmbeddingKind> embedding;       // default: phi for m = 1, big_phi otherwise
    uint64_t enum_bound = kDefaultEnumBound;
};

/// Quantum code from a Hermitian self-orthogonal linear code
/// over GF(p^{2m}). d = min Hamming weight of (C^{p^m})^perp \ C.
StabilizerCode stabilizer_from_classical(const LinearCode &c, ClassicalBuildOptions opts = {});

/// Same, keeping the cyclic structure of the check code for BM decoding.
/// Falls back to the BCH designed distance (flagged bch_lower_bound) when
/// exact enumeration would exceed the bound.
StabilizerCode stabilizer_from_cyclic(const CyclicCode &c, ClassicalBuildOptions opts = {});

/// Length-(n-1) code from a cyclic construction: shortens the classical code
/// at `position` (equivalently punctures its check code) and retains the
/// expansion data for punctured-code decoding.
StabilizerCode stabilizer_from_punctured_cyclic(const CyclicCode &parent, uint32_t position = 0,
                                                ClassicalBuildOptions opts = {});

struct SearchOptions {
    uint64_t budget = 1000;  // candidates examined (cyclic first, then random)
    uint64_t seed = 1;
    uint64_t enum_bound = kDefaultEnumBound;
};

/// Enumerates cyclic candidates (unions of cyclotomic cosets) and random
/// generator matrices over GF(p^{2m}), keeps the Hermitian self-orthogonal
/// ones with the requested k, ranked by distance (exact before bound).
std::vector<StabilizerCode> search_codes(uint32_t p, uint32_t m, uint32_t n, uint32_t target_k,
                                         SearchOptions opts = {});

}  // namespace qsc

#endif
