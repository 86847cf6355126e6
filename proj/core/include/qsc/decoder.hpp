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

#ifndef QSC_DECODER_HPP
#define QSC_DECODER_HPP

#include <span>
#include <vector>

#include "qsc/cyclic_code.hpp"
#include "qsc/stabilizer_code.hpp"

namespace qsc {

/// Measurement outcomes: one exponent s_i in F_p per symplectic generator,
/// plus (after conversion) one classical value <g_i^{p^m}, e> per classical
/// check row.
struct Syndrome {
    std::vector<uint32_t> raw;
    std::vector<FieldElement> classical;
};

enum class DecodeStatus { unique, failure_detected };

struct DecodeResult {
    std::vector<FieldElement> error_estimate;
    DecodeStatus status = DecodeStatus::failure_detected;
};

/// The m = 1 conversion: with generator pairs (phi^{-1}(g_i),
/// phi^{-1}(omega g_i)) producing exponents s_{2i-1}, s_{2i}, the classical
/// syndrome is
///   <g_i^p, e> = (omega^2 - omega^{2p}) (omega s_{2i-1} - s_{2i}) /
///                (omega^p - omega),
/// with the s values lifted from F_p into GF(p^2). The denominator is
/// nonzero because {omega, omega^p} is independent. The constant is
/// validated against directly computed inner products in the test suite.
std::vector<FieldElement> convert_syndrome_m1(std::span<const uint32_t> raw,
                                              const StabilizerCode &code);

/// The general conversion: generator blocks (Phi(alpha_1 g_i), ...,
/// Phi(alpha_{2m} g_i)) produce 2m exponents per row, and
/// <e, g_i^{p^m}> = sum_j s_j beta_j (the inverse of P_2m).
std::vector<FieldElement> convert_syndrome_general(std::span<const uint32_t> raw,
                                                   const StabilizerCode &code);

/// Dispatches on the code's embedding.
std::vector<FieldElement> convert_syndrome(std::span<const uint32_t> raw,
                                           const StabilizerCode &code);

/// Default cap on syndrome-table entries.
constexpr uint64_t kDefaultTableBound = 1ull << 20;

/// Exact table decoder for the code {e : <h_i, e> = 0 for all i}: maps every
/// syndrome to its minimum-Hamming-weight coset leader (ties broken by
/// lexicographic order of the index vector). Build once, decode many.
class CosetLeaderDecoder {
  public:
    CosetLeaderDecoder(FieldPtr field, uint32_t n,
                       std::vector<std::vector<FieldElement>> check_rows,
                       uint64_t table_bound = kDefaultTableBound);

    DecodeResult decode(std::span<const FieldElement> syndrome) const;

    uint32_t length() const { return n_; }
    const std::vector<std::vector<FieldElement>> &check_rows() const { return check_rows_; }

  private:
    uint64_t key_of(std::span<const FieldElement> syndrome) const;

    FieldPtr field_;
    uint32_t n_;
    std::vector<std::vector<FieldElement>> check_rows_;
    std::vector<std::vector<uint16_t>> leaders_;  // index vectors, keyed by syndrome
    std::vector<int32_t> leader_weight_;          // -1 while unassigned (during build)
};

/// Interface for error-and-erasure decoders (what punctured decoding needs
/// from its parent code).
struct ErasureDecoder {
    virtual ~ErasureDecoder() = default;
    virtual DecodeResult decode(std::span<const FieldElement> syndrome,
                                std::span<const uint32_t> erasures) const = 0;
};

/// Berlekamp-Massey error-and-erasure decoder for a cyclic code with BCH
/// designed distance delta: recovers any pattern of t errors and f erasures
/// with 2t + f < delta. The locator accumulates on top of the erasure
/// locator; values come from a Forney evaluation over the splitting field;
/// every result is verified against the full input syndrome before it is
/// reported unique, so failures are detected rather than silent.
class BmDecoder : public ErasureDecoder {
  public:
    explicit BmDecoder(CyclicCode code);

    DecodeResult decode(std::span<const FieldElement> syndrome,
                        std::span<const uint32_t> erasures = {}) const override;

    const CyclicCode &code() const { return code_; }
    const std::vector<std::vector<FieldElement>> &check_rows() const { return check_rows_; }

  private:
    CyclicCode code_;
    std::vector<std::vector<FieldElement>> check_rows_;   // over GF(q)
    std::vector<FieldElement> gamma_pows_;                // gamma^0..gamma^{n-1}
    // window_mu_[t] expresses the power sum e(gamma^{b+t}) as a combination
    // of the embedded check-row syndromes.
    std::vector<std::vector<FieldElement>> window_mu_;
};

/// Punctured-code decoding: lifts the child syndrome s to a parent syndrome
/// s' with s_i = sum_j a_ij s'_j (free variables zero), runs the parent
/// error-and-erasure decoder with the punctured coordinate erased, and
/// restricts the estimate to the surviving coordinates.
DecodeResult punctured_decode(const PunctureExpansion &pe,
                              std::span<const FieldElement> child_syndrome,
                              const ErasureDecoder &parent_decoder);

}  // namespace qsc

#endif
