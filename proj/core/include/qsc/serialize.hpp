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

#ifndef QSC_SERIALIZE_HPP
#define QSC_SERIALIZE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "qsc/stabilizer_code.hpp"

namespace qsc {

/// A construction request: one of three pathways plus options. The text
/// format is line oriented ("key values..."), with '#' comments:
///
///   qsc-spec v1
///   p 2
///   m 1
///   n 5
///   construction cyclic-roots        # or generator-rows, symplectic-generators
///   roots 0 1                        # cyclic-roots
///   row 1 2 2 1 0                    # generator-rows: element indices, repeated
///   gen 10010|01100                  # symplectic-generators: digit strings, repeated
///   omega 2                          # optional: element index in GF(p^{2m})
///   alphas 1 2                       # optional: element indices
///   embedding phi                    # optional: phi | big-phi
///   puncture 0                       # optional: 0-based coordinate (cyclic only)
struct CodeSpecFile {
    enum class Construction { generator_rows, cyclic_roots, symplectic_generators };
    uint32_t p = 2, m = 1, n = 0;
    Construction construction = Construction::generator_rows;
    std::vector<std::vector<uint64_t>> rows;  // element indices
    std::vector<uint32_t> roots;
    std::vector<std::string> gens;  // symplectic digit strings
    std::optional<uint64_t> omega_index;
    std::vector<uint64_t> alpha_indices;
    std::optional<EmbeddingKind> embedding;
    std::optional<uint32_t> puncture_position;
};

CodeSpecFile read_code_spec(std::istream &in);
void write_code_spec(std::ostream &out, const CodeSpecFile &spec);

/// Runs the requested construction. Bound knobs apply to distance
/// enumeration.
StabilizerCode build_from_spec(const CodeSpecFile &spec, uint64_t enum_bound = kDefaultEnumBound);

/// Emits a generator-rows spec that rebuilds the given code bit-exactly
/// (same parameters and generator digit strings).
CodeSpecFile spec_of_code(const StabilizerCode &code);

/// Full stabilizer-code record: parameters, basis choices (omega / theta /
/// D / alphas), generator digit strings, classical and check rows, cyclic
/// defining sets, and the distance flag. read_stabilizer reconstructs the
/// embedding machinery deterministically and re-verifies it against the
/// stored record.
void write_stabilizer(std::ostream &out, const StabilizerCode &code);
StabilizerCode read_stabilizer(std::istream &in);

}  // namespace qsc

#endif
