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

#include "qsc/stabilizer_code.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

namespace {

FpMat generator_matrix(const std::vector<SymplecticVector> &gens, uint32_t p, uint32_t m,
                       uint32_t n) {
    FpMat g(p, gens.size(), 2ull * m * n);
    for (std::size_t i = 0; i < gens.size(); i++) {
        auto row = gens[i].concat();
        for (std::size_t j = 0; j < row.size(); j++) {
            g.at(i, j) = row[j];
        }
    }
    return g;
}

std::vector<std::size_t> pivot_columns(const FpMat &rref) {
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < rref.rows(); r++) {
        for (std::size_t c = 0; c < rref.cols(); c++) {
            if (rref.at(r, c) != 0) {
                piv.push_back(c);
                break;
            }
        }
    }
    return piv;
}

bool reduces_to_zero(const FpMat &rref, std::vector<uint32_t> w) {
    uint32_t p = rref.p();
    std::vector<std::size_t> piv = pivot_columns(rref);
    for (std::size_t i = 0; i < piv.size(); i++) {
        uint32_t f = w[piv[i]];
        if (f == 0) {
            continue;
        }
        for (std::size_t c = 0; c < rref.cols(); c++) {
            w[c] = fp_sub(p, w[c], fp_mul(p, f, rref.at(i, c)));
        }
    }
    return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace

bool StabilizerCode::in_stabilizer_span(const SymplecticVector &v) const {
    if (v.p != p || v.m != m || v.n != n) {
        throw MathError("dimension mismatch in in_stabilizer_span");
    }
    if (generators.empty()) {
        return v.is_zero();
    }
    if (span_rref_) {
        return reduces_to_zero(*span_rref_, v.concat());
    }
    // codes assembled outside finish_stabilizer have no cache; stay
    // side-effect free so concurrent reads remain safe
    return reduces_to_zero(generator_matrix(generators, p, m, n).rref(), v.concat());
}

SymplecticVector StabilizerCode::embed_error(std::span<const FieldElement> e) const {
    if (embedding == EmbeddingKind::phi) {
        return phi_inv_map(e, *omega);
    }
    return structure->big_phi(e);
}

std::vector<FieldElement> StabilizerCode::unembed_error(const SymplecticVector &v) const {
    if (embedding == EmbeddingKind::phi) {
        return phi_map(v, *omega);
    }
    return structure->big_phi_inv(v);
}

std::string StabilizerCode::params_string() const {
    std::ostringstream os;
    os << "[[" << n << "," << k << "," << d << "]]_" << p;
    if (m > 1) {
        os << "^" << m;
    }
    os << (d_kind == DistanceKind::exact ? " (d exact)" : " (d is a BCH lower bound)");
    return os.str();
}

void StabilizerCode::verify() const {
    for (const auto &g : generators) {
        if (g.p != p || g.m != m || g.n != n) {
            throw MathError("generator has mismatched parameters");
        }
    }
    for (std::size_t i = 0; i < generators.size(); i++) {
        for (std::size_t j = i + 1; j < generators.size(); j++) {
            uint32_t ell = alt_inner(generators[i], generators[j]);
            if (ell != 0) {
                std::ostringstream os;
                os << "generators " << i << " and " << j
                   << " do not commute (alternating product " << ell << ")";
                throw MathError(os.str());
            }
        }
    }
    if (!generators.empty()) {
        FpMat g = generator_matrix(generators, p, m, n);
        if (g.rank() != generators.size()) {
            throw MathError("generators are linearly dependent over F_p");
        }
    }
    if (generators.size() % m != 0 || k != n - generators.size() / m) {
        throw MathError("parameter bookkeeping failed: k + (generators)/m != n");
    }
    if (d < 1) {
        throw MathError("distance must be at least 1");
    }
}

StabilizerCode finish_stabilizer(StabilizerCode code) {
    code.verify();
    if (!code.generators.empty()) {
        code.span_rref_ = generator_matrix(code.generators, code.p, code.m, code.n).rref();
    }
    return code;
}

StabilizerCode stabilizer_from_symplectic_basis(std::vector<SymplecticVector> vectors, uint32_t p,
                                                uint32_t m, uint32_t n, uint64_t enum_bound) {
    for (const auto &v : vectors) {
        if (v.p != p || v.m != m || v.n != n) {
            throw MathError("symplectic vector has mismatched parameters");
        }
    }
    if (vectors.size() % m != 0) {
        throw MathError("generator count must be a multiple of m for an integral k");
    }
    if (vectors.size() / m > n) {
        throw MathError("too many generators for the length");
    }

    StabilizerCode code;
    code.p = p;
    code.m = m;
    code.n = n;
    code.k = n - static_cast<uint32_t>(vectors.size() / m);
    code.field = Field::create(p, 2 * m, {.allow_large = true});
    code.embedding = m == 1 ? EmbeddingKind::phi : EmbeddingKind::big_phi;
    if (code.embedding == EmbeddingKind::phi) {
        code.omega = code.field->omega();
    } else {
        code.structure = std::make_shared<SymplecticStructure>(code.field);
    }
    code.generators = std::move(vectors);
    code.verify();  // reject non-commuting or dependent input before enumerating

    // d = min symplectic weight over C^perp \ C. C^perp is the null space of
    // the rows (-b_i | a_i).
    if (code.generators.empty()) {
        code.d = 1;
    } else {
        FpMat pairing(p, code.generators.size(), 2ull * m * n);
        for (std::size_t i = 0; i < code.generators.size(); i++) {
            const auto &g = code.generators[i];
            for (std::size_t j = 0; j < g.b.size(); j++) {
                pairing.at(i, j) = fp_neg(p, g.b[j]);
                pairing.at(i, g.b.size() + j) = g.a[j];
            }
        }
        FpMat dual_basis = pairing.nullspace();
        uint64_t count = 1;
        for (std::size_t i = 0; i < dual_basis.rows(); i++) {
            if (count > enum_bound / p) {
                throw BoundError("symplectic dual enumeration bound exceeded");
            }
            count *= p;
        }
        FpMat span = generator_matrix(code.generators, p, m, n).rref();
        uint32_t best = n + 1;
        std::vector<uint32_t> msg(dual_basis.rows(), 0);
        std::vector<uint32_t> word(2ull * m * n, 0);
        for (uint64_t it = 1; it < count; it++) {
            // Odometer over F_p^{dim}; rebuild the word each step.
            std::size_t pos = 0;
            while (true) {
                msg[pos]++;
                if (msg[pos] < p) {
                    break;
                }
                msg[pos] = 0;
                pos++;
            }
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t i = 0; i < msg.size(); i++) {
                if (msg[i] == 0) {
                    continue;
                }
                for (std::size_t c = 0; c < word.size(); c++) {
                    word[c] = fp_add(p, word[c], fp_mul(p, msg[i], dual_basis.at(i, c)));
                }
            }
            SymplecticVector v = SymplecticVector::from_concat(p, m, n, word);
            uint32_t w = sym_weight(v);
            if (w >= best) {
                continue;
            }
            if (!reduces_to_zero(span, word)) {
                best = w;
            }
        }
        if (best > n) {
            throw MathError("C^perp \\ C is empty; distance undefined");
        }
        code.d = best;
    }
    code.d_kind = DistanceKind::exact;
    return finish_stabilizer(std::move(code));
}

namespace {

StabilizerCode build_from_classical(const LinearCode &c, const ClassicalBuildOptions &opts,
                                    std::optional<uint32_t> fallback_designed_distance) {
    const FieldPtr &field = c.field();
    if (field->k() % 2 != 0) {
        throw MathError("classical construction requires a code over GF(p^{2m})");
    }
    uint32_t m = field->k() / 2;
    uint32_t p = field->p();
    uint32_t n = c.length();
    uint32_t r = c.dim();
    if (2 * r > n) {
        throw MathError("dim C exceeds n/2; C cannot be self-orthogonal");
    }
    std::pair<uint32_t, uint32_t> bad;
    if (c.hermitian_violation(&bad)) {
        std::ostringstream os;
        os << "C is not contained in (C^{p^m})^perp: generator rows " << bad.first << " and "
           << bad.second << " have nonzero pairing";
        throw MathError(os.str());
    }

    StabilizerCode code;
    code.p = p;
    code.m = m;
    code.n = n;
    code.k = n - 2 * r;
    code.field = field;
    code.classical_code = c;
    code.embedding = opts.embedding.value_or(m == 1 ? EmbeddingKind::phi : EmbeddingKind::big_phi);

    if (code.embedding == EmbeddingKind::phi) {
        if (m != 1) {
            throw MathError("phi embedding requires m = 1");
        }
        FieldElement w = opts.omega_override.value_or(field->omega());
        // omega need not be primitive, only independent of its conjugate.
        FpMat test(p, 2, 2);
        for (uint32_t j = 0; j < 2; j++) {
            test.at(0, j) = w.coeffs()[j];
            test.at(1, j) = w.frobenius(1).coeffs()[j];
        }
        if (test.rank() != 2) {
            throw MathError("omega and omega^p are linearly dependent; pick another omega");
        }
        code.omega = w;
        if (!opts.alphas.empty()) {
            throw MathError("custom alphas require the big-phi embedding");
        }
        code.alphas = {field->one(), w};
        for (const auto &g : c.generator_rows()) {
            std::vector<FieldElement> wg(g);
            for (auto &x : wg) {
                x = x * w;
            }
            code.generators.push_back(phi_inv_map(g, w));
            code.generators.push_back(phi_inv_map(wg, w));
        }
    } else {
        if (opts.omega_override) {
            throw MathError("omega override applies to the phi embedding only");
        }
        auto structure =
            opts.alphas.empty()
                ? std::make_shared<SymplecticStructure>(field)
                : std::make_shared<SymplecticStructure>(field, find_normal_basis(field),
                                                        opts.alphas);
        code.structure = structure;
        code.alphas = structure->alphas();
        for (const auto &g : c.generator_rows()) {
            for (const auto &alpha : code.alphas) {
                std::vector<FieldElement> ag(g);
                for (auto &x : ag) {
                    x = alpha * x;
                }
                code.generators.push_back(structure->big_phi(ag));
            }
        }
    }

    for (const auto &g : c.generator_rows()) {
        std::vector<FieldElement> conj(g);
        for (auto &x : conj) {
            x = x.frobenius(m);
        }
        code.check_rows.push_back(std::move(conj));
    }

    if (r == 0) {
        code.d = 1;
        code.d_kind = DistanceKind::exact;
    } else {
        LinearCode dual_conj = c.conjugate(m).dual();
        try {
            code.d = dual_conj.min_weight_diff(c, opts.enum_bound);
            code.d_kind = DistanceKind::exact;
        } catch (const BoundError &) {
            if (!fallback_designed_distance) {
                throw;
            }
            code.d = *fallback_designed_distance;
            code.d_kind = DistanceKind::bch_lower_bound;
        }
    }
    return finish_stabilizer(std::move(code));
}

}  // namespace

StabilizerCode stabilizer_from_classical(const LinearCode &c, ClassicalBuildOptions opts) {
    return build_from_classical(c, opts, std::nullopt);
}

StabilizerCode stabilizer_from_cyclic(const CyclicCode &c, ClassicalBuildOptions opts) {
    uint32_t m = c.code().field()->k() / 2;
    CyclicCode check = hermitian_dual_cyclic(c, m);
    StabilizerCode code = build_from_classical(c.code(), opts, check.designed_distance());
    if (!check.code().same_code_as(c.code().conjugate(m).dual())) {
        throw MathError("cyclic check code disagrees with (C^{p^m})^perp (internal error)");
    }
    code.cyclic_check = std::move(check);
    return code;
}

StabilizerCode stabilizer_from_punctured_cyclic(const CyclicCode &parent, uint32_t position,
                                                ClassicalBuildOptions opts) {
    uint32_t m = parent.code().field()->k() / 2;
    std::pair<uint32_t, uint32_t> bad;
    if (parent.code().hermitian_violation(&bad)) {
        throw MathError("parent cyclic code is not Hermitian self-orthogonal");
    }
    CyclicCode parent_check = hermitian_dual_cyclic(parent, m);
    PunctureExpansion pe = puncture(parent_check.code(), position);
    // The punctured check code is (C_new^{p^m})^perp for
    // C_new = (child^perp)^{p^m}, which is the shortening of the parent code.
    LinearCode c_new = pe.child.dual().conjugate(m);
    uint32_t fallback = parent_check.designed_distance() > 1
                            ? parent_check.designed_distance() - 1
                            : 1;
    StabilizerCode code = build_from_classical(c_new, opts, fallback);
    code.parent_cyclic_check = std::move(parent_check);
    code.puncture_data = std::move(pe);
    return code;
}

std::vector<StabilizerCode> search_codes(uint32_t p, uint32_t m, uint32_t n, uint32_t target_k,
                                         SearchOptions opts) {
    if (target_k > n) {
        throw MathError("k cannot exceed n");
    }
    if ((n - target_k) % 2 != 0) {
        throw MathError("n - k must be even for the linear construction");
    }
    uint32_t r = (n - target_k) / 2;
    FieldPtr field = Field::create(p, 2 * m);
    uint64_t budget = opts.budget;
    std::vector<StabilizerCode> found;
    std::set<std::string> seen;

    auto key_of = [](const LinearCode &c) {
        std::ostringstream os;
        for (const auto &row : c.generator_rows()) {
            for (const auto &x : row) {
                os << x.index() << ",";
            }
            os << ";";
        }
        return os.str();
    };
    auto consider = [&](const LinearCode &c, const CyclicCode *cyc) {
        if (c.dim() != r || !c.is_hermitian_self_orthogonal()) {
            return;
        }
        if (!seen.insert(key_of(c)).second) {
            return;
        }
        ClassicalBuildOptions bopts;
        bopts.enum_bound = opts.enum_bound;
        try {
            found.push_back(cyc ? stabilizer_from_cyclic(*cyc, bopts)
                                : stabilizer_from_classical(c, bopts));
        } catch (const Error &) {
            // skip candidates whose distance is undefined or out of bounds
        }
    };

    // Cyclic candidates: unions of q-cyclotomic cosets of total size n - r.
    if (budget > 0 && n % p != 0) {
        uint64_t q = field->size();
        std::vector<std::vector<uint32_t>> cosets;
        std::set<uint32_t> used;
        for (uint32_t e = 0; e < n; e++) {
            if (used.count(e)) {
                continue;
            }
            std::vector<uint32_t> coset;
            uint32_t j = e;
            while (used.insert(j).second) {
                coset.push_back(j);
                j = static_cast<uint32_t>(static_cast<uint64_t>(j) * q % n);
            }
            cosets.push_back(std::move(coset));
        }
        uint32_t want = n - r;
        // DFS over coset subsets with the exact total size.
        std::vector<std::size_t> stack;
        std::function<void(std::size_t, uint32_t)> dfs = [&](std::size_t idx, uint32_t size) {
            if (budget == 0) {
                return;
            }
            if (size == want) {
                std::vector<uint32_t> exps;
                for (std::size_t s : stack) {
                    exps.insert(exps.end(), cosets[s].begin(), cosets[s].end());
                }
                budget--;
                CyclicCode cyc = CyclicCode::from_roots(field, n, exps);
                consider(cyc.code(), &cyc);
                return;
            }
            if (idx == cosets.size() || size > want) {
                return;
            }
            stack.push_back(idx);
            dfs(idx + 1, size + static_cast<uint32_t>(cosets[idx].size()));
            stack.pop_back();
            dfs(idx + 1, size);
        };
        dfs(0, 0);
    }

    // Random generator matrices.
    CounterRng rng(opts.seed, 0x5ea6c4);
    while (budget > 0) {
        budget--;
        std::vector<std::vector<FieldElement>> rows(r);
        for (auto &row : rows) {
            row.reserve(n);
            for (uint32_t i = 0; i < n; i++) {
                row.push_back(field->from_index(rng.below(field->size())));
            }
        }
        consider(LinearCode::from_rows(field, n, std::move(rows)), nullptr);
    }

    std::stable_sort(found.begin(), found.end(), [](const StabilizerCode &a,
                                                    const StabilizerCode &b) {
        if (a.d != b.d) {
            return a.d > b.d;
        }
        return a.d_kind == DistanceKind::exact && b.d_kind != DistanceKind::exact;
    });
    return found;
}

}  // namespace qsc
