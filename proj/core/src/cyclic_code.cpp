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

#include "qsc/cyclic_code.hpp"

#include <algorithm>
#include <numeric>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

// Longest cyclic run of consecutive residues inside the set, plus its start.
// The empty set yields run length 0; the full set yields run length n.
std::pair<uint32_t, uint32_t> longest_run(const std::set<uint32_t> &s, uint32_t n) {
    if (s.empty()) {
        return {0, 0};
    }
    if (s.size() == n) {
        return {n, 0};
    }
    uint32_t best_len = 0, best_start = 0;
    for (uint32_t start = 0; start < n; start++) {
        if (s.count(start) == 0 || s.count((start + n - 1) % n) != 0) {
            continue;  // only genuine run starts
        }
        uint32_t len = 0;
        while (s.count((start + len) % n) != 0) {
            len++;
        }
        if (len > best_len) {
            best_len = len;
            best_start = start;
        }
    }
    return {best_len, best_start};
}

}  // namespace

CyclicCode CyclicCode::from_roots(FieldPtr field, uint32_t n,
                                  const std::vector<uint32_t> &root_exponents) {
    if (n == 0) {
        throw MathError("cyclic code length must be positive");
    }
    if (n % field->p() == 0) {
        throw MathError("cyclic code length must be coprime to the characteristic");
    }
    uint64_t q = field->size();

    // q-cyclotomic closure of the exponents mod n.
    std::set<uint32_t> closure;
    for (uint32_t e : root_exponents) {
        uint32_t j = e % n;
        while (closure.insert(j).second) {
            j = static_cast<uint32_t>(static_cast<uint64_t>(j) * q % n);
        }
    }

    // Smallest s with n | q^s - 1 gives the splitting field GF(q^s).
    uint32_t s = 1;
    uint64_t qs_mod_n = q % n;
    while (qs_mod_n != 1 % n) {
        qs_mod_n = qs_mod_n * (q % n) % n;
        s++;
    }
    FieldPtr splitting =
        s == 1 ? field : Field::create(field->p(), field->k() * s, {.allow_large = true});
    SubfieldEmbedding embed(field, splitting);
    uint64_t order = splitting->size() - 1;
    FieldElement gamma = splitting->omega().pow(static_cast<int64_t>(order / n));
    auto ctx = std::make_shared<const CyclicContext>(
        CyclicContext{field, splitting, std::move(embed), gamma, n});

    // g = prod_{j in closure} (x - gamma^j), computed upstairs and projected.
    FqPoly g_up = FqPoly::constant(splitting->one());
    for (uint32_t j : closure) {
        FqPoly lin = FqPoly::from_coeffs(
            splitting, {-gamma.pow(static_cast<int64_t>(j)), splitting->one()});
        g_up = g_up * lin;
    }
    std::vector<FieldElement> gc;
    gc.reserve(static_cast<std::size_t>(g_up.degree() + 1));
    for (int i = 0; i <= g_up.degree(); i++) {
        gc.push_back(ctx->embed.project(g_up.coeff(static_cast<std::size_t>(i))));
    }
    FqPoly gpoly = FqPoly::from_coeffs(field, std::move(gc));

    // Generator matrix rows g, xg, ..., x^{n-deg-1} g.
    uint32_t degg = static_cast<uint32_t>(gpoly.degree());
    std::vector<std::vector<FieldElement>> rows;
    for (uint32_t t = 0; t + degg < n; t++) {
        std::vector<FieldElement> row(n, field->zero());
        for (uint32_t i = 0; i <= degg; i++) {
            row[t + i] = gpoly.coeff(i);
        }
        rows.push_back(std::move(row));
    }
    LinearCode code = LinearCode::from_rows(field, n, std::move(rows));

    auto [run, run_start] = longest_run(closure, n);
    return CyclicCode(std::move(code), std::move(gpoly), std::move(closure), run + 1, run_start,
                      std::move(ctx));
}

CyclicCode hermitian_dual_cyclic(const CyclicCode &c, uint32_t m) {
    const auto &ctx = *c.context();
    uint32_t n = ctx.n;
    uint64_t pm = 1;
    for (uint32_t i = 0; i < m; i++) {
        pm = pm * ctx.base_field->p() % n;
    }
    std::set<uint32_t> conj;
    for (uint32_t j : c.defining_set()) {
        conj.insert(static_cast<uint32_t>(j * pm % n));
    }
    std::vector<uint32_t> dual_set;
    for (uint32_t l = 0; l < n; l++) {
        if (conj.count(l) == 0) {
            dual_set.push_back((n - l) % n);
        }
    }
    return CyclicCode::from_roots(ctx.base_field, n, dual_set);
}

PunctureExpansion puncture(const LinearCode &parent, uint32_t position) {
    uint32_t n = parent.length();
    if (position >= n) {
        throw MathError("puncture position out of range");
    }
    const FieldPtr &field = parent.field();

    std::vector<std::vector<FieldElement>> child_rows;
    for (const auto &row : parent.generator_rows()) {
        std::vector<FieldElement> r;
        r.reserve(n - 1);
        for (uint32_t i = 0; i < n; i++) {
            if (i != position) {
                r.push_back(row[i]);
            }
        }
        child_rows.push_back(std::move(r));
    }
    LinearCode child = LinearCode::from_rows(field, n - 1, std::move(child_rows));

    PunctureExpansion pe{position,
                         parent,
                         child,
                         parent.dual().generator_rows(),
                         child.dual().generator_rows(),
                         {},
                         child.dim() < std::min<uint32_t>(parent.dim(), n - 1)};

    // Each zero-extended child check lies in the span of the parent checks.
    FqMat parent_check_mat = FqMat::from_rows(field, pe.parent_checks);
    for (const auto &h : pe.child_checks) {
        std::vector<FieldElement> extended;
        extended.reserve(n);
        for (uint32_t i = 0, j = 0; i < n; i++) {
            extended.push_back(i == position ? field->zero() : h[j++]);
        }
        auto coefs = parent_check_mat.express_in_rows(extended);
        if (!coefs) {
            throw MathError("puncture expansion is unsolvable (internal error)");
        }
        pe.a.push_back(std::move(*coefs));
    }
    if (!verify_puncture_expansion(pe)) {
        throw MathError("puncture expansion verification failed (internal error)");
    }
    return pe;
}

bool verify_puncture_expansion(const PunctureExpansion &pe) {
    uint32_t n = pe.parent.length();
    const FieldPtr &field = pe.parent.field();
    for (std::size_t i = 0; i < pe.child_checks.size(); i++) {
        std::vector<FieldElement> combo(n, field->zero());
        for (std::size_t j = 0; j < pe.parent_checks.size(); j++) {
            for (uint32_t c = 0; c < n; c++) {
                combo[c] = combo[c] + pe.a[i][j] * pe.parent_checks[j][c];
            }
        }
        for (uint32_t c = 0, cc = 0; c < n; c++) {
            FieldElement want = c == pe.position ? field->zero() : pe.child_checks[i][cc++];
            if (combo[c] != want) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qsc
