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

#include "qsc/decoder.hpp"

#include <algorithm>

#include "qsc/errors.hpp"
#include "qsc/fq_poly.hpp"

namespace qsc {

std::vector<FieldElement> convert_syndrome_m1(std::span<const uint32_t> raw,
                                              const StabilizerCode &code) {
    if (code.embedding != EmbeddingKind::phi || !code.omega) {
        throw MathError("convert_syndrome_m1 requires a phi-embedded code");
    }
    if (raw.size() != code.generators.size() || raw.size() % 2 != 0) {
        throw MathError("raw syndrome length mismatch");
    }
    const FieldPtr &f = code.field;
    const FieldElement &w = *code.omega;
    FieldElement wp = w.frobenius(1);
    FieldElement scale = (w * w - wp * wp) / (wp - w);
    std::vector<FieldElement> classical;
    classical.reserve(raw.size() / 2);
    for (std::size_t i = 0; i < raw.size() / 2; i++) {
        FieldElement s1 = f->from_scalar(raw[2 * i]);
        FieldElement s2 = f->from_scalar(raw[2 * i + 1]);
        classical.push_back(scale * (w * s1 - s2));
    }
    return classical;
}

std::vector<FieldElement> convert_syndrome_general(std::span<const uint32_t> raw,
                                                   const StabilizerCode &code) {
    if (code.embedding != EmbeddingKind::big_phi || !code.structure) {
        throw MathError("convert_syndrome_general requires a big-phi-embedded code");
    }
    uint32_t block = 2 * code.m;
    if (raw.size() != code.generators.size() || raw.size() % block != 0) {
        throw MathError("raw syndrome length mismatch");
    }
    // Measurement exponents are alt_inner(generator, error); the dual-basis
    // block formula expects the pairing with the error first, which is the
    // negative. The two agree in characteristic 2.
    uint32_t p = code.p;
    std::vector<FieldElement> classical;
    classical.reserve(raw.size() / block);
    std::vector<uint32_t> neg(block);
    for (std::size_t i = 0; i < raw.size() / block; i++) {
        for (uint32_t j = 0; j < block; j++) {
            neg[j] = fp_neg(p, raw[i * block + j]);
        }
        classical.push_back(code.structure->p2m_inv(neg));
    }
    return classical;
}

std::vector<FieldElement> convert_syndrome(std::span<const uint32_t> raw,
                                           const StabilizerCode &code) {
    return code.embedding == EmbeddingKind::phi ? convert_syndrome_m1(raw, code)
                                                : convert_syndrome_general(raw, code);
}

// --- coset leader table ---

CosetLeaderDecoder::CosetLeaderDecoder(FieldPtr field, uint32_t n,
                                       std::vector<std::vector<FieldElement>> check_rows,
                                       uint64_t table_bound)
    : field_(std::move(field)), n_(n), check_rows_(std::move(check_rows)) {
    for (const auto &h : check_rows_) {
        if (h.size() != n_) {
            throw MathError("check row has wrong length");
        }
    }
    if (field_->size() > 65536) {
        throw BoundError("coset tables support fields up to 2^16 elements");
    }
    std::size_t r = check_rows_.size();
    {
        auto rows_copy = check_rows_;
        if (FqMat::from_rows(field_, std::move(rows_copy)).rank() != r) {
            throw MathError("check rows are linearly dependent");
        }
    }
    uint64_t q = field_->size();
    uint64_t table = 1;
    for (std::size_t i = 0; i < r; i++) {
        if (table > table_bound / q) {
            throw BoundError("syndrome table bound exceeded");
        }
        table *= q;
    }
    leaders_.assign(table, {});
    leader_weight_.assign(table, -1);

    // Enumerate words by increasing weight; within a weight class keep the
    // lexicographically least leader (index-vector order). Stops once every
    // syndrome has a leader and the current weight class is exhausted.
    uint64_t filled = 0;
    std::vector<FieldElement> word(n_, field_->zero());
    std::vector<uint16_t> idx(n_, 0);

    auto try_word = [&]() {
        auto s = syndrome_of(check_rows_, word);
        uint64_t key = key_of(s);
        int32_t wt = 0;
        for (uint32_t i = 0; i < n_; i++) {
            wt += idx[i] != 0;
        }
        if (leader_weight_[key] < 0) {
            filled++;
            leader_weight_[key] = wt;
            leaders_[key] = idx;
        } else if (wt < leader_weight_[key] ||
                   (wt == leader_weight_[key] && idx < leaders_[key])) {
            leader_weight_[key] = wt;
            leaders_[key] = idx;
        }
    };

    // weight 0
    try_word();
    std::vector<uint32_t> support;
    std::function<void(uint32_t, uint32_t)> enumerate_support = [&](uint32_t start,
                                                                    uint32_t remaining) {
        if (remaining == 0) {
            // odometer over nonzero values at the chosen support
            std::vector<uint64_t> vals(support.size(), 1);
            while (true) {
                for (std::size_t i = 0; i < support.size(); i++) {
                    idx[support[i]] = static_cast<uint16_t>(vals[i]);
                    word[support[i]] = field_->from_index(vals[i]);
                }
                try_word();
                std::size_t pos = 0;
                while (pos < vals.size()) {
                    vals[pos]++;
                    if (vals[pos] < q) {
                        break;
                    }
                    vals[pos] = 1;
                    pos++;
                }
                if (pos == vals.size()) {
                    break;
                }
            }
            for (uint32_t s : support) {
                idx[s] = 0;
                word[s] = field_->zero();
            }
            return;
        }
        for (uint32_t i = start; i + remaining <= n_; i++) {
            support.push_back(i);
            enumerate_support(i + 1, remaining - 1);
            support.pop_back();
        }
    };
    for (uint32_t w = 1; w <= n_ && filled < table; w++) {
        enumerate_support(0, w);
    }
    if (filled < table) {
        throw MathError("syndrome table incomplete (check rows not full rank?)");
    }
}

uint64_t CosetLeaderDecoder::key_of(std::span<const FieldElement> syndrome) const {
    if (syndrome.size() != check_rows_.size()) {
        throw MathError("syndrome length mismatch");
    }
    uint64_t key = 0;
    for (std::size_t i = syndrome.size(); i-- > 0;) {
        key = key * field_->size() + syndrome[i].index();
    }
    return key;
}

DecodeResult CosetLeaderDecoder::decode(std::span<const FieldElement> syndrome) const {
    const auto &leader = leaders_[key_of(syndrome)];
    DecodeResult res;
    res.status = DecodeStatus::unique;
    res.error_estimate.reserve(n_);
    for (uint32_t i = 0; i < n_; i++) {
        res.error_estimate.push_back(field_->from_index(leader[i]));
    }
    return res;
}

// --- Berlekamp-Massey with erasures ---

BmDecoder::BmDecoder(CyclicCode code) : code_(std::move(code)) {
    const auto &ctx = *code_.context();
    check_rows_ = code_.code().dual().generator_rows();
    gamma_pows_.reserve(ctx.n);
    FieldElement cur = ctx.splitting_field->one();
    for (uint32_t i = 0; i < ctx.n; i++) {
        gamma_pows_.push_back(cur);
        cur = cur * ctx.gamma;
    }
    // Express each window evaluation row (gamma^{0 j}, ..., gamma^{(n-1) j}),
    // j = b..b+delta-2, in terms of the embedded check rows, so power-sum
    // syndromes are linear in the classical syndrome values.
    std::vector<std::vector<FieldElement>> embedded;
    for (const auto &h : check_rows_) {
        std::vector<FieldElement> up;
        up.reserve(ctx.n);
        for (const auto &x : h) {
            up.push_back(ctx.embed.embed(x));
        }
        embedded.push_back(std::move(up));
    }
    FqMat embedded_mat = FqMat::from_rows(ctx.splitting_field, embedded);
    uint32_t delta = code_.designed_distance();
    uint32_t b = code_.bch_run_start();
    for (uint32_t t = 0; t + 1 < delta; t++) {
        uint32_t j = (b + t) % ctx.n;
        std::vector<FieldElement> v;
        v.reserve(ctx.n);
        for (uint32_t c = 0; c < ctx.n; c++) {
            v.push_back(gamma_pows_[static_cast<std::size_t>(static_cast<uint64_t>(c) * j % ctx.n)]);
        }
        auto mu = embedded_mat.express_in_rows(v);
        if (!mu) {
            throw MathError("BCH window row not in the check space (internal error)");
        }
        window_mu_.push_back(std::move(*mu));
    }
}

DecodeResult BmDecoder::decode(std::span<const FieldElement> syndrome,
                               std::span<const uint32_t> erasures) const {
    const auto &ctx = *code_.context();
    const FieldPtr &big = ctx.splitting_field;
    uint32_t n = ctx.n;
    uint32_t delta = code_.designed_distance();
    DecodeResult fail;

    if (syndrome.size() != check_rows_.size()) {
        throw MathError("syndrome length mismatch");
    }
    std::vector<bool> erased(n, false);
    for (uint32_t e : erasures) {
        if (e >= n) {
            throw MathError("erasure position out of range");
        }
        if (erased[e]) {
            throw MathError("duplicate erasure position");
        }
        erased[e] = true;
    }
    uint32_t f = static_cast<uint32_t>(erasures.size());
    if (f >= delta) {
        return fail;  // beyond the designed-distance budget
    }

    bool zero_syndrome =
        std::all_of(syndrome.begin(), syndrome.end(), [](const auto &x) { return x.is_zero(); });
    if (zero_syndrome && f == 0) {
        DecodeResult res;
        res.status = DecodeStatus::unique;
        res.error_estimate.assign(n, ctx.base_field->zero());
        return res;
    }

    // Power sums S[t] = e(gamma^{b+t}) for t = 0..delta-2.
    std::vector<FieldElement> shat;
    shat.reserve(syndrome.size());
    for (const auto &s : syndrome) {
        shat.push_back(ctx.embed.embed(s));
    }
    std::vector<FieldElement> S;
    S.reserve(window_mu_.size());
    for (const auto &mu : window_mu_) {
        FieldElement acc = big->zero();
        for (std::size_t i = 0; i < mu.size(); i++) {
            acc = acc + mu[i] * shat[i];
        }
        S.push_back(acc);
    }

    // Erasure locator Gamma(x) = prod (1 - gamma^{pos} x).
    FqPoly gamma_loc = FqPoly::constant(big->one());
    for (uint32_t pos : erasures) {
        gamma_loc = gamma_loc * FqPoly::from_coeffs(big, {big->one(), -gamma_pows_[pos]});
    }

    // Massey iteration seeded with the erasure locator: c and bpoly start at
    // Gamma with register length f, and only syndromes S[f..] drive updates.
    FqPoly c = gamma_loc, bpoly = gamma_loc;
    uint32_t L = f;
    uint32_t shift = 1;
    FieldElement bdisc = big->one();
    for (uint32_t idx = f; idx < S.size(); idx++) {
        FieldElement d = big->zero();
        for (uint32_t i = 0; i <= std::min<uint32_t>(idx, static_cast<uint32_t>(c.degree())); i++) {
            d = d + c.coeff(i) * S[idx - i];
        }
        if (d.is_zero()) {
            shift++;
        } else if (2 * L <= idx + f) {
            FqPoly t = c;
            c = c - bpoly.scaled(d / bdisc).shifted(shift);
            L = idx + 1 - L + f;
            bpoly = std::move(t);
            bdisc = d;
            shift = 1;
        } else {
            c = c - bpoly.scaled(d / bdisc).shifted(shift);
            shift++;
        }
    }
    FqPoly psi = std::move(c);
    if (psi.degree() < 0 || static_cast<uint32_t>(psi.degree()) != L) {
        return fail;  // locator inconsistency
    }
    uint32_t t_found = L - f;
    if (2 * t_found + f >= delta) {
        return fail;  // outside the guarantee region
    }

    // Chien search over all position locators.
    std::vector<uint32_t> positions;
    for (uint32_t pos = 0; pos < n; pos++) {
        FieldElement x_inv = gamma_pows_[(n - pos) % n];
        if (psi.eval(x_inv).is_zero()) {
            positions.push_back(pos);
        }
    }
    if (positions.size() != static_cast<std::size_t>(psi.degree())) {
        return fail;  // root count mismatch (roots missing or repeated)
    }

    // Forney: Omega = Psi * S mod x^{delta-1};
    // e_pos = -X^{1-b} Omega(X^{-1}) / Psi'(X^{-1}).
    FqPoly spoly = FqPoly::from_coeffs(big, S);
    FqPoly omega_poly = (psi * spoly).mod_xk(delta - 1);
    FqPoly psi_deriv = psi.derivative();
    uint32_t b = code_.bch_run_start();
    std::vector<FieldElement> estimate(n, ctx.base_field->zero());
    for (uint32_t pos : positions) {
        FieldElement x = gamma_pows_[pos];
        FieldElement x_inv = gamma_pows_[(n - pos) % n];
        FieldElement den = psi_deriv.eval(x_inv);
        if (den.is_zero()) {
            return fail;
        }
        // x^{1-b} = x * x^{-b}
        FieldElement x_pow = x * gamma_pows_[static_cast<std::size_t>(
                                     (static_cast<uint64_t>(n) - b) % n * pos % n)];
        FieldElement value = -(x_pow * omega_poly.eval(x_inv) / den);
        if (!ctx.embed.in_image(value)) {
            return fail;  // value escaped the base field
        }
        estimate[pos] = ctx.embed.project(value);
    }

    // The estimate must reproduce the entire input syndrome.
    auto check = syndrome_of(check_rows_, estimate);
    for (std::size_t i = 0; i < check.size(); i++) {
        if (check[i] != syndrome[i]) {
            return fail;
        }
    }
    DecodeResult res;
    res.status = DecodeStatus::unique;
    res.error_estimate = std::move(estimate);
    return res;
}

// --- punctured decoding ---

DecodeResult punctured_decode(const PunctureExpansion &pe,
                              std::span<const FieldElement> child_syndrome,
                              const ErasureDecoder &parent_decoder) {
    if (child_syndrome.size() != pe.child_checks.size()) {
        throw MathError("child syndrome length mismatch");
    }
    if (!verify_puncture_expansion(pe)) {
        throw MathError("puncture expansion identity violated");
    }
    const FieldPtr &field = pe.parent.field();

    // Solve s_i = sum_j a_ij s'_j; underdetermined, free variables zero.
    FqMat a = FqMat::from_rows(field, pe.a);
    auto sprime = a.solve(child_syndrome);
    if (!sprime) {
        throw MathError("syndrome lift is unsolvable (expansion rows dependent?)");
    }

    std::vector<uint32_t> erasures = {pe.position};
    DecodeResult parent_res = parent_decoder.decode(*sprime, erasures);
    if (parent_res.status != DecodeStatus::unique) {
        return parent_res;
    }
    // The parent estimate must reproduce the lifted syndrome; the
    // expansion identity then reproduces the child syndrome after
    // restriction.
    auto reproduced = syndrome_of(pe.parent_checks, parent_res.error_estimate);
    for (std::size_t j = 0; j < reproduced.size(); j++) {
        if (reproduced[j] != (*sprime)[j]) {
            return DecodeResult{};
        }
    }
    DecodeResult res;
    res.status = DecodeStatus::unique;
    res.error_estimate.reserve(pe.child.length());
    for (uint32_t i = 0; i < pe.parent.length(); i++) {
        if (i != pe.position) {
            res.error_estimate.push_back(parent_res.error_estimate[i]);
        }
    }
    return res;
}

}  // namespace qsc
