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

#include <doctest.h>

#include <algorithm>

#include "qsc/errors.hpp"
#include "qsc/field.hpp"
#include "qsc/rng.hpp"

using namespace qsc;

namespace {

// Independent rank oracle over F_p (row echelon, no library reuse).
std::size_t rank_oracle(uint32_t p, std::vector<std::vector<uint32_t>> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols; col++) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] % p == 0) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        uint64_t inv = 1, a = rows[rank][col] % p;
        for (uint64_t t = 1; t < p; t++) {
            if (a * t % p == 1) {
                inv = t;
                break;
            }
        }
        for (auto &v : rows[rank]) {
            v = static_cast<uint32_t>(v * inv % p);
        }
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col] % p == 0) {
                continue;
            }
            uint64_t f = rows[r][col] % p;
            for (std::size_t c = 0; c < cols; c++) {
                rows[r][c] = static_cast<uint32_t>((rows[r][c] + (p - f) * rows[rank][c]) % p);
            }
        }
        rank++;
    }
    return rank;
}

// Brute-force product of two polynomials over F_p (test-side oracle).
std::vector<uint32_t> poly_mul_oracle(uint32_t p, const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            out[i + j] = static_cast<uint32_t>((out[i + j] + 1ull * a[i] * b[j]) % p);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("field_create picks the unique modulus for F_4") {
    FieldPtr f4 = Field::create(2, 2);
    CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});  // x^2 + x + 1
    CHECK(f4->size() == 4);
}

TEST_CASE("prime field degenerate case") {
    FieldPtr f3 = Field::create(3, 1);
    CHECK(f3->modulus() == std::vector<uint32_t>{0, 1});  // modulus x
    CHECK(f3->omega().index() == 2);                      // primitive element 2
    CHECK(f3->from_scalar(2).coeffs().size() == 1);
}

TEST_CASE("F_16 modulus passes the brute-force irreducibility oracle") {
    FieldPtr f16 = Field::create(2, 4);
    const auto &mod = f16->modulus();
    // No factorization into degree (1,3) or (2,2) products exists.
    for (uint32_t da = 1; da <= 2; da++) {
        uint32_t db = 4 - da;
        for (uint32_t ia = 0; ia < (1u << da); ia++) {
            for (uint32_t ib = 0; ib < (1u << db); ib++) {
                std::vector<uint32_t> a(da + 1, 0), b(db + 1, 0);
                for (uint32_t t = 0; t < da; t++) {
                    a[t] = (ia >> t) & 1;
                }
                a[da] = 1;
                for (uint32_t t = 0; t < db; t++) {
                    b[t] = (ib >> t) & 1;
                }
                b[db] = 1;
                CHECK(poly_mul_oracle(2, a, b) != mod);
            }
        }
    }
}

TEST_CASE("field_create rejects bad input") {
    CHECK_THROWS_AS(Field::create(4, 2), MathError);
    CHECK_THROWS_AS(Field::create(1, 2), MathError);
    CHECK_THROWS_AS(Field::create(2, 0), MathError);
    CHECK_THROWS_AS(Field::create(2, 21), BoundError);  // 2^21 > 2^20
    CHECK(Field::create(2, 21, {.allow_large = true})->size() == (1ull << 21));
}

TEST_CASE("arithmetic identities") {
    FieldPtr f4 = Field::create(2, 2);
    FieldElement w = f4->omega();
    CHECK((w * w * w).is_one());     // omega^3 = 1
    CHECK((w * (w * w)).is_one());
    CHECK(w.pow(3).is_one());

    for (uint32_t pk : {5u, 9u, 8u}) {
        FieldPtr f = pk == 5 ? Field::create(5, 1) : pk == 9 ? Field::create(3, 2)
                                                             : Field::create(2, 3);
        for (uint64_t i = 0; i < f->size(); i++) {
            FieldElement x = f->from_index(i);
            CHECK((x + (-x)).is_zero());
            if (!x.is_zero()) {
                CHECK((x.inv() * x).is_one());
                CHECK((x / x).is_one());
            }
        }
    }
    CHECK_THROWS_AS(f4->zero().inv(), MathError);
    FieldPtr f4b = Field::create(3, 1);
    CHECK_THROWS_AS(f4->one() + f4b->one(), MathError);
}

TEST_CASE("pow matches repeated multiplication and handles edge cases") {
    FieldPtr f9 = Field::create(3, 2);
    CounterRng rng(3, 0);
    for (int trial = 0; trial < 50; trial++) {
        FieldElement x = f9->from_index(1 + rng.below(8));
        FieldElement acc = f9->one();
        for (int64_t e = 0; e < 12; e++) {
            CHECK(x.pow(e) == acc);
            acc = acc * x;
        }
        CHECK(x.pow(-1) == x.inv());
        CHECK(x.pow(-3) == x.inv().pow(3));
    }
    CHECK(f9->zero().pow(0).is_one());
    CHECK(f9->zero().pow(5).is_zero());
    CHECK_THROWS_AS(f9->zero().pow(-1), MathError);
}

TEST_CASE("frobenius on F_4 maps omega to omega + 1") {
    FieldPtr f4 = Field::create(2, 2);
    FieldElement w = f4->omega();
    CHECK(w.frobenius(1) == w * w);
    CHECK(w.frobenius(1) == w + f4->one());
    // Frobenius fixes the prime subfield.
    CHECK(f4->one().frobenius(1) == f4->one());
    CHECK(f4->zero().frobenius(1).is_zero());
}

TEST_CASE("frobenius is an automorphism and has order k") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 2}, {2, 3}, {5, 2}}) {
        FieldPtr f = Field::create(p, k);
        for (uint64_t i = 0; i < f->size(); i++) {
            FieldElement x = f->from_index(i);
            CHECK(x.frobenius(k) == x);  // identity on GF(p^k)
            for (uint64_t j = 0; j < f->size(); j++) {
                FieldElement y = f->from_index(j);
                CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
                CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
            }
        }
    }
    // frobenius(frobenius(x, 2), 2) = x on F_16 (m = 2 conjugation involutive)
    FieldPtr f16 = Field::create(2, 4);
    for (uint64_t i = 0; i < 16; i++) {
        FieldElement x = f16->from_index(i);
        CHECK(x.frobenius(2).frobenius(2) == x);
    }
}

TEST_CASE("find_primitive returns the least generator") {
    FieldPtr f4 = Field::create(2, 2);
    FieldElement w = find_primitive(f4);
    CHECK(!w.is_zero());
    CHECK(!w.is_one());
    CHECK(w.index() == 2);  // both non-unit candidates work; least wins

    FieldPtr f5 = Field::create(5, 1);
    CHECK(find_primitive(f5).index() == 2);

    // Order oracle: repeated multiplication.
    FieldPtr f9 = Field::create(3, 2);
    FieldElement g = find_primitive(f9);
    FieldElement acc = g;
    uint64_t order = 1;
    while (!acc.is_one()) {
        acc = acc * g;
        order++;
    }
    CHECK(order == 8);
    CHECK(g.mult_order() == 8);
}

TEST_CASE("every primitive omega in F_p^2 spans with its conjugate") {
    // Exhaustive over all primitive elements for p in {2,3,5,7}.
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        FieldPtr f = Field::create(p, 2);
        uint64_t q = f->size();
        for (uint64_t i = 1; i < q; i++) {
            FieldElement w = f->from_index(i);
            if (w.mult_order() != q - 1) {
                continue;
            }
            auto rank = rank_oracle(p, {{w.coeffs()[0], w.coeffs()[1]},
                                        {w.frobenius(1).coeffs()[0], w.frobenius(1).coeffs()[1]}});
            CHECK(rank == 2);
        }
    }
}

TEST_CASE("normal basis: orbit has full rank, elements of F_p fail") {
    FieldPtr f4 = Field::create(2, 2);
    NormalBasis nb = find_normal_basis(f4);
    CHECK(nb.theta == f4->omega());  // {omega, omega^2} is a basis
    CHECK(nb.powers.size() == 2);

    // scalars have collapsing orbits, so theta is never in F_p
    CHECK(nb.theta.index() >= f4->p());

    FieldPtr f16 = Field::create(2, 4);
    NormalBasis nb16 = find_normal_basis(f16);
    std::vector<std::vector<uint32_t>> rows;
    for (const auto &pw : nb16.powers) {
        rows.push_back(pw.coeffs());
    }
    CHECK(rank_oracle(2, rows) == 4);
    CHECK(nb16.power_matrix.mul(nb16.change_of_basis) == FpMat::identity(2, 4));
}

TEST_CASE("find_normal_basis(p, twom) wrapper builds the field itself") {
    NormalBasis nb = find_normal_basis(2, 4);
    CHECK(nb.field->size() == 16);
    CHECK(nb.powers.size() == 4);
    CHECK_THROWS_AS(find_normal_basis(2, 3), MathError);  // odd degree rejected
}

TEST_CASE("coords invert the linear combination") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 4}}) {
        FieldPtr f = Field::create(p, k);
        NormalBasis nb = find_normal_basis(f);
        CHECK(nb.coords(nb.theta) ==
              std::vector<uint32_t>(std::vector<uint32_t>{1, 0, 0, 0}));
        CHECK(nb.coords(f->zero()) == std::vector<uint32_t>(k, 0));
        CounterRng rng(17, p);
        for (int trial = 0; trial < 100; trial++) {
            FieldElement x = f->from_index(rng.below(f->size()));
            auto c = nb.coords(x);
            CHECK(nb.combine(c) == x);
            auto c2 = coords_in_basis(x, nb.powers);
            CHECK(c2 == c);
        }
    }
    // singular basis rejected
    FieldPtr f4 = Field::create(2, 2);
    std::vector<FieldElement> bad = {f4->one(), f4->one()};
    CHECK_THROWS_AS(coords_in_basis(f4->omega(), bad), MathError);
}

TEST_CASE("dual basis for a nonzero functional has an identity Gram matrix") {
    for (uint32_t p : {2u, 3u}) {
        FieldPtr f = Field::create(p, 2);
        NormalBasis nb = find_normal_basis(f);
        uint32_t m = 1;
        auto P = [&](const FieldElement &x) {
            auto c = nb.coords(x);
            return fp_sub(p, c[m], c[0]);
        };
        std::vector<FieldElement> alphas = {f->one(), f->omega()};
        DualBasisData dual = dual_basis_for_p(alphas, P, m);
        for (uint32_t j = 0; j < 2; j++) {
            for (uint32_t kk = 0; kk < 2; kk++) {
                CHECK(P(alphas[j].frobenius(m) * dual.betas[kk]) == (j == kk ? 1 : 0));
            }
        }
    }
}

TEST_CASE("subfield embedding is a ring homomorphism with a working inverse") {
    FieldPtr f4 = Field::create(2, 2);
    FieldPtr f16 = Field::create(2, 4);
    SubfieldEmbedding emb(f4, f16);
    for (uint64_t i = 0; i < 4; i++) {
        for (uint64_t j = 0; j < 4; j++) {
            FieldElement x = f4->from_index(i), y = f4->from_index(j);
            CHECK(emb.embed(x + y) == emb.embed(x) + emb.embed(y));
            CHECK(emb.embed(x * y) == emb.embed(x) * emb.embed(y));
        }
        CHECK(emb.project(emb.embed(f4->from_index(i))) == f4->from_index(i));
    }
    CHECK(emb.embed(f4->one()).is_one());
    // 4 of the 16 elements lie in the image
    int in_count = 0;
    for (uint64_t i = 0; i < 16; i++) {
        in_count += emb.in_image(f16->from_index(i)) ? 1 : 0;
    }
    CHECK(in_count == 4);
    // identity embedding when the fields coincide
    SubfieldEmbedding same(f4, f4);
    for (uint64_t i = 0; i < 4; i++) {
        CHECK(same.embed(f4->from_index(i)) == f4->from_index(i));
    }
}

TEST_CASE("field description is reproducible") {
    CHECK(Field::create(2, 2)->describe() == Field::create(2, 2)->describe());
    CHECK(Field::create(2, 2)->describe().find("p=2 k=2 modulus=1,1,1") != std::string::npos);
}
