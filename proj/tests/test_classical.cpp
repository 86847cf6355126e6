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

#include "qsc/errors.hpp"
#include "qsc/linear_code.hpp"
#include "qsc/rng.hpp"
#include "qsc/symplectic.hpp"

using namespace qsc;

namespace {

LinearCode random_code(const FieldPtr &f, uint32_t n, uint32_t rows, CounterRng &rng) {
    std::vector<std::vector<FieldElement>> gen;
    for (uint32_t r = 0; r < rows; r++) {
        std::vector<FieldElement> row;
        for (uint32_t c = 0; c < n; c++) {
            row.push_back(f->from_index(rng.below(f->size())));
        }
        gen.push_back(std::move(row));
    }
    return LinearCode::from_rows(f, n, std::move(gen));
}

// The [5,2] code over F_4 behind the five-qudit construction:
// rows of the cyclic generator polynomial x^3 + w x^2 + w x + 1,
// with w the primitive element of F_4.
LinearCode five_two_code(const FieldPtr &f4) {
    FieldElement w = f4->omega(), one = f4->one(), zero = f4->zero();
    return LinearCode::from_rows(f4, 5,
                                 {{one, w, w, one, zero}, {zero, one, w, w, one}});
}

}  // namespace

TEST_CASE("dual basics") {
    FieldPtr f4 = Field::create(2, 2);
    LinearCode full = LinearCode::full_space(f4, 4);
    CHECK(full.dual().dim() == 0);
    CHECK(LinearCode::zero_code(f4, 4).dual().dim() == 4);

    LinearCode c = five_two_code(f4);
    LinearCode d = c.dual();
    CHECK(d.dim() == 3);
    for (const auto &x : c.generator_rows()) {
        for (const auto &y : d.generator_rows()) {
            CHECK(dot(x, y).is_zero());
        }
    }
}

TEST_CASE("dual is an involution on random codes") {
    CounterRng rng(21, 0);
    for (uint32_t pk : {4u, 9u}) {
        FieldPtr f = pk == 4 ? Field::create(2, 2) : Field::create(3, 2);
        for (int trial = 0; trial < 25; trial++) {
            LinearCode c = random_code(f, 3 + static_cast<uint32_t>(rng.below(6)), 1 + static_cast<uint32_t>(rng.below(3)), rng);
            CHECK(c.dual().dual().same_code_as(c));
        }
    }
}

TEST_CASE("conjugate: prime field fixed, involution, componentwise power") {
    FieldPtr f3 = Field::create(3, 1);
    CounterRng rng(22, 0);
    LinearCode c3 = random_code(f3, 5, 2, rng);
    CHECK(c3.conjugate(1).same_code_as(c3));

    FieldPtr f4 = Field::create(2, 2);
    LinearCode c = five_two_code(f4);
    CHECK(c.conjugate(1).conjugate(1).same_code_as(c));

    FieldElement w = f4->omega();
    LinearCode row = LinearCode::from_rows(f4, 2, {{f4->one(), w}});
    LinearCode expected = LinearCode::from_rows(f4, 2, {{f4->one(), w * w}});
    CHECK(row.conjugate(1).same_code_as(expected));
}

TEST_CASE("conjugate commutes with dual") {
    CounterRng rng(23, 0);
    FieldPtr f4 = Field::create(2, 2);
    for (int trial = 0; trial < 25; trial++) {
        LinearCode c = random_code(f4, 5, 2, rng);
        CHECK(c.conjugate(1).dual().same_code_as(c.dual().conjugate(1)));
    }
}

TEST_CASE("hermitian self-orthogonality") {
    FieldPtr f4 = Field::create(2, 2);
    CHECK(LinearCode::zero_code(f4, 3).is_hermitian_self_orthogonal());
    CHECK_FALSE(LinearCode::full_space(f4, 1).is_hermitian_self_orthogonal());
    CHECK(five_two_code(f4).is_hermitian_self_orthogonal());

    std::pair<uint32_t, uint32_t> bad;
    LinearCode full = LinearCode::full_space(f4, 2);
    CHECK(full.hermitian_violation(&bad));
}

TEST_CASE("the trace-orthogonal space equals (C^p)^perp") {
    // Brute-force oracle: collect every vector x with trace_inner(x, g) = 0
    // for all generators, compare with dual(conjugate(C)).
    CounterRng rng(24, 0);
    for (uint32_t pk : {4u, 9u}) {
        FieldPtr f = pk == 4 ? Field::create(2, 2) : Field::create(3, 2);
        uint32_t n = pk == 4 ? 5 : 4;
        for (int trial = 0; trial < 6; trial++) {
            LinearCode c = random_code(f, n, 2, rng);
            LinearCode expected = c.conjugate(1).dual();
            // The trace form is only F_p-bilinear, so orthogonality to C
            // means orthogonality to an F_p-spanning set: {g_i, omega g_i}.
            std::vector<std::vector<FieldElement>> spanning;
            for (const auto &g : c.generator_rows()) {
                spanning.push_back(g);
                std::vector<FieldElement> wg(g);
                for (auto &v : wg) {
                    v = v * f->omega();
                }
                spanning.push_back(std::move(wg));
            }
            uint64_t total = 1;
            for (uint32_t i = 0; i < n; i++) {
                total *= f->size();
            }
            uint64_t count = 0;
            std::vector<FieldElement> x(n, f->zero());
            for (uint64_t idx = 0; idx < total; idx++) {
                uint64_t v = idx;
                for (uint32_t i = 0; i < n; i++) {
                    x[i] = f->from_index(v % f->size());
                    v /= f->size();
                }
                bool orth = true;
                for (const auto &g : spanning) {
                    if (!trace_inner(x, g).is_zero()) {
                        orth = false;
                        break;
                    }
                }
                if (orth) {
                    count++;
                    CHECK(expected.contains(x));
                }
            }
            // double inclusion: counts match the expected size
            uint64_t expected_count = 1;
            for (uint32_t i = 0; i < expected.dim(); i++) {
                expected_count *= f->size();
            }
            CHECK(count == expected_count);
        }
    }
}

TEST_CASE("min_weight basics") {
    FieldPtr f4 = Field::create(2, 2);
    CHECK_THROWS_AS(LinearCode::zero_code(f4, 3).min_weight(), MathError);

    std::vector<FieldElement> ones(6, f4->one());
    LinearCode rep = LinearCode::from_rows(f4, 6, {ones});
    CHECK(rep.min_weight() == 6);

    LinearCode c = five_two_code(f4);
    LinearCode dual_conj = c.conjugate(1).dual();
    CHECK(dual_conj.min_weight() == 3);
    CHECK(dual_conj.min_weight_diff(c) == 3);  // the [[5,1,3]] distance
    CHECK(c.min_weight() == 4);

    CHECK_THROWS_AS(dual_conj.min_weight(16), BoundError);
}

TEST_CASE("min_weight_diff rejects non-subcodes and empty differences") {
    FieldPtr f4 = Field::create(2, 2);
    LinearCode c = five_two_code(f4);
    CHECK_THROWS_AS(c.min_weight_diff(LinearCode::full_space(f4, 5)), MathError);
    CHECK_THROWS_AS(c.min_weight_diff(c), MathError);
}

TEST_CASE("codeword enumeration visits q^r words") {
    FieldPtr f9 = Field::create(3, 2);
    CounterRng rng(25, 0);
    LinearCode c = random_code(f9, 4, 2, rng);
    uint64_t count = 0;
    c.for_each_codeword([&](std::span<const FieldElement> w) {
        CHECK(w.size() == 4);
        count++;
    });
    uint64_t expect = 1;
    for (uint32_t i = 0; i < c.dim(); i++) {
        expect *= 9;
    }
    CHECK(count == expect);
}

TEST_CASE("contains and sub_code_of") {
    FieldPtr f4 = Field::create(2, 2);
    LinearCode c = five_two_code(f4);
    for (const auto &row : c.generator_rows()) {
        CHECK(c.contains(row));
    }
    std::vector<FieldElement> not_in = {f4->one(), f4->zero(), f4->zero(), f4->zero(), f4->zero()};
    CHECK_FALSE(c.contains(not_in));
    CHECK(c.sub_code_of(c.conjugate(1).dual()));  // Hermitian self-orthogonality
}
