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
#include "qsc/fp_linalg.hpp"
#include "qsc/rng.hpp"

using namespace qsc;

namespace {
FpMat random_mat(uint32_t p, std::size_t r, std::size_t c, CounterRng &rng) {
    FpMat m(p, r, c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            m.at(i, j) = static_cast<uint32_t>(rng.below(p));
        }
    }
    return m;
}
}  // namespace

TEST_CASE("fp scalar arithmetic") {
    CHECK(fp_add(5, 3, 4) == 2);
    CHECK(fp_sub(5, 1, 3) == 3);
    CHECK(fp_mul(7, 3, 5) == 1);
    CHECK(fp_neg(2, 1) == 1);
    CHECK(fp_neg(5, 0) == 0);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        for (uint32_t a = 1; a < p; a++) {
            CHECK(fp_mul(p, a, fp_inv(p, a)) == 1);
        }
    }
    CHECK_THROWS_AS(fp_inv(5, 0), MathError);
}

TEST_CASE("rref, rank, inverse agree with hand values") {
    FpMat m = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(m.rank() == 2);  // rows sum to zero mod 2

    FpMat id = FpMat::identity(3, 4);
    CHECK(id.rank() == 4);
    CHECK(*id.inverse() == id);

    FpMat a = FpMat::from_rows(5, {{2, 1}, {1, 1}});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a.mul(*inv) == FpMat::identity(5, 2));
}

TEST_CASE("inverse round trip on random invertible matrices") {
    CounterRng rng(7, 0);
    for (uint32_t p : {2u, 3u, 7u}) {
        int done = 0;
        while (done < 20) {
            FpMat m = random_mat(p, 4, 4, rng);
            auto inv = m.inverse();
            if (!inv) {
                continue;
            }
            CHECK(m.mul(*inv) == FpMat::identity(p, 4));
            CHECK(inv->mul(m) == FpMat::identity(p, 4));
            done++;
        }
    }
}

TEST_CASE("solve returns a consistent solution or nullopt") {
    CounterRng rng(11, 0);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 50; trial++) {
            FpMat a = random_mat(p, 3, 5, rng);
            std::vector<uint32_t> x0(5);
            for (auto &v : x0) {
                v = static_cast<uint32_t>(rng.below(p));
            }
            std::vector<uint32_t> b(3, 0);
            for (std::size_t i = 0; i < 3; i++) {
                for (std::size_t j = 0; j < 5; j++) {
                    b[i] = fp_add(p, b[i], fp_mul(p, a.at(i, j), x0[j]));
                }
            }
            auto x = a.solve(b);
            REQUIRE(x.has_value());
            for (std::size_t i = 0; i < 3; i++) {
                uint32_t acc = 0;
                for (std::size_t j = 0; j < 5; j++) {
                    acc = fp_add(p, acc, fp_mul(p, a.at(i, j), (*x)[j]));
                }
                CHECK(acc == b[i]);
            }
        }
    }
    FpMat bad = FpMat::from_rows(2, {{1, 0}, {1, 0}});
    std::vector<uint32_t> rhs = {1, 0};
    CHECK_FALSE(bad.solve(rhs).has_value());
}

TEST_CASE("nullspace rows annihilate and have the right count") {
    CounterRng rng(13, 0);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 30; trial++) {
            FpMat a = random_mat(p, 3, 6, rng);
            FpMat ns = a.nullspace();
            CHECK(ns.rows() == 6 - a.rank());
            for (std::size_t i = 0; i < ns.rows(); i++) {
                std::vector<uint32_t> v(ns.row(i).begin(), ns.row(i).end());
                for (std::size_t r = 0; r < a.rows(); r++) {
                    uint32_t acc = 0;
                    for (std::size_t c = 0; c < 6; c++) {
                        acc = fp_add(p, acc, fp_mul(p, a.at(r, c), v[c]));
                    }
                    CHECK(acc == 0);
                }
            }
            CHECK(ns.rank() == ns.rows());
        }
    }
}

TEST_CASE("apply_left is the row-vector product") {
    FpMat a = FpMat::from_rows(3, {{1, 2}, {0, 1}});
    std::vector<uint32_t> v = {2, 2};
    auto out = a.apply_left(v);
    CHECK(out == std::vector<uint32_t>{2, 0});
}
