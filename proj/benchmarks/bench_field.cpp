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

#include <benchmark/benchmark.h>

#include "qsc/field.hpp"

using namespace qsc;

namespace {

FieldPtr field_for(int64_t arg) {
    switch (arg) {
        case 16:
            return Field::create(2, 4);
        case 81:
            return Field::create(3, 4);
        case 256:
            return Field::create(2, 8);
        default:
            return Field::create(2, 2);
    }
}

std::vector<FieldElement> nonzero_elements(const FieldPtr &f) {
    std::vector<FieldElement> out;
    for (uint64_t i = 1; i < f->size(); i++) {
        out.push_back(f->from_index(i));
    }
    return out;
}

}  // namespace

static void BM_FieldMul(benchmark::State &state) {
    FieldPtr f = field_for(state.range(0));
    auto elems = nonzero_elements(f);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto &x = elems[i % elems.size()];
        const auto &y = elems[(i * 7 + 3) % elems.size()];
        benchmark::DoNotOptimize(x * y);
        i++;
    }
}
BENCHMARK(BM_FieldMul)->Arg(16)->Arg(81)->Arg(256);

static void BM_FieldInv(benchmark::State &state) {
    FieldPtr f = field_for(state.range(0));
    auto elems = nonzero_elements(f);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elems[i % elems.size()].inv());
        i++;
    }
}
BENCHMARK(BM_FieldInv)->Arg(16)->Arg(81)->Arg(256);

static void BM_Frobenius(benchmark::State &state) {
    FieldPtr f = field_for(state.range(0));
    auto elems = nonzero_elements(f);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elems[i % elems.size()].frobenius(1));
        i++;
    }
}
BENCHMARK(BM_Frobenius)->Arg(16)->Arg(256);

static void BM_FieldCreate(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(Field::create(2, static_cast<uint32_t>(state.range(0))));
    }
}
BENCHMARK(BM_FieldCreate)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
