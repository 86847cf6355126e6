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

#include "qsc/channel.hpp"

#include <chrono>
#include <memory>
#include <ostream>
#include <sstream>

#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

std::string TrialReport::summary_line() const {
    std::ostringstream os;
    os << "qsc-sim trials=" << trials << " successes=" << successes
       << " exact=" << exact_recoveries << " degenerate=" << degenerate_recoveries
       << " detected_failures=" << detected_failures << " logical_errors=" << logical_errors;
    return os.str();
}

std::string TrialReport::text_block() const {
    std::ostringstream os;
    os << "trials:               " << trials << "\n"
       << "successes:            " << successes << "\n"
       << "  exact recoveries:   " << exact_recoveries << "\n"
       << "  degenerate:         " << degenerate_recoveries << "\n"
       << "detected failures:    " << detected_failures << "\n"
       << "logical errors:       " << logical_errors << "\n";
    if (trials > 0) {
        os << "success rate:         " << static_cast<double>(successes) / static_cast<double>(trials)
           << "\n";
    }
    return os.str();
}

namespace {

void write_block(SymplecticVector &e, uint32_t pos, uint64_t block_index) {
    // block_index in [1, p^{2m}): first m base-p digits fill a, the rest b.
    uint32_t p = e.p, m = e.m;
    for (uint32_t j = 0; j < m; j++) {
        e.a[pos * m + j] = static_cast<uint32_t>(block_index % p);
        block_index /= p;
    }
    for (uint32_t j = 0; j < m; j++) {
        e.b[pos * m + j] = static_cast<uint32_t>(block_index % p);
        block_index /= p;
    }
}

uint64_t local_block_count(uint32_t p, uint32_t m) {
    uint64_t c = 1;
    for (uint32_t i = 0; i < 2 * m; i++) {
        c *= p;
    }
    return c;
}

}  // namespace

SymplecticVector sample_error(const ChannelSpec &spec, uint32_t p, uint32_t m, uint32_t n,
                              uint64_t trial_index) {
    SymplecticVector e = SymplecticVector::zero(p, m, n);
    CounterRng rng(spec.seed, trial_index);
    uint64_t blocks = local_block_count(p, m);
    if (spec.kind == ChannelSpec::Kind::fixed_weight) {
        if (spec.weight > n) {
            throw MathError("channel weight exceeds the length");
        }
        // Partial Fisher-Yates for the support.
        std::vector<uint32_t> perm(n);
        for (uint32_t i = 0; i < n; i++) {
            perm[i] = i;
        }
        for (uint32_t i = 0; i < spec.weight; i++) {
            uint32_t j = i + static_cast<uint32_t>(rng.below(n - i));
            std::swap(perm[i], perm[j]);
            write_block(e, perm[i], 1 + rng.below(blocks - 1));
        }
    } else {
        if (spec.rate < 0.0 || spec.rate > 1.0) {
            throw MathError("channel rate must lie in [0, 1]");
        }
        for (uint32_t pos = 0; pos < n; pos++) {
            if (rng.unit() < spec.rate) {
                write_block(e, pos, 1 + rng.below(blocks - 1));
            }
        }
    }
    return e;
}

std::vector<uint32_t> measure(const SymplecticVector &e, const StabilizerCode &code) {
    std::vector<uint32_t> s;
    s.reserve(code.generators.size());
    for (const auto &g : code.generators) {
        s.push_back(alt_inner(g, e));
    }
    return s;
}

namespace {

/// Per-code decode context, built once and reused across trials.
struct DecodePipeline {
    const StabilizerCode &code;
    std::optional<CosetLeaderDecoder> table;
    std::optional<BmDecoder> bm;         // direct cyclic check code
    std::optional<BmDecoder> parent_bm;  // punctured construction

    DecodePipeline(const StabilizerCode &c, const SimOptions &opts) : code(c) {
        if (!c.classical_code) {
            throw MathError(
                "code has no classical origin; classical decoding is unavailable for raw "
                "symplectic constructions");
        }
        if (opts.decoder == DecoderChoice::table) {
            table.emplace(c.field, c.n, c.check_rows, opts.table_bound);
        } else {
            if (c.puncture_data && c.parent_cyclic_check) {
                parent_bm.emplace(*c.parent_cyclic_check);
            } else if (c.cyclic_check) {
                bm.emplace(*c.cyclic_check);
            } else {
                throw MathError("bm decoder requires a cyclic (or punctured cyclic) construction");
            }
        }
    }

    DecodeResult decode(std::span<const FieldElement> classical) const {
        if (table) {
            return table->decode(classical);
        }
        if (parent_bm) {
            return punctured_decode(*code.puncture_data, classical, *parent_bm);
        }
        return bm->decode(classical, {});
    }
};

enum class TrialOutcome { exact, degenerate, logical, failure };

TrialOutcome run_one(const DecodePipeline &pipe, const SymplecticVector &e, Syndrome *syn_out,
                     std::vector<FieldElement> *est_out) {
    const StabilizerCode &code = pipe.code;
    Syndrome syn;
    syn.raw = measure(e, code);
    syn.classical = convert_syndrome(syn.raw, code);
    if (syn_out) {
        *syn_out = syn;
    }
    DecodeResult res = pipe.decode(syn.classical);
    if (est_out && res.status == DecodeStatus::unique) {
        *est_out = res.error_estimate;
    }
    if (res.status != DecodeStatus::unique) {
        return TrialOutcome::failure;
    }
    SymplecticVector est = code.embed_error(res.error_estimate);
    SymplecticVector residual = est - e;
    if (residual.is_zero()) {
        return TrialOutcome::exact;
    }
    if (code.in_stabilizer_span(residual)) {
        return TrialOutcome::degenerate;
    }
    for (const auto &g : code.generators) {
        if (alt_inner(g, residual) != 0) {
            throw MathError("residual has a nonzero syndrome (internal error)");
        }
    }
    return TrialOutcome::logical;
}

void log_trial(std::ostream *out, uint64_t index, const SymplecticVector &e, const Syndrome &syn,
               const std::vector<FieldElement> &est, TrialOutcome outcome) {
    if (!out) {
        return;
    }
    static const char *names[] = {"exact", "degenerate", "logical", "failure"};
    *out << "trial " << index << " error " << e.to_digit_string() << " raw ";
    for (std::size_t i = 0; i < syn.raw.size(); i++) {
        *out << (i ? "," : "") << syn.raw[i];
    }
    *out << " classical ";
    for (std::size_t i = 0; i < syn.classical.size(); i++) {
        *out << (i ? "," : "") << syn.classical[i].index();
    }
    *out << " estimate ";
    if (outcome == TrialOutcome::failure) {
        *out << "-";
    } else {
        for (std::size_t i = 0; i < est.size(); i++) {
            *out << (i ? "," : "") << est[i].index();
        }
    }
    *out << " class " << names[static_cast<int>(outcome)] << "\n";
}

void tally(TrialReport &rep, TrialOutcome outcome) {
    rep.trials++;
    switch (outcome) {
        case TrialOutcome::exact:
            rep.exact_recoveries++;
            rep.successes++;
            break;
        case TrialOutcome::degenerate:
            rep.degenerate_recoveries++;
            rep.successes++;
            break;
        case TrialOutcome::logical:
            rep.logical_errors++;
            break;
        case TrialOutcome::failure:
            rep.detected_failures++;
            break;
    }
}

}  // namespace

TrialReport run_trials(const StabilizerCode &code, const ChannelSpec &spec, uint64_t n_trials,
                       const SimOptions &opts) {
    TrialReport rep;
    if (n_trials == 0) {
        return rep;
    }
    auto t0 = std::chrono::steady_clock::now();
    DecodePipeline pipe(code, opts);
    Syndrome syn;
    std::vector<FieldElement> est;
    for (uint64_t trial = 0; trial < n_trials; trial++) {
        SymplecticVector e = sample_error(spec, code.p, code.m, code.n, trial);
        TrialOutcome outcome = run_one(pipe, e, opts.transcript ? &syn : nullptr,
                                       opts.transcript ? &est : nullptr);
        log_trial(opts.transcript, trial, e, syn, est, outcome);
        tally(rep, outcome);
    }
    rep.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

TrialReport run_exhaustive_weight(const StabilizerCode &code, uint32_t t, const SimOptions &opts) {
    if (t > code.n) {
        throw MathError("weight exceeds the length");
    }
    TrialReport rep;
    auto t0 = std::chrono::steady_clock::now();
    DecodePipeline pipe(code, opts);
    Syndrome syn;
    std::vector<FieldElement> est;
    uint64_t blocks = local_block_count(code.p, code.m);
    uint64_t index = 0;

    std::vector<uint32_t> support;
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t start, uint32_t remaining) {
        if (remaining == 0) {
            std::vector<uint64_t> vals(support.size(), 1);
            while (true) {
                SymplecticVector e = SymplecticVector::zero(code.p, code.m, code.n);
                for (std::size_t i = 0; i < support.size(); i++) {
                    write_block(e, support[i], vals[i]);
                }
                TrialOutcome outcome = run_one(pipe, e, opts.transcript ? &syn : nullptr,
                                               opts.transcript ? &est : nullptr);
                log_trial(opts.transcript, index++, e, syn, est, outcome);
                tally(rep, outcome);
                std::size_t pos = 0;
                while (pos < vals.size()) {
                    vals[pos]++;
                    if (vals[pos] < blocks) {
                        break;
                    }
                    vals[pos] = 1;
                    pos++;
                }
                if (pos == vals.size()) {
                    break;
                }
            }
            return;
        }
        for (uint32_t i = start; i + remaining <= code.n; i++) {
            support.push_back(i);
            rec(i + 1, remaining - 1);
            support.pop_back();
        }
    };
    if (t == 0) {
        SymplecticVector e = SymplecticVector::zero(code.p, code.m, code.n);
        TrialOutcome outcome =
            run_one(pipe, e, opts.transcript ? &syn : nullptr, opts.transcript ? &est : nullptr);
        log_trial(opts.transcript, index++, e, syn, est, outcome);
        tally(rep, outcome);
    } else {
        rec(0, t);
    }
    rep.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qsc
