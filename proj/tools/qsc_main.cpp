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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qsc/channel.hpp"
#include "qsc/cyclic_code.hpp"
#include "qsc/errors.hpp"
#include "qsc/serialize.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitBound = 3;

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qsc::ParseError("cannot open '" + path + "'", 0);
    }
    return in;
}

int cmd_build(const std::string &spec_path, const std::string &out_path, uint64_t max_enum) {
    auto in = open_input(spec_path);
    qsc::CodeSpecFile spec = qsc::read_code_spec(in);
    qsc::StabilizerCode code = qsc::build_from_spec(spec, max_enum);
    std::cout << "built " << code.params_string() << "\n";
    if (spec.construction == qsc::CodeSpecFile::Construction::cyclic_roots) {
        // the q-cyclotomic closure may have extended the requested roots
        qsc::CyclicCode cyc = qsc::CyclicCode::from_roots(
            qsc::Field::create(spec.p, 2 * spec.m), spec.n, spec.roots);
        std::cout << "cyclic defining set (after closure):";
        for (uint32_t j : cyc.defining_set()) {
            std::cout << " " << j;
        }
        std::cout << "\n";
    }
    std::cout << "generators: " << code.generators.size() << "\n";
    if (code.classical_code) {
        std::cout << "classical code: [" << code.classical_code->length() << ","
                  << code.classical_code->dim() << "] over GF(" << code.field->size() << ")\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw qsc::ParseError("cannot write '" + out_path + "'", 0);
        }
        qsc::write_stabilizer(out, code);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string &code_path, uint64_t trials, int64_t exhaustive_weight,
                 uint32_t weight, double rate, bool use_rate, uint64_t seed,
                 const std::string &decoder, uint64_t max_table,
                 const std::string &transcript_path) {
    auto in = open_input(code_path);
    qsc::StabilizerCode code = qsc::read_stabilizer(in);

    qsc::SimOptions sim;
    sim.decoder = decoder == "bm" ? qsc::DecoderChoice::bm : qsc::DecoderChoice::table;
    sim.table_bound = max_table;
    std::ofstream transcript;
    if (!transcript_path.empty()) {
        transcript.open(transcript_path);
        if (!transcript) {
            throw qsc::ParseError("cannot write '" + transcript_path + "'", 0);
        }
        sim.transcript = &transcript;
    }

    std::cout << "code: " << code.params_string() << "\n";
    std::cout << "decoder: " << decoder << "\n";

    qsc::TrialReport rep;
    if (exhaustive_weight >= 0) {
        std::cout << "channel: exhaustive weight " << exhaustive_weight << "\n";
        rep = qsc::run_exhaustive_weight(code, static_cast<uint32_t>(exhaustive_weight), sim);
    } else {
        qsc::ChannelSpec spec;
        spec.seed = seed;
        if (use_rate) {
            spec.kind = qsc::ChannelSpec::Kind::iid;
            spec.rate = rate;
            std::cout << "channel: iid rate " << rate << " seed " << seed << "\n";
        } else {
            spec.kind = qsc::ChannelSpec::Kind::fixed_weight;
            spec.weight = weight;
            std::cout << "channel: fixed-weight " << weight << " seed " << seed << "\n";
        }
        rep = qsc::run_trials(code, spec, trials, sim);
    }
    std::cout << rep.text_block();
    std::cout << rep.summary_line() << "\n";
    std::cerr << "elapsed: " << rep.elapsed_sec << " s\n";
    return 0;
}

int cmd_search(uint32_t p, uint32_t m, uint32_t n, uint32_t k, uint64_t budget, uint64_t seed,
               const std::string &out_path, uint64_t max_enum) {
    qsc::SearchOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    opts.enum_bound = max_enum;
    auto found = qsc::search_codes(p, m, n, k, opts);
    std::cout << "candidates found: " << found.size() << "\n";
    for (std::size_t i = 0; i < found.size(); i++) {
        std::cout << (i + 1) << ". " << found[i].params_string() << "\n";
    }
    if (!found.empty() && !out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw qsc::ParseError("cannot write '" + out_path + "'", 0);
        }
        qsc::write_code_spec(out, qsc::spec_of_code(found.front()));
        std::cout << "wrote best candidate spec to " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qudit stabilizer codes from classical codes: build, search, decode, simulate"};
    app.require_subcommand(1);

    std::string spec_path, out_path, code_path, transcript_path;
    std::string decoder = "table";
    uint64_t trials = 1000, seed = 1, budget = 1000;
    uint64_t max_enum = qsc::kDefaultEnumBound, max_table = qsc::kDefaultTableBound;
    uint32_t weight = 1, p = 2, m = 1, n = 5, k = 1;
    double rate = -1.0;
    int64_t exhaustive_weight = -1;

    auto *build = app.add_subcommand("build", "construct a code from a spec file");
    build->add_option("--spec", spec_path, "qsc-spec input file")->required();
    build->add_option("--out", out_path, "write the stabilizer record here");
    build->add_option("--max-enum", max_enum, "codeword enumeration bound");

    auto *sim = app.add_subcommand("simulate", "run the error-correction cycle");
    sim->add_option("--code", code_path, "qsc-stabilizer record")->required();
    sim->add_option("--trials", trials, "number of random trials");
    sim->add_option("--seed", seed, "base seed for counter RNG (default 1, printed)");
    sim->add_option("--weight", weight, "fixed error weight per trial");
    sim->add_option("--rate", rate, "iid corruption rate per position")
        ->check(CLI::Range(0.0, 1.0));
    sim->add_option("--exhaustive-weight", exhaustive_weight,
                    "enumerate every error of this weight instead of sampling");
    sim->add_option("--decoder", decoder, "table | bm")
        ->check(CLI::IsMember({"table", "bm"}));
    sim->add_option("--max-table", max_table, "syndrome table entry bound");
    sim->add_option("--transcript", transcript_path, "write per-trial decode transcript");

    auto *search = app.add_subcommand("search", "search for self-orthogonal constructions");
    search->add_option("--p", p, "characteristic")->required();
    search->add_option("--m", m, "qudit exponent (p^m levels)")->required();
    search->add_option("--n", n, "length")->required();
    search->add_option("--k", k, "logical qudits")->required();
    search->add_option("--budget", budget, "candidates to examine");
    search->add_option("--seed", seed, "seed for the random part (default 1, printed)");
    search->add_option("--out", out_path, "emit the best candidate as a spec file");
    search->add_option("--max-enum", max_enum, "codeword enumeration bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed()) {
            return cmd_build(spec_path, out_path, max_enum);
        }
        if (sim->parsed()) {
            return cmd_simulate(code_path, trials, exhaustive_weight, weight, rate, rate >= 0.0,
                                seed, decoder, max_table, transcript_path);
        }
        if (search->parsed()) {
            return cmd_search(p, m, n, k, budget, seed, out_path, max_enum);
        }
    } catch (const qsc::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qsc::BoundError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const qsc::MathError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const qsc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return 0;
}
