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

#include "qsc/serialize.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

struct Line {
    std::size_t number;
    std::string key;
    std::vector<std::string> values;
};

std::vector<Line> read_lines(std::istream &in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        number++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream is(raw);
        Line line;
        line.number = number;
        if (!(is >> line.key)) {
            continue;  // blank
        }
        std::string tok;
        while (is >> tok) {
            line.values.push_back(tok);
        }
        out.push_back(std::move(line));
    }
    return out;
}

uint64_t parse_u64(const std::string &s, std::size_t line) {
    try {
        std::size_t used = 0;
        uint64_t v = std::stoull(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError("expected an unsigned integer, got '" + s + "'", line);
    }
}

uint64_t single_u64(const Line &line) {
    if (line.values.size() != 1) {
        throw ParseError("'" + line.key + "' expects exactly one value", line.number);
    }
    return parse_u64(line.values[0], line.number);
}

}  // namespace

CodeSpecFile read_code_spec(std::istream &in) {
    auto lines = read_lines(in);
    if (lines.empty() || lines[0].key != "qsc-spec") {
        throw ParseError("expected a 'qsc-spec v1' header", lines.empty() ? 1 : lines[0].number);
    }
    CodeSpecFile spec;
    bool have_p = false, have_n = false, have_construction = false;
    for (std::size_t i = 1; i < lines.size(); i++) {
        const Line &line = lines[i];
        if (line.key == "p") {
            spec.p = static_cast<uint32_t>(single_u64(line));
            have_p = true;
        } else if (line.key == "m") {
            spec.m = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "n") {
            spec.n = static_cast<uint32_t>(single_u64(line));
            have_n = true;
        } else if (line.key == "construction") {
            if (line.values.size() != 1) {
                throw ParseError("'construction' expects one value", line.number);
            }
            const std::string &v = line.values[0];
            if (v == "generator-rows") {
                spec.construction = CodeSpecFile::Construction::generator_rows;
            } else if (v == "cyclic-roots") {
                spec.construction = CodeSpecFile::Construction::cyclic_roots;
            } else if (v == "symplectic-generators") {
                spec.construction = CodeSpecFile::Construction::symplectic_generators;
            } else {
                throw ParseError("unknown construction '" + v + "'", line.number);
            }
            have_construction = true;
        } else if (line.key == "row") {
            std::vector<uint64_t> row;
            for (const auto &v : line.values) {
                row.push_back(parse_u64(v, line.number));
            }
            spec.rows.push_back(std::move(row));
        } else if (line.key == "roots") {
            for (const auto &v : line.values) {
                spec.roots.push_back(static_cast<uint32_t>(parse_u64(v, line.number)));
            }
        } else if (line.key == "gen") {
            if (line.values.size() != 1) {
                throw ParseError("'gen' expects one digit string", line.number);
            }
            spec.gens.push_back(line.values[0]);
        } else if (line.key == "omega") {
            spec.omega_index = single_u64(line);
        } else if (line.key == "alphas") {
            for (const auto &v : line.values) {
                spec.alpha_indices.push_back(parse_u64(v, line.number));
            }
        } else if (line.key == "embedding") {
            if (line.values.size() != 1 ||
                (line.values[0] != "phi" && line.values[0] != "big-phi")) {
                throw ParseError("'embedding' expects phi or big-phi", line.number);
            }
            spec.embedding =
                line.values[0] == "phi" ? EmbeddingKind::phi : EmbeddingKind::big_phi;
        } else if (line.key == "puncture") {
            spec.puncture_position = static_cast<uint32_t>(single_u64(line));
        } else {
            throw ParseError("unknown key '" + line.key + "'", line.number);
        }
    }
    if (!have_p || !have_n || !have_construction) {
        throw ParseError("spec requires p, n and construction", lines.back().number);
    }
    return spec;
}

void write_code_spec(std::ostream &out, const CodeSpecFile &spec) {
    out << "qsc-spec v1\n";
    out << "p " << spec.p << "\n";
    out << "m " << spec.m << "\n";
    out << "n " << spec.n << "\n";
    switch (spec.construction) {
        case CodeSpecFile::Construction::generator_rows:
            out << "construction generator-rows\n";
            break;
        case CodeSpecFile::Construction::cyclic_roots:
            out << "construction cyclic-roots\n";
            break;
        case CodeSpecFile::Construction::symplectic_generators:
            out << "construction symplectic-generators\n";
            break;
    }
    if (!spec.roots.empty()) {
        out << "roots";
        for (uint32_t r : spec.roots) {
            out << " " << r;
        }
        out << "\n";
    }
    for (const auto &row : spec.rows) {
        out << "row";
        for (uint64_t v : row) {
            out << " " << v;
        }
        out << "\n";
    }
    for (const auto &g : spec.gens) {
        out << "gen " << g << "\n";
    }
    if (spec.embedding) {
        out << "embedding " << (*spec.embedding == EmbeddingKind::phi ? "phi" : "big-phi") << "\n";
    }
    if (spec.omega_index) {
        out << "omega " << *spec.omega_index << "\n";
    }
    if (!spec.alpha_indices.empty()) {
        out << "alphas";
        for (uint64_t a : spec.alpha_indices) {
            out << " " << a;
        }
        out << "\n";
    }
    if (spec.puncture_position) {
        out << "puncture " << *spec.puncture_position << "\n";
    }
}

StabilizerCode build_from_spec(const CodeSpecFile &spec, uint64_t enum_bound) {
    FieldPtr field = Field::create(spec.p, 2 * spec.m);
    ClassicalBuildOptions opts;
    opts.enum_bound = enum_bound;
    opts.embedding = spec.embedding;
    if (spec.omega_index) {
        opts.omega_override = field->from_index(*spec.omega_index);
    }
    for (uint64_t idx : spec.alpha_indices) {
        opts.alphas.push_back(field->from_index(idx));
    }

    if (spec.construction == CodeSpecFile::Construction::symplectic_generators) {
        if (spec.puncture_position) {
            throw MathError("puncture applies to cyclic constructions only");
        }
        std::vector<SymplecticVector> gens;
        for (const auto &s : spec.gens) {
            gens.push_back(SymplecticVector::from_digit_string(spec.p, spec.m, spec.n, s));
        }
        return stabilizer_from_symplectic_basis(std::move(gens), spec.p, spec.m, spec.n,
                                                enum_bound);
    }
    if (spec.construction == CodeSpecFile::Construction::cyclic_roots) {
        CyclicCode cyc = CyclicCode::from_roots(field, spec.n, spec.roots);
        if (spec.puncture_position) {
            return stabilizer_from_punctured_cyclic(cyc, *spec.puncture_position, opts);
        }
        return stabilizer_from_cyclic(cyc, opts);
    }
    if (spec.puncture_position) {
        throw MathError("puncture applies to cyclic constructions only");
    }
    std::vector<std::vector<FieldElement>> rows;
    for (const auto &row : spec.rows) {
        std::vector<FieldElement> r;
        r.reserve(row.size());
        for (uint64_t idx : row) {
            r.push_back(field->from_index(idx));
        }
        rows.push_back(std::move(r));
    }
    return stabilizer_from_classical(LinearCode::from_rows(field, spec.n, std::move(rows)), opts);
}

CodeSpecFile spec_of_code(const StabilizerCode &code) {
    CodeSpecFile spec;
    spec.p = code.p;
    spec.m = code.m;
    spec.n = code.n;
    spec.embedding = code.embedding;
    if (code.classical_code) {
        spec.construction = CodeSpecFile::Construction::generator_rows;
        for (const auto &row : code.classical_code->generator_rows()) {
            std::vector<uint64_t> r;
            r.reserve(row.size());
            for (const auto &x : row) {
                r.push_back(x.index());
            }
            spec.rows.push_back(std::move(r));
        }
        if (code.embedding == EmbeddingKind::phi) {
            spec.omega_index = code.omega->index();
        } else {
            for (const auto &a : code.alphas) {
                spec.alpha_indices.push_back(a.index());
            }
        }
    } else {
        spec.construction = CodeSpecFile::Construction::symplectic_generators;
        for (const auto &g : code.generators) {
            spec.gens.push_back(g.to_digit_string());
        }
    }
    return spec;
}

void write_stabilizer(std::ostream &out, const StabilizerCode &code) {
    out << "qsc-stabilizer v1\n";
    out << "p " << code.p << "\n";
    out << "m " << code.m << "\n";
    out << "n " << code.n << "\n";
    out << "k " << code.k << "\n";
    out << "d " << code.d << "\n";
    out << "d-kind " << (code.d_kind == DistanceKind::exact ? "exact" : "bch-lower-bound")
        << "\n";
    out << "modulus";
    for (uint32_t c : code.field->modulus()) {
        out << " " << c;
    }
    out << "\n";
    out << "embedding " << (code.embedding == EmbeddingKind::phi ? "phi" : "big-phi") << "\n";
    if (code.omega) {
        out << "omega " << code.omega->index() << "\n";
    }
    if (code.structure) {
        out << "theta " << code.structure->normal_basis().theta.index() << "\n";
        const FpMat &d_mat = code.structure->d_matrix();
        for (std::size_t i = 0; i < d_mat.rows(); i++) {
            out << "d-row";
            for (std::size_t j = 0; j < d_mat.cols(); j++) {
                out << " " << d_mat.at(i, j);
            }
            out << "\n";
        }
    }
    if (!code.alphas.empty()) {
        out << "alphas";
        for (const auto &a : code.alphas) {
            out << " " << a.index();
        }
        out << "\n";
    }
    for (const auto &g : code.generators) {
        out << "generator " << g.to_digit_string() << "\n";
    }
    if (code.classical_code) {
        out << "classical-dim " << code.classical_code->dim() << "\n";
        for (const auto &row : code.classical_code->generator_rows()) {
            out << "classical-row";
            for (const auto &x : row) {
                out << " " << x.index();
            }
            out << "\n";
        }
    }
    for (const auto &row : code.check_rows) {
        out << "check-row";
        for (const auto &x : row) {
            out << " " << x.index();
        }
        out << "\n";
    }
    if (code.cyclic_check) {
        out << "cyclic-check-roots";
        for (uint32_t j : code.cyclic_check->defining_set()) {
            out << " " << j;
        }
        out << "\n";
    }
    if (code.parent_cyclic_check) {
        out << "parent-check-roots";
        for (uint32_t j : code.parent_cyclic_check->defining_set()) {
            out << " " << j;
        }
        out << "\n";
        out << "puncture-pos " << code.puncture_data->position << "\n";
    }
}

StabilizerCode read_stabilizer(std::istream &in) {
    auto lines = read_lines(in);
    if (lines.empty() || lines[0].key != "qsc-stabilizer") {
        throw ParseError("expected a 'qsc-stabilizer v1' header",
                         lines.empty() ? 1 : lines[0].number);
    }
    StabilizerCode code;
    std::vector<uint32_t> modulus;
    std::optional<uint64_t> omega_idx, theta_idx;
    std::vector<uint64_t> alpha_idx;
    std::vector<std::string> gen_strings;
    std::vector<std::vector<uint64_t>> classical_rows, check_rows;
    std::vector<std::vector<uint32_t>> d_rows;
    std::vector<uint32_t> cyclic_roots, parent_roots;
    bool have_cyclic = false, have_parent = false, have_classical = false;
    std::optional<uint32_t> puncture_pos;
    std::string embedding_str = "phi", dkind_str = "exact";

    for (std::size_t i = 1; i < lines.size(); i++) {
        const Line &line = lines[i];
        auto u32list = [&](std::vector<uint32_t> &dst) {
            for (const auto &v : line.values) {
                dst.push_back(static_cast<uint32_t>(parse_u64(v, line.number)));
            }
        };
        if (line.key == "p") {
            code.p = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "m") {
            code.m = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "n") {
            code.n = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "k") {
            code.k = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "d") {
            code.d = static_cast<uint32_t>(single_u64(line));
        } else if (line.key == "d-kind") {
            dkind_str = line.values.at(0);
        } else if (line.key == "modulus") {
            u32list(modulus);
        } else if (line.key == "embedding") {
            embedding_str = line.values.at(0);
        } else if (line.key == "omega") {
            omega_idx = single_u64(line);
        } else if (line.key == "theta") {
            theta_idx = single_u64(line);
        } else if (line.key == "d-row") {
            std::vector<uint32_t> row;
            u32list(row);
            d_rows.push_back(std::move(row));
        } else if (line.key == "alphas") {
            for (const auto &v : line.values) {
                alpha_idx.push_back(parse_u64(v, line.number));
            }
        } else if (line.key == "generator") {
            gen_strings.push_back(line.values.at(0));
        } else if (line.key == "classical-dim") {
            have_classical = true;
        } else if (line.key == "classical-row") {
            std::vector<uint64_t> row;
            for (const auto &v : line.values) {
                row.push_back(parse_u64(v, line.number));
            }
            classical_rows.push_back(std::move(row));
        } else if (line.key == "check-row") {
            std::vector<uint64_t> row;
            for (const auto &v : line.values) {
                row.push_back(parse_u64(v, line.number));
            }
            check_rows.push_back(std::move(row));
        } else if (line.key == "cyclic-check-roots") {
            u32list(cyclic_roots);
            have_cyclic = true;
        } else if (line.key == "parent-check-roots") {
            u32list(parent_roots);
            have_parent = true;
        } else if (line.key == "puncture-pos") {
            puncture_pos = static_cast<uint32_t>(single_u64(line));
        } else {
            throw ParseError("unknown key '" + line.key + "'", line.number);
        }
    }

    code.d_kind = dkind_str == "exact" ? DistanceKind::exact : DistanceKind::bch_lower_bound;
    code.embedding = embedding_str == "phi" ? EmbeddingKind::phi : EmbeddingKind::big_phi;
    code.field = Field::create_with_modulus(code.p, modulus);
    if (omega_idx) {
        code.omega = code.field->from_index(*omega_idx);
    }
    for (uint64_t a : alpha_idx) {
        code.alphas.push_back(code.field->from_index(a));
    }
    if (code.embedding == EmbeddingKind::big_phi) {
        auto structure =
            code.alphas.empty()
                ? std::make_shared<SymplecticStructure>(code.field)
                : std::make_shared<SymplecticStructure>(code.field, find_normal_basis(code.field),
                                                        code.alphas);
        if (theta_idx && structure->normal_basis().theta.index() != *theta_idx) {
            throw MathError("stored theta disagrees with the deterministic normal basis");
        }
        for (std::size_t i = 0; i < d_rows.size(); i++) {
            for (std::size_t j = 0; j < d_rows[i].size(); j++) {
                if (structure->d_matrix().at(i, j) != d_rows[i][j]) {
                    throw MathError("stored D matrix disagrees with the reconstruction");
                }
            }
        }
        code.structure = std::move(structure);
    }
    for (const auto &s : gen_strings) {
        code.generators.push_back(SymplecticVector::from_digit_string(code.p, code.m, code.n, s));
    }
    auto to_rows = [&](const std::vector<std::vector<uint64_t>> &idx_rows) {
        std::vector<std::vector<FieldElement>> rows;
        for (const auto &r : idx_rows) {
            std::vector<FieldElement> row;
            row.reserve(r.size());
            for (uint64_t v : r) {
                row.push_back(code.field->from_index(v));
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    if (have_classical) {
        code.classical_code = LinearCode::from_rows(code.field, code.n, to_rows(classical_rows));
    }
    code.check_rows = to_rows(check_rows);
    if (have_cyclic) {
        code.cyclic_check = CyclicCode::from_roots(code.field, code.n, cyclic_roots);
    }
    if (have_parent) {
        if (!puncture_pos) {
            throw MathError("parent-check-roots requires puncture-pos");
        }
        code.parent_cyclic_check =
            CyclicCode::from_roots(code.field, code.n + 1, parent_roots);
        code.puncture_data = puncture(code.parent_cyclic_check->code(), *puncture_pos);
    }
    return finish_stabilizer(std::move(code));
}

}  // namespace qsc
