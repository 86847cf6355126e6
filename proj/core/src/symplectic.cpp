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

#include "qsc/symplectic.hpp"

#include <algorithm>
#include <sstream>

#include "qsc/errors.hpp"

namespace qsc {

SymplecticVector SymplecticVector::zero(uint32_t p, uint32_t m, uint32_t n) {
    SymplecticVector v;
    v.p = p;
    v.m = m;
    v.n = n;
    v.a.assign(static_cast<std::size_t>(m) * n, 0);
    v.b.assign(static_cast<std::size_t>(m) * n, 0);
    return v;
}

bool SymplecticVector::is_zero() const {
    auto all0 = [](const std::vector<uint32_t> &v) {
        return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
    };
    return all0(a) && all0(b);
}

void SymplecticVector::add_scaled(const SymplecticVector &other, uint32_t scalar) {
    if (!dims_match(other)) {
        throw MathError("dimension mismatch in SymplecticVector::add_scaled");
    }
    for (std::size_t i = 0; i < a.size(); i++) {
        a[i] = fp_add(p, a[i], fp_mul(p, scalar, other.a[i]));
        b[i] = fp_add(p, b[i], fp_mul(p, scalar, other.b[i]));
    }
}

SymplecticVector operator+(SymplecticVector lhs, const SymplecticVector &rhs) {
    lhs.add_scaled(rhs, 1);
    return lhs;
}

SymplecticVector operator-(SymplecticVector lhs, const SymplecticVector &rhs) {
    lhs.add_scaled(rhs, rhs.p - 1);
    return lhs;
}

std::vector<uint32_t> SymplecticVector::concat() const {
    std::vector<uint32_t> row;
    row.reserve(a.size() + b.size());
    row.insert(row.end(), a.begin(), a.end());
    row.insert(row.end(), b.begin(), b.end());
    return row;
}

SymplecticVector SymplecticVector::from_concat(uint32_t p, uint32_t m, uint32_t n,
                                               std::span<const uint32_t> row) {
    std::size_t mn = static_cast<std::size_t>(m) * n;
    if (row.size() != 2 * mn) {
        throw MathError("concatenated row has wrong length");
    }
    SymplecticVector v = zero(p, m, n);
    for (std::size_t i = 0; i < mn; i++) {
        v.a[i] = row[i] % p;
        v.b[i] = row[mn + i] % p;
    }
    return v;
}

std::string SymplecticVector::to_digit_string() const {
    std::ostringstream os;
    auto emit = [&](const std::vector<uint32_t> &v) {
        for (std::size_t i = 0; i < v.size(); i++) {
            if (p <= 9) {
                os << v[i];
            } else {
                os << (i ? "," : "") << v[i];
            }
        }
    };
    emit(a);
    os << '|';
    emit(b);
    return os.str();
}

SymplecticVector SymplecticVector::from_digit_string(uint32_t p, uint32_t m, uint32_t n,
                                                     const std::string &s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) {
        throw MathError("symplectic digit string is missing '|'");
    }
    auto parse_half = [&](const std::string &half) {
        std::vector<uint32_t> out;
        if (half.find(',') != std::string::npos || p > 9) {
            std::istringstream is(half);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                out.push_back(static_cast<uint32_t>(std::stoul(tok)));
            }
        } else {
            for (char ch : half) {
                if (ch < '0' || ch > '9') {
                    throw MathError("bad digit in symplectic string");
                }
                out.push_back(static_cast<uint32_t>(ch - '0'));
            }
        }
        return out;
    };
    std::vector<uint32_t> av = parse_half(s.substr(0, bar));
    std::vector<uint32_t> bv = parse_half(s.substr(bar + 1));
    std::size_t mn = static_cast<std::size_t>(m) * n;
    if (av.size() != mn || bv.size() != mn) {
        throw MathError("symplectic digit string has wrong length");
    }
    SymplecticVector v = zero(p, m, n);
    for (std::size_t i = 0; i < mn; i++) {
        if (av[i] >= p || bv[i] >= p) {
            throw MathError("symplectic entry out of range for p");
        }
        v.a[i] = av[i];
        v.b[i] = bv[i];
    }
    return v;
}

uint32_t alt_inner(const SymplecticVector &u, const SymplecticVector &v) {
    if (!u.dims_match(v)) {
        throw MathError("dimension mismatch in alt_inner");
    }
    uint64_t acc = 0;
    uint32_t p = u.p;
    for (std::size_t i = 0; i < u.a.size(); i++) {
        acc += static_cast<uint64_t>(u.a[i]) * v.b[i] % p;
        acc += p - static_cast<uint64_t>(v.a[i]) * u.b[i] % p;
    }
    return static_cast<uint32_t>(acc % p);
}

uint32_t sym_weight(const SymplecticVector &u) {
    uint32_t w = 0;
    for (uint32_t pos = 0; pos < u.n; pos++) {
        bool active = false;
        for (uint32_t j = 0; j < u.m && !active; j++) {
            active = u.a[pos * u.m + j] != 0 || u.b[pos * u.m + j] != 0;
        }
        w += active ? 1 : 0;
    }
    return w;
}

std::vector<FieldElement> phi_map(const SymplecticVector &u, const FieldElement &omega) {
    if (u.m != 1) {
        throw MathError("phi requires m = 1");
    }
    const FieldPtr &f = omega.field();
    FieldElement omega_p = omega.frobenius(1);
    std::vector<FieldElement> out;
    out.reserve(u.n);
    for (uint32_t i = 0; i < u.n; i++) {
        out.push_back(f->from_scalar(u.a[i]) * omega + f->from_scalar(u.b[i]) * omega_p);
    }
    return out;
}

SymplecticVector phi_inv_map(std::span<const FieldElement> c, const FieldElement &omega) {
    const FieldPtr &f = omega.field();
    if (f->k() != 2) {
        throw MathError("phi_inv requires GF(p^2)");
    }
    std::vector<FieldElement> basis = {omega, omega.frobenius(1)};
    SymplecticVector v = SymplecticVector::zero(f->p(), 1, static_cast<uint32_t>(c.size()));
    for (std::size_t i = 0; i < c.size(); i++) {
        auto ab = coords_in_basis(c[i], basis);
        v.a[i] = ab[0];
        v.b[i] = ab[1];
    }
    return v;
}

FieldElement trace_inner(std::span<const FieldElement> c, std::span<const FieldElement> d) {
    if (c.size() != d.size()) {
        throw MathError("length mismatch in trace_inner");
    }
    if (c.empty()) {
        throw MathError("empty vectors in trace_inner");
    }
    const FieldPtr &f = c[0].field();
    FieldElement first = f->zero();   // <c, d^p>
    FieldElement second = f->zero();  // <c^p, d>
    for (std::size_t i = 0; i < c.size(); i++) {
        first = first + c[i] * d[i].frobenius(1);
        second = second + c[i].frobenius(1) * d[i];
    }
    return first - second;
}

uint32_t trace_inner_normalized(std::span<const FieldElement> c, std::span<const FieldElement> d,
                                const FieldElement &omega) {
    FieldElement denom = omega.pow(2) - omega.frobenius(1).pow(2);
    if (denom.is_zero()) {
        throw MathError("omega^2 = omega^{2p}: omega does not span with its conjugate");
    }
    FieldElement v = trace_inner(c, d) / denom;
    // The quotient is F_p-valued; anything else is an internal error.
    for (std::size_t i = 1; i < v.coeffs().size(); i++) {
        if (v.coeffs()[i] != 0) {
            throw MathError("normalized trace form left the prime subfield (internal error)");
        }
    }
    return v.coeffs()[0];
}

FpMat standard_symplectic_form(uint32_t p, uint32_t m) {
    FpMat s(p, 2 * m, 2 * m);
    for (uint32_t i = 0; i < m; i++) {
        s.at(i, m + i) = 1;
        s.at(m + i, i) = p - 1;
    }
    return s;
}

FpMat compute_symplectic_d(const FpMat &T) {
    uint32_t p = T.p();
    std::size_t dim = T.rows();
    if (T.cols() != dim || dim % 2 != 0) {
        throw MathError("T must be square of even dimension");
    }
    // Alternating: zero diagonal and T^t = -T.
    for (std::size_t i = 0; i < dim; i++) {
        if (T.at(i, i) != 0) {
            throw MathError("T has a nonzero diagonal entry (not alternating)");
        }
        for (std::size_t j = 0; j < dim; j++) {
            if (T.at(i, j) != fp_neg(p, T.at(j, i))) {
                throw MathError("T is not antisymmetric");
            }
        }
    }
    auto form = [&](std::span<const uint32_t> x, std::span<const uint32_t> y) {
        uint64_t acc = 0;
        for (std::size_t i = 0; i < dim; i++) {
            if (x[i] == 0) {
                continue;
            }
            uint64_t row = 0;
            for (std::size_t j = 0; j < dim; j++) {
                row += static_cast<uint64_t>(T.at(i, j)) * y[j] % p;
            }
            acc += x[i] * (row % p) % p;
        }
        return static_cast<uint32_t>(acc % p);
    };

    // Pool of working vectors, reduced as hyperbolic pairs are split off.
    std::vector<std::vector<uint32_t>> pool;
    for (std::size_t i = 0; i < dim; i++) {
        std::vector<uint32_t> e(dim, 0);
        e[i] = 1;
        pool.push_back(std::move(e));
    }
    std::vector<std::vector<uint32_t>> us, vs;
    while (!pool.empty()) {
        std::vector<uint32_t> u = std::move(pool.front());
        pool.erase(pool.begin());
        std::size_t partner = pool.size();
        uint32_t pairing = 0;
        for (std::size_t i = 0; i < pool.size(); i++) {
            pairing = form(u, pool[i]);
            if (pairing != 0) {
                partner = i;
                break;
            }
        }
        if (partner == pool.size()) {
            throw MathError("degenerate alternating form (no symplectic partner)");
        }
        std::vector<uint32_t> v = std::move(pool[partner]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
        uint32_t scale = fp_inv(p, pairing);
        for (auto &x : v) {
            x = fp_mul(p, x, scale);
        }
        // Clear the (u, v) components of everything left in the pool:
        // w <- w + form(v,w) u - form(u,w) v.
        for (auto &w : pool) {
            uint32_t cu = form(v, w);
            uint32_t cv = fp_neg(p, form(u, w));
            for (std::size_t i = 0; i < dim; i++) {
                w[i] = fp_add(p, w[i], fp_add(p, fp_mul(p, cu, u[i]), fp_mul(p, cv, v[i])));
            }
        }
        us.push_back(std::move(u));
        vs.push_back(std::move(v));
    }
    FpMat D(p, dim, dim);
    for (std::size_t i = 0; i < us.size(); i++) {
        for (std::size_t j = 0; j < dim; j++) {
            D.at(i, j) = us[i][j];
            D.at(us.size() + i, j) = vs[i][j];
        }
    }
    return D;
}

SymplecticStructure::SymplecticStructure(FieldPtr field_2m)
    : field_(std::move(field_2m)), m_(0), nb_(find_normal_basis(field_)) {
    std::vector<FieldElement> alphas;
    for (uint32_t t = 0; t < field_->k(); t++) {
        std::vector<uint32_t> c(field_->k(), 0);
        c[t] = 1;
        alphas.push_back(field_->from_coeffs(std::move(c)));
    }
    alphas_ = std::move(alphas);
    init();
}

SymplecticStructure::SymplecticStructure(FieldPtr field_2m, NormalBasis nb,
                                         std::vector<FieldElement> alphas)
    : field_(std::move(field_2m)), m_(0), nb_(std::move(nb)), alphas_(std::move(alphas)) {
    init();
}

void SymplecticStructure::init() {
    uint32_t twom = field_->k();
    if (twom % 2 != 0 || twom == 0) {
        throw MathError("SymplecticStructure requires GF(p^{2m}) with even degree");
    }
    m_ = twom / 2;
    if (alphas_.size() != twom) {
        throw MathError("alpha basis has wrong size");
    }
    alphas_conj_.clear();
    for (const auto &al : alphas_) {
        alphas_conj_.push_back(al.frobenius(m_));
    }
    T_ = FpMat(field_->p(), twom, twom);
    for (uint32_t i = 0; i < twom; i++) {
        for (uint32_t j = 0; j < twom; j++) {
            T_.at(i, j) = t_form(nb_.powers[i], nb_.powers[j]);
        }
    }
    D_ = compute_symplectic_d(T_);
    auto dinv = D_.inverse();
    if (!dinv) {
        throw MathError("D is singular (internal error)");
    }
    Dinv_ = std::move(*dinv);
    betas_ = dual_basis_for_p(alphas_, [this](const FieldElement &x) { return p_functional(x); },
                              m_)
                 .betas;
}

uint32_t SymplecticStructure::t_form(const FieldElement &x, const FieldElement &y) const {
    return p_functional(x * y.frobenius(m_));
}

uint32_t SymplecticStructure::p_functional(const FieldElement &x) const {
    auto c = nb_.coords(x);
    return fp_sub(field_->p(), c[m_], c[0]);
}

std::vector<uint32_t> SymplecticStructure::p2m(const FieldElement &x) const {
    std::vector<uint32_t> out;
    out.reserve(alphas_conj_.size());
    for (const auto &ac : alphas_conj_) {
        out.push_back(p_functional(ac * x));
    }
    return out;
}

FieldElement SymplecticStructure::p2m_inv(std::span<const uint32_t> s) const {
    if (s.size() != betas_.size()) {
        throw MathError("p2m_inv: block length mismatch");
    }
    FieldElement acc = field_->zero();
    for (std::size_t j = 0; j < s.size(); j++) {
        acc = acc + field_->from_scalar(s[j]) * betas_[j];
    }
    return acc;
}

SymplecticVector SymplecticStructure::big_phi(std::span<const FieldElement> c) const {
    uint32_t n = static_cast<uint32_t>(c.size());
    SymplecticVector v = SymplecticVector::zero(field_->p(), m_, n);
    for (uint32_t i = 0; i < n; i++) {
        std::vector<uint32_t> row = Dinv_.apply_left(nb_.coords(c[i]));
        for (uint32_t j = 0; j < m_; j++) {
            v.a[i * m_ + j] = row[j];
            v.b[i * m_ + j] = row[m_ + j];
        }
    }
    return v;
}

std::vector<FieldElement> SymplecticStructure::big_phi_inv(const SymplecticVector &u) const {
    if (u.p != field_->p() || u.m != m_) {
        throw MathError("big_phi_inv: parameter mismatch");
    }
    std::vector<FieldElement> out;
    out.reserve(u.n);
    for (uint32_t i = 0; i < u.n; i++) {
        std::vector<uint32_t> row(2 * m_);
        for (uint32_t j = 0; j < m_; j++) {
            row[j] = u.a[i * m_ + j];
            row[m_ + j] = u.b[i * m_ + j];
        }
        std::vector<uint32_t> coords = D_.apply_left(row);
        out.push_back(nb_.combine(coords));
    }
    return out;
}

}  // namespace qsc
