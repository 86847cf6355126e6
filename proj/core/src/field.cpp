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

#include "qsc/field.hpp"

#include <algorithm>
#include <sstream>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

constexpr uint64_t kDefaultSizeBound = 1ull << 20;

bool is_prime(uint32_t p) {
    if (p < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= p; d++) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
    // mod < 2^32 in all uses here, so 64-bit products do not overflow.
    uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) {
            r = r * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// --- dense polynomials over F_p (little-endian coefficients) ---

using Poly = std::vector<uint32_t>;

int deg(const Poly &a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; i--) {
        if (a[i] != 0) {
            return i;
        }
    }
    return -1;
}

void trim(Poly &a) {
    a.resize(static_cast<std::size_t>(deg(a) + 1));
}

Poly poly_mul(uint32_t p, const Poly &a, const Poly &b) {
    if (deg(a) < 0 || deg(b) < 0) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); j++) {
            out[i + j] = static_cast<uint32_t>((out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return out;
}

// a mod f, f nonzero (not necessarily monic)
Poly poly_mod(uint32_t p, Poly a, const Poly &f) {
    int df = deg(f);
    uint32_t lead_inv = fp_inv(p, f[df]);
    for (int i = deg(a); i >= df; i--) {
        uint32_t c = fp_mul(p, a[i], lead_inv);
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= df; j++) {
            a[i - df + j] = fp_sub(p, a[i - df + j], fp_mul(p, c, f[j]));
        }
    }
    trim(a);
    return a;
}

Poly poly_powmod(uint32_t p, Poly base, uint64_t exp, const Poly &f) {
    Poly r = {1};
    base = poly_mod(p, std::move(base), f);
    while (exp) {
        if (exp & 1) {
            r = poly_mod(p, poly_mul(p, r, base), f);
        }
        base = poly_mod(p, poly_mul(p, base, base), f);
        exp >>= 1;
    }
    return r;
}

Poly poly_gcd(uint32_t p, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (deg(b) >= 0) {
        Poly r = poly_mod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    int d = deg(a);
    if (d >= 0 && a[d] != 1) {
        uint32_t inv = fp_inv(p, a[d]);
        for (auto &c : a) {
            c = fp_mul(p, c, inv);
        }
    }
    return a;
}

// Rabin's test: monic f of degree k is irreducible over F_p iff
// x^{p^k} = x (mod f) and gcd(x^{p^{k/t}} - x, f) = 1 for every prime t | k.
bool is_irreducible(uint32_t p, const Poly &f) {
    int k = deg(f);
    if (k < 1) {
        return false;
    }
    if (k == 1) {
        return true;
    }
    Poly x = {0, 1};
    for (uint64_t t : prime_factors(static_cast<uint64_t>(k))) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < k / t; i++) {
            e *= p;
        }
        Poly h = poly_powmod(p, x, e, f);  // x^{p^{k/t}} mod f
        // h - x
        if (h.size() < 2) {
            h.resize(2, 0);
        }
        h[1] = fp_sub(p, h[1], 1);
        if (deg(poly_gcd(p, h, f)) != 0) {
            return false;
        }
    }
    uint64_t e = 1;
    for (int i = 0; i < k; i++) {
        e *= p;
    }
    Poly h = poly_powmod(p, x, e, f);
    if (h.size() < 2) {
        h.resize(2, 0);
    }
    h[1] = fp_sub(p, h[1], 1);
    return deg(h) < 0;
}

// Least (by base-p index of c_0..c_{k-1}) monic irreducible of degree k.
Poly least_irreducible(uint32_t p, uint32_t k) {
    Poly f(k + 1, 0);
    f[k] = 1;
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; i++) {
        count *= p;
    }
    for (uint64_t idx = 0; idx < count; idx++) {
        uint64_t v = idx;
        for (uint32_t i = 0; i < k; i++) {
            f[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(p, f)) {
            return f;
        }
    }
    throw MathError("no irreducible polynomial found (unreachable)");
}

}  // namespace

// --- FieldElement ---

namespace {
const Field &require_field(const FieldPtr &f) {
    if (!f) {
        throw MathError("operation on a detached FieldElement");
    }
    return *f;
}

void require_same_field(const FieldElement &a, const FieldElement &b) {
    const Field &fa = require_field(a.field());
    const Field &fb = require_field(b.field());
    if (!fa.same_as(fb)) {
        throw MathError("mixed-field operands");
    }
}
}  // namespace

uint64_t FieldElement::index() const {
    const Field &f = require_field(field_);
    uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        idx = idx * f.p() + c_[i];
    }
    return idx;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) {
        return false;
    }
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement &rhs) const {
    require_same_field(*this, rhs);
    uint32_t p = field_->p();
    std::vector<uint32_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); i++) {
        c[i] = fp_add(p, c_[i], rhs.c_[i]);
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement &rhs) const {
    require_same_field(*this, rhs);
    uint32_t p = field_->p();
    std::vector<uint32_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); i++) {
        c[i] = fp_sub(p, c_[i], rhs.c_[i]);
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement &rhs) const {
    require_same_field(*this, rhs);
    return FieldElement(field_, field_->mul_raw(c_, rhs.c_));
}

FieldElement FieldElement::operator/(const FieldElement &rhs) const {
    return *this * rhs.inv();
}

FieldElement FieldElement::operator-() const {
    const Field &f = require_field(field_);
    std::vector<uint32_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); i++) {
        c[i] = fp_neg(f.p(), c_[i]);
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inv() const {
    const Field &f = require_field(field_);
    return FieldElement(field_, f.inv_raw(c_));
}

FieldElement FieldElement::pow(int64_t e) const {
    const Field &f = require_field(field_);
    if (is_zero()) {
        if (e < 0) {
            throw MathError("division by zero (negative power of zero)");
        }
        return e == 0 ? f.one() : *this;
    }
    uint64_t order = f.size() - 1;
    uint64_t exp;
    if (e >= 0) {
        exp = static_cast<uint64_t>(e) % order;
    } else {
        uint64_t magnitude = 0ull - static_cast<uint64_t>(e);  // safe for INT64_MIN
        exp = (order - magnitude % order) % order;
    }
    FieldElement r = f.one();
    FieldElement base = *this;
    while (exp) {
        if (exp & 1) {
            r = r * base;
        }
        base = base * base;
        exp >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(uint32_t j) const {
    const Field &f = require_field(field_);
    if (is_zero()) {
        return *this;
    }
    uint64_t e = pow_mod_u64(f.p(), j, f.size() - 1);
    return pow(static_cast<int64_t>(e));
}

uint64_t FieldElement::mult_order() const {
    const Field &f = require_field(field_);
    if (is_zero()) {
        throw MathError("multiplicative order of zero");
    }
    uint64_t order = f.size() - 1;
    for (uint64_t fac : f.order_prime_factors_) {
        while (order % fac == 0 && pow(static_cast<int64_t>(order / fac)).is_one()) {
            order /= fac;
        }
    }
    return order;
}

bool FieldElement::operator==(const FieldElement &other) const {
    if (!field_ || !other.field_) {
        return field_ == other.field_ && c_ == other.c_;
    }
    return field_->same_as(*other.field_) && c_ == other.c_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); i++) {
        os << (i ? "," : "") << c_[i];
    }
    return os.str();
}

// --- Field ---

Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < k_; i++) {
        if (q_ > (1ull << 62) / p_) {
            throw MathError("field size overflows 64 bits");
        }
        q_ *= p_;
    }
    order_prime_factors_ = prime_factors(q_ - 1);
}

FieldPtr Field::create(uint32_t p, uint32_t k, FieldOptions opts) {
    if (!is_prime(p)) {
        throw MathError("p = " + std::to_string(p) + " is not prime");
    }
    if (k < 1) {
        throw MathError("extension degree must be >= 1");
    }
    // Size check before searching for a modulus.
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; i++) {
        if (q > (1ull << 62) / p) {
            throw MathError("field size overflows 64 bits");
        }
        q *= p;
    }
    if (!opts.allow_large && q > kDefaultSizeBound) {
        throw BoundError("field size " + std::to_string(q) +
                         " exceeds the 2^20 bound (pass allow_large to lift)");
    }
    return create_with_modulus(p, least_irreducible(p, k), opts);
}

FieldPtr Field::create_with_modulus(uint32_t p, std::vector<uint32_t> modulus,
                                    FieldOptions opts) {
    if (!is_prime(p)) {
        throw MathError("p = " + std::to_string(p) + " is not prime");
    }
    if (modulus.size() < 2) {
        throw MathError("modulus must have degree >= 1");
    }
    for (auto &c : modulus) {
        c %= p;
    }
    uint32_t k = static_cast<uint32_t>(modulus.size() - 1);
    if (modulus[k] != 1) {
        throw MathError("modulus must be monic");
    }
    if (!is_irreducible(p, modulus)) {
        throw MathError("modulus is not irreducible over F_" + std::to_string(p));
    }
    auto f = std::shared_ptr<Field>(new Field(p, k, std::move(modulus)));
    if (!opts.allow_large && f->q_ > kDefaultSizeBound) {
        throw BoundError("field size exceeds the 2^20 bound (pass allow_large to lift)");
    }
    f->omega_ = find_primitive(f);
    return f;
}

FieldElement Field::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(k_, 0));
}

FieldElement Field::one() const {
    std::vector<uint32_t> c(k_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_coeffs(std::vector<uint32_t> c) const {
    if (c.size() != k_) {
        throw MathError("coefficient vector has wrong length");
    }
    for (auto &v : c) {
        v %= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_index(uint64_t idx) const {
    if (idx >= q_) {
        throw MathError("element index out of range");
    }
    std::vector<uint32_t> c(k_, 0);
    for (uint32_t i = 0; i < k_; i++) {
        c[i] = static_cast<uint32_t>(idx % p_);
        idx /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_scalar(uint64_t v) const {
    std::vector<uint32_t> c(k_, 0);
    c[0] = static_cast<uint32_t>(v % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

bool Field::same_as(const Field &other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "qsc-field p=" << p_ << " k=" << k_ << " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); i++) {
        os << (i ? "," : "") << modulus_[i];
    }
    os << " omega=" << omega_.to_string();
    return os.str();
}

std::vector<uint32_t> Field::reduce(std::vector<uint32_t> poly) const {
    poly = poly_mod(p_, std::move(poly), modulus_);
    poly.resize(k_, 0);
    return poly;
}

std::vector<uint32_t> Field::mul_raw(std::span<const uint32_t> a, std::span<const uint32_t> b) const {
    Poly prod = poly_mul(p_, Poly(a.begin(), a.end()), Poly(b.begin(), b.end()));
    return reduce(std::move(prod));
}

std::vector<uint32_t> Field::inv_raw(std::span<const uint32_t> a) const {
    // Extended Euclid in F_p[x] for gcd(a, modulus) = 1.
    Poly r0 = modulus_, r1(a.begin(), a.end());
    trim(r1);
    if (deg(r1) < 0) {
        throw MathError("division by zero");
    }
    Poly t0 = {}, t1 = {1};
    while (deg(r1) > 0) {
        // r0 = q r1 + r2
        Poly q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), 0);
        Poly rem = r0;
        uint32_t lead_inv = fp_inv(p_, r1[deg(r1)]);
        for (int i = deg(rem); i >= deg(r1); i--) {
            uint32_t c = fp_mul(p_, rem[i], lead_inv);
            if (c == 0) {
                continue;
            }
            q[i - deg(r1)] = c;
            for (int j = 0; j <= deg(r1); j++) {
                rem[i - deg(r1) + j] = fp_sub(p_, rem[i - deg(r1) + j], fp_mul(p_, c, r1[j]));
            }
        }
        trim(rem);
        Poly t2_sub = poly_mul(p_, q, t1);
        Poly t2 = t0;
        t2.resize(std::max(t2.size(), t2_sub.size()), 0);
        for (std::size_t i = 0; i < t2_sub.size(); i++) {
            t2[i] = fp_sub(p_, t2[i], t2_sub[i]);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r1 is a nonzero constant (gcd = 1 since modulus is irreducible).
    uint32_t scale = fp_inv(p_, r1[0]);
    for (auto &c : t1) {
        c = fp_mul(p_, c, scale);
    }
    t1 = poly_mod(p_, std::move(t1), modulus_);
    t1.resize(k_, 0);
    return t1;
}

// --- primitive elements, normal bases, dual bases ---

FieldElement find_primitive(const FieldPtr &field) {
    uint64_t q = field->size();
    std::vector<uint64_t> factors = prime_factors(q - 1);
    for (uint64_t idx = 1; idx < q; idx++) {
        FieldElement x = field->from_index(idx);
        bool primitive = true;
        for (uint64_t f : factors) {
            if (x.pow(static_cast<int64_t>((q - 1) / f)).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            return x;
        }
    }
    throw MathError("no primitive element found (unreachable)");
}

std::vector<uint32_t> NormalBasis::coords(const FieldElement &x) const {
    return change_of_basis.apply_left(x.coeffs());
}

FieldElement NormalBasis::combine(std::span<const uint32_t> c) const {
    if (c.size() != powers.size()) {
        throw MathError("coordinate length mismatch in NormalBasis::combine");
    }
    FieldElement acc = field->zero();
    for (std::size_t i = 0; i < powers.size(); i++) {
        acc = acc + field->from_scalar(c[i]) * powers[i];
    }
    return acc;
}

NormalBasis find_normal_basis(const FieldPtr &field) {
    uint32_t k = field->k();
    for (uint64_t idx = 1; idx < field->size(); idx++) {
        FieldElement theta = field->from_index(idx);
        std::vector<FieldElement> powers;
        powers.reserve(k);
        FieldElement cur = theta;
        for (uint32_t i = 0; i < k; i++) {
            powers.push_back(cur);
            cur = cur.frobenius(1);
        }
        FpMat m(field->p(), k, k);
        for (uint32_t i = 0; i < k; i++) {
            for (uint32_t j = 0; j < k; j++) {
                m.at(i, j) = powers[i].coeffs()[j];
            }
        }
        auto inv = m.inverse();
        if (!inv) {
            continue;
        }
        return NormalBasis{field, theta, std::move(powers), std::move(m), std::move(*inv)};
    }
    throw MathError("no normal basis found (unreachable)");
}

NormalBasis find_normal_basis(uint32_t p, uint32_t twom) {
    if (twom < 2 || twom % 2 != 0) {
        throw MathError("normal basis degree must be even and >= 2 here");
    }
    return find_normal_basis(Field::create(p, twom));
}

std::vector<uint32_t> coords_in_basis(const FieldElement &x, std::span<const FieldElement> basis) {
    if (basis.empty()) {
        throw MathError("empty basis");
    }
    const Field &f = *basis[0].field();
    FpMat m(f.p(), basis.size(), f.k());
    for (std::size_t i = 0; i < basis.size(); i++) {
        for (uint32_t j = 0; j < f.k(); j++) {
            m.at(i, j) = basis[i].coeffs()[j];
        }
    }
    if (m.rank() != basis.size()) {
        throw MathError("singular basis");
    }
    auto sol = m.transposed().solve(x.coeffs());
    if (!sol) {
        throw MathError("element not in the span of the basis");
    }
    return *sol;
}

DualBasisData dual_basis_for_p(std::span<const FieldElement> alphas,
                               const std::function<uint32_t(const FieldElement &)> &P,
                               uint32_t m) {
    if (alphas.empty()) {
        throw MathError("empty alpha basis");
    }
    const FieldPtr &field = alphas[0].field();
    uint32_t twom = field->k();
    if (alphas.size() != twom) {
        throw MathError("alpha basis has wrong size");
    }
    // M[j][t] = P(alpha_j^{p^m} * x^t) over the power basis x^t.
    std::vector<FieldElement> power_basis;
    for (uint32_t t = 0; t < twom; t++) {
        std::vector<uint32_t> c(twom, 0);
        c[t] = 1;
        power_basis.push_back(field->from_coeffs(std::move(c)));
    }
    FpMat M(field->p(), twom, twom);
    for (uint32_t j = 0; j < twom; j++) {
        FieldElement aj = alphas[j].frobenius(m);
        for (uint32_t t = 0; t < twom; t++) {
            M.at(j, t) = P(aj * power_basis[t]);
        }
    }
    auto Minv = M.inverse();
    if (!Minv) {
        throw MathError("singular dual-basis system (P degenerate or alphas dependent)");
    }
    std::vector<FieldElement> betas;
    for (uint32_t kk = 0; kk < twom; kk++) {
        FieldElement beta = field->zero();
        for (uint32_t t = 0; t < twom; t++) {
            beta = beta + field->from_scalar(Minv->at(t, kk)) * power_basis[t];
        }
        betas.push_back(beta);
    }
    // Defining property, checked exactly.
    for (uint32_t j = 0; j < twom; j++) {
        FieldElement aj = alphas[j].frobenius(m);
        for (uint32_t kk = 0; kk < twom; kk++) {
            uint32_t want = (j == kk) ? 1 : 0;
            if (P(aj * betas[kk]) != want) {
                throw MathError("dual basis verification failed (internal error)");
            }
        }
    }
    return DualBasisData{std::vector<FieldElement>(alphas.begin(), alphas.end()), std::move(betas)};
}

// --- subfield embedding ---

SubfieldEmbedding::SubfieldEmbedding(FieldPtr subfield, FieldPtr superfield)
    : sub_(std::move(subfield)), sup_(std::move(superfield)) {
    if (sub_->p() != sup_->p()) {
        throw MathError("subfield embedding requires equal characteristic");
    }
    if (sup_->k() % sub_->k() != 0) {
        throw MathError("subfield degree does not divide superfield degree");
    }
    // Least root of the small modulus in the big field.
    const auto &mod = sub_->modulus();
    bool found = false;
    for (uint64_t idx = 0; idx < sup_->size(); idx++) {
        FieldElement cand = sup_->from_index(idx);
        FieldElement acc = sup_->zero();
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = acc * cand + sup_->from_scalar(mod[i]);
        }
        if (acc.is_zero()) {
            root_ = cand;
            found = true;
            break;
        }
    }
    if (!found) {
        throw MathError("no root of subfield modulus in superfield (internal error)");
    }
    root_powers_.clear();
    FieldElement cur = sup_->one();
    for (uint32_t t = 0; t < sub_->k(); t++) {
        root_powers_.push_back(cur);
        cur = cur * root_;
    }
    basis_matrix_ = FpMat(sup_->p(), sub_->k(), sup_->k());
    for (uint32_t t = 0; t < sub_->k(); t++) {
        for (uint32_t j = 0; j < sup_->k(); j++) {
            basis_matrix_.at(t, j) = root_powers_[t].coeffs()[j];
        }
    }
}

FieldElement SubfieldEmbedding::embed(const FieldElement &x) const {
    if (!x.field()->same_as(*sub_)) {
        throw MathError("embed: element not in the subfield");
    }
    FieldElement acc = sup_->zero();
    for (uint32_t t = 0; t < sub_->k(); t++) {
        acc = acc + sup_->from_scalar(x.coeffs()[t]) * root_powers_[t];
    }
    return acc;
}

std::vector<uint32_t> SubfieldEmbedding::solve_coords(const FieldElement &x, bool *ok) const {
    auto sol = basis_matrix_.transposed().solve(x.coeffs());
    if (!sol) {
        *ok = false;
        return {};
    }
    *ok = true;
    return *sol;
}

bool SubfieldEmbedding::in_image(const FieldElement &x) const {
    bool ok = false;
    solve_coords(x, &ok);
    return ok;
}

FieldElement SubfieldEmbedding::project(const FieldElement &x) const {
    if (!x.field()->same_as(*sup_)) {
        throw MathError("project: element not in the superfield");
    }
    bool ok = false;
    auto c = solve_coords(x, &ok);
    if (!ok) {
        throw MathError("project: element not in the subfield image");
    }
    return sub_->from_coeffs(std::move(c));
}

}  // namespace qsc
