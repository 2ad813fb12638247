// Copyright 2026 The hopfsmith Authors
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

#include "hopfsmith/hopf.hpp"

#include <stdexcept>

#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

Tensor3::Tensor3(FieldSpec f, std::size_t d0, std::size_t d1, std::size_t d2)
    : field_(f), d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, f.zero()) {}

bool HopfData::same_structure(const HopfData& o) const {
    return alg == o.alg && coa == o.coa && antipode == o.antipode;
}

bool AxiomReport::all_passed() const { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

bool AxiomReport::passed(std::string_view axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return c.passed;
    throw std::out_of_range("axiom not evaluated: " + std::string(axiom));
}

void AxiomReport::append(const AxiomReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

void check_tensor(const Tensor3& t, FieldSpec f, std::size_t n, const char* what) {
    if (t.field() != f || t.dim0() != n || t.dim1() != n || t.dim2() != n)
        throw DimensionError(std::string(what) + " tensor must be dim x dim x dim over the declared field");
}

void check_vector(const Vec& v, FieldSpec f, std::size_t n, const char* what) {
    if (v.size() != n) throw DimensionError(std::string(what) + " has the wrong length");
    for (const auto& s : v)
        if (s.field() != f) throw FieldError(std::string(what) + " entry outside the declared field");
}

// Fills `check` with the first index among 0..n-1 where lhs(k) != rhs(k).
template <typename F>
AxiomCheck scan(std::string name, std::size_t arity, std::size_t n, F&& holds) {
    AxiomCheck c{std::move(name), true, {}};
    std::vector<std::size_t> idx(arity, 0);
    if (n == 0) return c;
    while (true) {
        if (!holds(idx)) {
            c.passed = false;
            c.witness = idx;
            return c;
        }
        std::size_t p = arity;
        while (p > 0) {
            --p;
            if (++idx[p] < n) break;
            idx[p] = 0;
            if (p == 0) return c;
        }
        if (arity == 0) return c;
    }
}

}  // namespace

void validate_shape(const AlgebraData& a) {
    check_tensor(a.mult, a.field, a.dim, "multiplication");
    check_vector(a.unit, a.field, a.dim, "unit");
}

void validate_shape(const CoalgebraData& c) {
    check_tensor(c.comult, c.field, c.dim, "comultiplication");
    check_vector(c.counit, c.field, c.dim, "counit");
}

void validate_shape(const HopfData& h) {
    validate_shape(h.alg);
    validate_shape(h.coa);
    if (h.alg.field != h.coa.field || h.alg.dim != h.coa.dim)
        throw DimensionError("algebra and coalgebra disagree on field or dimension");
    const std::size_t n = h.alg.dim;
    if (h.antipode.rows() != n || h.antipode.cols() != n || (n > 0 && h.antipode.field() != h.alg.field))
        throw DimensionError("antipode must be a dim x dim matrix over the declared field");
    if (h.antipode_inverse &&
        (h.antipode_inverse->rows() != n || h.antipode_inverse->cols() != n ||
         (n > 0 && h.antipode_inverse->field() != h.alg.field)))
        throw DimensionError("antipode inverse must be a dim x dim matrix over the declared field");
    if (!h.basis.empty() && h.basis.size() != n) throw DimensionError("basis label count differs from dimension");
}

AlgebraOps::AlgebraOps(const AlgebraData& a) : field_(a.field), n_(a.dim), table_(a.dim * a.dim), unit_(a.unit) {
    validate_shape(a);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!a.mult(i, j, k).is_zero())
                    table_[i * n_ + j].push_back({static_cast<std::uint32_t>(k), a.mult(i, j, k)});
}

void AlgebraOps::add_product(std::size_t i, std::size_t j, const Scalar& coef, Vec& out) const {
    if (coef.is_zero()) return;
    for (const auto& t : product(i, j)) out[t.index] += coef * t.coef;
}

Vec AlgebraOps::mul(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionError("mul: operand length differs from dimension");
    Vec out = zero_vec(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!y[j].is_zero()) add_product(i, j, x[i] * y[j], out);
    }
    return out;
}

Mat AlgebraOps::left_mult(std::span<const Scalar> x) const {
    Mat m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, mul(x, unit_vec(field_, n_, j)));
    return m;
}

Mat AlgebraOps::right_mult(std::span<const Scalar> x) const {
    Mat m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, mul(unit_vec(field_, n_, j), x));
    return m;
}

Mat AlgebraOps::left_mult_basis(std::size_t i) const {
    Mat m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (const auto& t : product(i, j)) m(t.index, j) = t.coef;
    return m;
}

Mat AlgebraOps::right_mult_basis(std::size_t i) const {
    Mat m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (const auto& t : product(j, i)) m(t.index, j) = t.coef;
    return m;
}

Mat AlgebraOps::mult_matrix() const {
    Mat m(field_, n_, n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (const auto& t : product(i, j)) m(t.index, i * n_ + j) = t.coef;
    return m;
}

CoalgebraOps::CoalgebraOps(const CoalgebraData& c)
    : field_(c.field), n_(c.dim), delta_(c.dim), delta2_(c.dim), counit_(c.counit) {
    validate_shape(c);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (!c.comult(k, a, b).is_zero())
                    delta_[k].push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), c.comult(k, a, b)});
    for (std::size_t k = 0; k < n_; ++k) {
        Vec acc = zero_vec(field_, n_ * n_ * n_);
        for (const auto& t : delta_[k])
            for (const auto& u : delta_[t.a]) acc[(u.a * n_ + u.b) * n_ + t.b] += t.coef * u.coef;
        for (std::size_t idx = 0; idx < acc.size(); ++idx)
            if (!acc[idx].is_zero())
                delta2_[k].push_back({static_cast<std::uint32_t>(idx / (n_ * n_)),
                                      static_cast<std::uint32_t>((idx / n_) % n_),
                                      static_cast<std::uint32_t>(idx % n_), acc[idx]});
    }
}

Vec CoalgebraOps::comul(std::span<const Scalar> x) const {
    if (x.size() != n_) throw DimensionError("comul: operand length differs from dimension");
    Vec out = zero_vec(field_, n_ * n_);
    for (std::size_t k = 0; k < n_; ++k) {
        if (x[k].is_zero()) continue;
        for (const auto& t : delta_[k]) out[t.a * n_ + t.b] += x[k] * t.coef;
    }
    return out;
}

Scalar CoalgebraOps::eps(std::span<const Scalar> x) const {
    if (x.size() != n_) throw DimensionError("eps: operand length differs from dimension");
    Scalar s = field_.zero();
    for (std::size_t k = 0; k < n_; ++k)
        if (!x[k].is_zero()) s += x[k] * counit_[k];
    return s;
}

Mat CoalgebraOps::comult_matrix() const {
    Mat m(field_, n_ * n_, n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (const auto& t : delta_[k]) m(t.a * n_ + t.b, k) = t.coef;
    return m;
}

AxiomReport check_algebra(const AlgebraData& a) {
    AlgebraOps ops(a);
    const std::size_t n = a.dim;
    FieldSpec f = a.field;
    AxiomReport rep;
    rep.checks.push_back(scan("associativity", 3, n, [&](const std::vector<std::size_t>& ix) {
        Vec lhs = zero_vec(f, n), rhs = zero_vec(f, n);
        for (const auto& t : ops.product(ix[0], ix[1])) ops.add_product(t.index, ix[2], t.coef, lhs);
        for (const auto& t : ops.product(ix[1], ix[2])) ops.add_product(ix[0], t.index, t.coef, rhs);
        return lhs == rhs;
    }));
    rep.checks.push_back(scan("unit_left", 1, n, [&](const std::vector<std::size_t>& ix) {
        return ops.mul(a.unit, unit_vec(f, n, ix[0])) == unit_vec(f, n, ix[0]);
    }));
    rep.checks.push_back(scan("unit_right", 1, n, [&](const std::vector<std::size_t>& ix) {
        return ops.mul(unit_vec(f, n, ix[0]), a.unit) == unit_vec(f, n, ix[0]);
    }));
    return rep;
}

AxiomReport check_coalgebra(const CoalgebraData& c) {
    CoalgebraOps ops(c);
    const std::size_t n = c.dim;
    FieldSpec f = c.field;
    AxiomReport rep;
    rep.checks.push_back(scan("coassociativity", 1, n, [&](const std::vector<std::size_t>& ix) {
        Vec lhs = zero_vec(f, n * n * n), rhs = zero_vec(f, n * n * n);
        for (const auto& t : ops.delta(ix[0])) {
            for (const auto& u : ops.delta(t.a)) lhs[(u.a * n + u.b) * n + t.b] += t.coef * u.coef;
            for (const auto& u : ops.delta(t.b)) rhs[(t.a * n + u.a) * n + u.b] += t.coef * u.coef;
        }
        return lhs == rhs;
    }));
    rep.checks.push_back(scan("counit_left", 1, n, [&](const std::vector<std::size_t>& ix) {
        Vec v = zero_vec(f, n);
        for (const auto& t : ops.delta(ix[0])) v[t.b] += c.counit[t.a] * t.coef;
        return v == unit_vec(f, n, ix[0]);
    }));
    rep.checks.push_back(scan("counit_right", 1, n, [&](const std::vector<std::size_t>& ix) {
        Vec v = zero_vec(f, n);
        for (const auto& t : ops.delta(ix[0])) v[t.a] += c.counit[t.b] * t.coef;
        return v == unit_vec(f, n, ix[0]);
    }));
    return rep;
}

AxiomReport check_hopf(const HopfData& h) {
    validate_shape(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    AxiomReport rep = check_algebra(h.alg);
    rep.append(check_coalgebra(h.coa));
    AlgebraOps alg(h.alg);
    CoalgebraOps coa(h.coa);

    rep.checks.push_back(scan("comult_multiplicative", 2, n, [&](const std::vector<std::size_t>& ix) {
        Vec lhs = zero_vec(f, n * n), rhs = zero_vec(f, n * n);
        for (const auto& t : alg.product(ix[0], ix[1]))
            for (const auto& d : coa.delta(t.index)) lhs[d.a * n + d.b] += t.coef * d.coef;
        for (const auto& d1 : coa.delta(ix[0]))
            for (const auto& d2 : coa.delta(ix[1])) {
                Scalar c = d1.coef * d2.coef;
                for (const auto& p : alg.product(d1.a, d2.a))
                    for (const auto& q : alg.product(d1.b, d2.b)) rhs[p.index * n + q.index] += c * p.coef * q.coef;
            }
        return lhs == rhs;
    }));
    AxiomCheck unit_check{"comult_unit", true, {}};
    if (coa.comul(h.alg.unit) != kron(h.alg.unit, h.alg.unit)) unit_check.passed = false;
    rep.checks.push_back(unit_check);
    rep.checks.push_back(scan("counit_multiplicative", 2, n, [&](const std::vector<std::size_t>& ix) {
        Scalar s = f.zero();
        for (const auto& t : alg.product(ix[0], ix[1])) s += t.coef * h.coa.counit[t.index];
        return s == h.coa.counit[ix[0]] * h.coa.counit[ix[1]];
    }));
    AxiomCheck counit_unit{"counit_unit", true, {}};
    if (n > 0 && !coa.eps(h.alg.unit).is_one()) counit_unit.passed = false;
    rep.checks.push_back(counit_unit);

    auto antipode_axiom = [&](bool s_left) {
        return [&, s_left](const std::vector<std::size_t>& ix) {
            Vec v = zero_vec(f, n);
            for (const auto& d : coa.delta(ix[0])) {
                Vec sa = h.antipode.col(s_left ? d.a : d.b);
                for (std::size_t r = 0; r < n; ++r) {
                    if (sa[r].is_zero()) continue;
                    if (s_left)
                        alg.add_product(r, d.b, sa[r] * d.coef, v);
                    else
                        alg.add_product(d.a, r, sa[r] * d.coef, v);
                }
            }
            return v == scaled(h.alg.unit, h.coa.counit[ix[0]]);
        };
    };
    rep.checks.push_back(scan("antipode_left", 1, n, antipode_axiom(true)));
    rep.checks.push_back(scan("antipode_right", 1, n, antipode_axiom(false)));
    if (h.antipode_inverse) {
        AxiomCheck inv{"antipode_inverse", true, {}};
        Mat id = Mat::identity(f, n);
        if (*h.antipode_inverse * h.antipode != id || h.antipode * *h.antipode_inverse != id) inv.passed = false;
        rep.checks.push_back(inv);
    }
    return rep;
}

HopfOps::HopfOps(const HopfData& h) : alg_(h.alg), coa_(h.coa), s_(h.antipode) {
    validate_shape(h);
    if (h.antipode_inverse)
        s_inv_ = *h.antipode_inverse;
    else
        s_inv_ = invert(h.antipode);
}

const Mat& HopfOps::antipode_inverse() const {
    if (!s_inv_) throw std::domain_error("antipode is not invertible");
    return *s_inv_;
}

Vec HopfOps::mul3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const {
    Vec xy = alg_.mul(x, y);
    return alg_.mul(xy, z);
}

Vec HopfOps::left_adjoint(std::size_t i, std::span<const Scalar> x) const {
    const std::size_t n = dim();
    Vec out = zero_vec(field(), n);
    for (const auto& d : coa_.delta(i)) {
        Vec hx = zero_vec(field(), n);
        for (std::size_t r = 0; r < n; ++r)
            if (!x[r].is_zero()) alg_.add_product(d.a, r, x[r], hx);
        axpy(out, d.coef, alg_.mul(hx, s_.col(d.b)));
    }
    return out;
}

}  // namespace hopfsmith
