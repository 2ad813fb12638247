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

#include "hopfsmith/constructions.hpp"

#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

void require_hopf(const HopfData& h) {
    AxiomReport rep = check_hopf(h);
    if (const AxiomCheck* bad = rep.first_failure()) throw AxiomError("Hopf axiom '" + bad->axiom + "' fails", *bad);
}

Mat SubspaceBasis::coordinates() const {
    if (basis.cols() == 0) return Mat(basis.field(), 0, ambient);
    return left_inverse(basis);
}

SubspaceBasis make_subspace(const Mat& spanning, FieldSpec f, std::size_t ambient) {
    if (spanning.cols() == 0) return zero_space(f, ambient);
    if (spanning.rows() != ambient) throw DimensionError("make_subspace: vectors have the wrong length");
    return SubspaceBasis{ambient, column_basis(spanning), std::nullopt};
}

SubspaceBasis full_space(FieldSpec f, std::size_t n) { return SubspaceBasis{n, Mat::identity(f, n), Mat(f, n, 0)}; }

SubspaceBasis zero_space(FieldSpec f, std::size_t n) { return SubspaceBasis{n, Mat(f, n, 0), Mat::identity(f, n)}; }

QuotientReducer::QuotientReducer(const SubspaceBasis& w) : ef_(w.basis.field(), w.ambient) {
    for (std::size_t c = 0; c < w.dim(); ++c) {
        SparseRow row;
        Vec v = w.basis.col(c);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), v[k]);
        ef_.insert(std::move(row), ef_.field().zero());
    }
    kept_ = ef_.free_columns();
    pos_.assign(w.ambient, -1);
    for (std::size_t k = 0; k < kept_.size(); ++k) pos_[kept_[k]] = static_cast<std::int64_t>(k);
}

Vec QuotientReducer::project(std::span<const Scalar> x) const {
    if (x.size() != ambient()) throw DimensionError("QuotientReducer::project: wrong vector length");
    SparseRow row;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), x[k]);
    Vec out = zero_vec(ef_.field(), dim());
    for (const auto& [c, v] : ef_.reduce(std::move(row))) out[static_cast<std::size_t>(pos_[c])] = v;
    return out;
}

Vec QuotientReducer::lift(std::span<const Scalar> q) const {
    if (q.size() != dim()) throw DimensionError("QuotientReducer::lift: wrong vector length");
    Vec out = zero_vec(ef_.field(), ambient());
    for (std::size_t k = 0; k < q.size(); ++k) out[kept_[k]] = q[k];
    return out;
}

Mat QuotientReducer::projection() const {
    Mat p(ef_.field(), dim(), ambient());
    for (std::size_t c = 0; c < ambient(); ++c) p.set_col(c, project(unit_vec(ef_.field(), ambient(), c)));
    return p;
}

Mat QuotientReducer::section() const {
    Mat s(ef_.field(), ambient(), dim());
    for (std::size_t k = 0; k < dim(); ++k) s(kept_[k], k) = ef_.field().one();
    return s;
}

HopfData dual_hopf(const HopfData& h, bool validate) {
    if (validate) require_hopf(h);
    else validate_shape(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    HopfData d;
    d.alg = {f, n, Tensor3(f, n, n, n), h.coa.counit};
    d.coa = {f, n, Tensor3(f, n, n, n), h.alg.unit};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.alg.mult(i, j, k) = h.coa.comult(k, i, j);
                d.coa.comult(k, i, j) = h.alg.mult(i, j, k);
            }
    d.antipode = h.antipode.transpose();
    if (h.antipode_inverse) d.antipode_inverse = h.antipode_inverse->transpose();
    for (const auto& b : h.basis) d.basis.push_back(b + "*");
    return d;
}

HopfData op_cop(const HopfData& h, bool flip_mult, bool flip_comult) {
    validate_shape(h);
    const std::size_t n = h.dim();
    HopfData out = h;
    if (flip_mult)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) out.alg.mult(i, j, k) = h.alg.mult(j, i, k);
    if (flip_comult)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.coa.comult(k, i, j) = h.coa.comult(k, j, i);
    if (flip_mult != flip_comult) {
        std::optional<Mat> inv = h.antipode_inverse ? h.antipode_inverse : invert(h.antipode);
        if (!inv) throw std::domain_error("op_cop: a single flip needs an invertible antipode");
        out.antipode = *inv;
        out.antipode_inverse = h.antipode;
    }
    return out;
}

SubspaceBasis augmentation_ideal(const HopfData& h) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    Mat eps(f, 1, n, h.coa.counit);
    SubspaceBasis s{n, nullspace(eps), std::nullopt};
    Mat one(f, n, 1);
    one.set_col(0, h.alg.unit);
    s.complement = one;
    return s;
}

QuotientSpace unit_cokernel(const HopfData& h) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    const Vec& u = h.alg.unit;
    std::size_t p = 0;
    while (p < n && u[p].is_zero()) ++p;
    if (p == n) throw std::domain_error("unit_cokernel: the unit vector is zero");
    QuotientSpace q{n, p, Mat(f, n - 1, n), Mat(f, n, n - 1)};
    Scalar inv = u[p].inverse();
    for (std::size_t k = 0, r = 0; k < n; ++k) {
        if (k == p) continue;
        q.projection(r, k) = f.one();
        q.projection(r, p) = -(u[k] * inv);
        q.section(k, r) = f.one();
        ++r;
    }
    return q;
}

bool double_dual_matches(const HopfData& h, const HopfData& dd) {
    return h.same_structure(dd) && h.antipode_inverse == dd.antipode_inverse;
}

}  // namespace hopfsmith
