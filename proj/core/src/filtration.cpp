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

#include "hopfsmith/filtration.hpp"

#include "hopfsmith/doubles.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

namespace {

SubspaceBasis span_of(const Mat& m, FieldSpec f, std::size_t n) {
    if (m.cols() == 0) return zero_space(f, n);
    return make_subspace(m, f, n);
}

// Rows span the annihilator of X, so the kernel is exactly X.
Mat quotient_map(const SubspaceBasis& x, FieldSpec f) {
    if (x.dim() == 0) return Mat::identity(f, x.ambient);
    return nullspace(x.basis.transpose()).transpose();
}

using IntMat = std::vector<std::uint64_t>;

IntMat mul_mod(const IntMat& a, const IntMat& b, std::size_t n, std::uint64_t m) {
    IntMat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t x = a[i * n + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % m;
        }
    return c;
}

// (Tr(L̃^q) mod p·q) / q for an integer lift L̃ of L, q a power of p.
std::uint64_t lifted_trace(const Mat& l, std::uint64_t p, std::uint64_t q) {
    const std::size_t n = l.rows();
    const std::uint64_t m = p * q;
    IntMat base(n * n), acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        acc[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) base[i * n + j] = l(i, j).residue();
    }
    for (std::uint64_t e = q; e > 0; e >>= 1) {
        if (e & 1) acc = mul_mod(acc, base, n, m);
        if (e > 1) base = mul_mod(base, base, n, m);
    }
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t = (t + acc[i * n + i]) % m;
    return t / q;
}

SubspaceBasis trace_form_radical(const AlgebraData& a) {
    const std::size_t n = a.dim;
    FieldSpec f = a.field;
    Vec tr = zero_vec(f, n);  // tr(L_{e_k})
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) tr[k] += a.mult(k, m, m);
    Mat g(f, n, n);  // g(j, i) = tr(L_{e_i e_j})
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g(j, i) += a.mult(i, j, k) * tr[k];
    return span_of(nullspace(g), f, n);
}

SubspaceBasis power_trace_radical(const AlgebraData& a) {
    const std::size_t n = a.dim;
    FieldSpec f = a.field;
    const std::size_t p = f.characteristic();
    AlgebraOps alg(a);
    Mat current = Mat::identity(f, n);
    for (std::size_t q = 1; q <= n && current.cols() > 0; q *= p) {
        Mat g(f, n, current.cols());
        for (std::size_t k = 0; k < current.cols(); ++k)
            for (std::size_t t = 0; t < n; ++t) {
                Vec z = alg.mul(current.col(k), unit_vec(f, n, t));
                g(t, k) = f.from_int(static_cast<long>(lifted_trace(alg.left_mult(z), p, q)));
            }
        Mat ker = nullspace(g);
        current = ker.cols() == 0 ? Mat(f, n, 0) : current * ker;
    }
    return span_of(current, f, n);
}

}  // namespace

AlgebraData dual_algebra(const CoalgebraData& c) {
    AlgebraData a{c.field, c.dim, Tensor3(c.field, c.dim, c.dim, c.dim), c.counit};
    for (std::size_t i = 0; i < c.dim; ++i)
        for (std::size_t j = 0; j < c.dim; ++j)
            for (std::size_t k = 0; k < c.dim; ++k) a.mult(i, j, k) = c.comult(k, i, j);
    return a;
}

bool is_ideal(const SubspaceBasis& i, const AlgebraData& a) {
    if (i.ambient != a.dim) throw DimensionError("is_ideal: subspace of the wrong ambient dimension");
    AlgebraOps alg(a);
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < i.dim(); ++k)
        for (std::size_t r = 0; r < a.dim; ++r) {
            Vec e = unit_vec(a.field, a.dim, r), b = i.basis.col(k);
            cols.push_back(alg.mul(e, b));
            cols.push_back(alg.mul(b, e));
        }
    if (cols.empty()) return true;
    return span_contains(i.basis, Mat::from_columns(a.field, a.dim, cols));
}

std::optional<std::size_t> is_nilpotent_ideal(const SubspaceBasis& i, const AlgebraData& a) {
    if (!is_ideal(i, a)) throw FiltrationError("is_nilpotent_ideal: subspace is not a two-sided ideal");
    AlgebraOps alg(a);
    Mat pw = i.basis;
    for (std::size_t k = 1;; ++k) {
        if (pw.cols() == 0) return k;
        std::vector<Vec> cols;
        for (std::size_t x = 0; x < pw.cols(); ++x)
            for (std::size_t y = 0; y < i.dim(); ++y) cols.push_back(alg.mul(pw.col(x), i.basis.col(y)));
        Mat next = column_basis(Mat::from_columns(a.field, a.dim, cols));
        if (next.cols() == pw.cols()) return std::nullopt;
        pw = next;
    }
}

AlgebraData quotient_algebra(const AlgebraData& a, const SubspaceBasis& i) {
    if (!is_ideal(i, a)) throw FiltrationError("quotient_algebra: subspace is not a two-sided ideal");
    QuotientReducer red(i);
    const std::size_t m = red.dim();
    AlgebraOps alg(a);
    AlgebraData q{a.field, m, Tensor3(a.field, m, m, m), red.project(a.unit)};
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            Vec c = red.project(alg.mul(unit_vec(a.field, a.dim, red.kept()[r]), unit_vec(a.field, a.dim, red.kept()[s])));
            for (std::size_t k = 0; k < m; ++k) q.mult(r, s, k) = c[k];
        }
    return q;
}

SubspaceBasis radical(const AlgebraData& a) {
    validate_shape(a);
    SubspaceBasis r = a.field.is_rational() ? trace_form_radical(a) : power_trace_radical(a);
    if (!is_nilpotent_ideal(r, a)) throw std::logic_error("radical: result is not a nilpotent ideal");
    AlgebraData quo = quotient_algebra(a, r);
    if (!separable_extension(trivial_extension(quo)))
        throw std::logic_error("radical: quotient by the computed radical is not semisimple");
    return r;
}

SubspaceBasis coradical(const CoalgebraData& c) {
    validate_shape(c);
    SubspaceBasis rad = radical(dual_algebra(c));
    SubspaceBasis corad = rad.dim() == 0 ? full_space(c.field, c.dim) : span_of(nullspace(rad.basis.transpose()), c.field, c.dim);
    if (!is_subcoalgebra(corad, c)) throw std::logic_error("coradical: result is not a subcoalgebra");
    return corad;
}

bool is_subcoalgebra(const SubspaceBasis& x, const CoalgebraData& e) {
    if (x.ambient != e.dim) throw DimensionError("is_subcoalgebra: subspace of the wrong ambient dimension");
    if (x.dim() == 0) return true;
    Mat image = CoalgebraOps(e).comult_matrix() * x.basis;
    return span_contains(Mat::kron(x.basis, x.basis), image);
}

SubspaceBasis generated_subcoalgebra(const Mat& spanning, const CoalgebraData& e) {
    const std::size_t n = e.dim;
    if (spanning.rows() != n) throw DimensionError("generated_subcoalgebra: vectors have the wrong length");
    CoalgebraOps coa(e);
    std::vector<Vec> cols;
    for (std::size_t s = 0; s < spanning.cols(); ++s) {
        Vec x = spanning.col(s);
        std::vector<Vec> slices(n * n, zero_vec(e.field, n));  // (f_a ⊗ id ⊗ f_c) Δ²(x)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[k].is_zero()) continue;
            for (const auto& t : coa.delta2(k)) slices[t.a * n + t.c][t.b] += x[k] * t.coef;
        }
        for (auto& v : slices) cols.push_back(std::move(v));
    }
    if (cols.empty()) return zero_space(e.field, n);
    return span_of(column_basis(Mat::from_columns(e.field, n, cols)), e.field, n);
}

SubspaceBasis wedge(const SubspaceBasis& x, const SubspaceBasis& y, const CoalgebraData& e) {
    if (x.ambient != e.dim || y.ambient != e.dim) throw DimensionError("wedge: subspaces of the wrong ambient dimension");
    Mat px = quotient_map(x, e.field), py = quotient_map(y, e.field);
    if (px.rows() == 0 || py.rows() == 0) return full_space(e.field, e.dim);
    return span_of(nullspace(Mat::kron(px, py) * CoalgebraOps(e).comult_matrix()), e.field, e.dim);
}

FiltrationRecord wedge_filtration(const SubspaceBasis& c, const CoalgebraData& e) {
    if (!is_subcoalgebra(c, e)) throw FiltrationError("wedge_filtration: input is not a subcoalgebra");
    FiltrationRecord rec;
    rec.stages.push_back(c);
    for (std::size_t step = 0; step <= e.dim; ++step) {
        SubspaceBasis next = wedge(rec.stages.back(), c, e);
        if (next.dim() == rec.stages.back().dim()) break;
        rec.stages.push_back(std::move(next));
    }
    rec.stabilization_index = rec.stages.size();
    rec.exhausted = rec.stages.back().dim() == e.dim;
    SubspaceBasis corad = coradical(e);
    rec.coradical_contained = corad.dim() == 0 || (c.dim() > 0 && span_contains(c.basis, corad.basis));
    if (rec.exhausted != rec.coradical_contained)
        throw std::logic_error("wedge_filtration: exhaustion disagrees with coradical containment");
    return rec;
}

Json filtration_to_json(const FiltrationRecord& r) {
    Json stages = Json::array();
    for (const auto& s : r.stages) stages.push_back({{"dim", s.dim()}, {"basis", mat_to_json(s.basis)}});
    return {{"stages", stages},
            {"exhausted", r.exhausted},
            {"stabilization_index", r.stabilization_index},
            {"coradical_contained", r.coradical_contained}};
}

}  // namespace hopfsmith
