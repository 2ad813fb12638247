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

#include "hopfsmith/linsolve.hpp"

#include <algorithm>

namespace hopfsmith {

namespace {

// a - c * b for sorted sparse rows.
SparseRow sub_scaled(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Scalar* find_entry(const SparseRow& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

SparseRow to_sparse(std::span<const Scalar> dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (!dense[c].is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), dense[c]);
    return row;
}

}  // namespace

void Equation::add(std::size_t unknown, const Scalar& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = coef_.try_emplace(unknown, coef);
    if (!inserted) it->second += coef;
}

SparseRow Equation::terms() const {
    SparseRow row;
    row.reserve(coef_.size());
    for (const auto& [k, v] : coef_)
        if (!v.is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), v);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

bool Equation::empty() const {
    for (const auto& [k, v] : coef_)
        if (!v.is_zero()) return false;
    return true;
}

void LinearSystem::add(const Equation& eq) { add_row(eq.terms(), eq.rhs()); }

void LinearSystem::add_row(SparseRow row, Scalar rhs) {
    for (const auto& [c, v] : row)
        if (c >= unknowns_) throw DimensionError("equation references unknown beyond the system size");
    if (rhs.field() != field_) throw FieldError("equation right-hand side in the wrong field");
    if (row.empty() && rhs.is_zero()) return;
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
}

void LinearSystem::add_rows(const Mat& m, const Vec& rhs) {
    if (m.cols() != unknowns_ || rhs.size() != m.rows()) throw DimensionError("add_rows: shape mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r) add_row(to_sparse(m.row(r)), rhs[r]);
}

Vec LinearSystem::apply(std::span<const Scalar> x) const {
    if (x.size() != unknowns_) throw DimensionError("apply: wrong solution length");
    Vec out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        Scalar s = field_.zero();
        for (const auto& [c, v] : row) s += v * x[c];
        out.push_back(std::move(s));
    }
    return out;
}

bool LinearSystem::satisfied_by(std::span<const Scalar> x) const { return apply(x) == rhs_; }

EchelonForm::EchelonForm(FieldSpec f, std::size_t unknowns)
    : field_(f), unknowns_(unknowns), row_of_pivot_(unknowns, -1) {}

SparseRow EchelonForm::reduce(SparseRow row) const {
    SparseRow out = row;
    for (const auto& [c, v] : row) {
        std::int64_t p = row_of_pivot_[c];
        if (p < 0) continue;
        // Pivot rows vanish on other pivot columns, so v is still the live coefficient.
        out = sub_scaled(out, v, pivot_rows_[static_cast<std::size_t>(p)].row);
    }
    return out;
}

void EchelonForm::insert(SparseRow row, Scalar rhs) {
    if (!consistent_) return;
    SparseRow original = row;
    for (const auto& [c, v] : original) {
        if (c >= unknowns_) throw DimensionError("row references unknown beyond the echelon size");
        std::int64_t p = row_of_pivot_[c];
        if (p < 0) continue;
        const PivotRow& pr = pivot_rows_[static_cast<std::size_t>(p)];
        row = sub_scaled(row, v, pr.row);
        rhs -= v * pr.rhs;
    }
    if (row.empty()) {
        if (!rhs.is_zero()) consistent_ = false;
        return;
    }
    Scalar inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    rhs *= inv;
    std::uint32_t pivot = row.front().first;

    for (auto& pr : pivot_rows_) {
        const Scalar* e = find_entry(pr.row, pivot);
        if (!e) continue;
        Scalar coef = *e;
        pr.row = sub_scaled(pr.row, coef, row);
        pr.rhs -= coef * rhs;
    }
    row_of_pivot_[pivot] = static_cast<std::int64_t>(pivot_rows_.size());
    pivot_rows_.push_back({pivot, std::move(row), std::move(rhs)});
}

std::vector<std::size_t> EchelonForm::pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < unknowns_; ++c)
        if (row_of_pivot_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::size_t> EchelonForm::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < unknowns_; ++c)
        if (row_of_pivot_[c] < 0) out.push_back(c);
    return out;
}

Vec EchelonForm::particular() const {
    if (!consistent_) throw std::logic_error("particular() on an inconsistent system");
    Vec x = zero_vec(field_, unknowns_);
    for (const auto& pr : pivot_rows_) x[pr.pivot] = pr.rhs;
    return x;
}

Mat EchelonForm::nullspace_basis() const {
    auto free = free_columns();
    Mat basis(field_, unknowns_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        auto f = static_cast<std::uint32_t>(free[k]);
        basis(f, k) = field_.one();
        for (const auto& pr : pivot_rows_)
            if (const Scalar* e = find_entry(pr.row, f)) basis(pr.pivot, k) = -*e;
    }
    return basis;
}

std::vector<SparseRow> EchelonForm::basis_rows() const {
    std::vector<SparseRow> out;
    out.reserve(pivot_rows_.size());
    for (const auto& pr : pivot_rows_) out.push_back(pr.row);
    return out;
}

EchelonForm reduce(const LinearSystem& sys) {
    EchelonForm ef(sys.field(), sys.unknowns());
    for (std::size_t r = 0; r < sys.equations() && ef.consistent(); ++r) ef.insert(sys.rows()[r], sys.rhs()[r]);
    return ef;
}

std::optional<AffineSolution> solve_affine(const LinearSystem& sys) {
    EchelonForm ef = reduce(sys);
    if (!ef.consistent()) return std::nullopt;
    return AffineSolution{ef.particular(), ef.nullspace_basis()};
}

std::optional<AffineSolution> solve_affine(const AffineSystem& sys) {
    if (sys.a.cols() != sys.unknowns || sys.b.size() != sys.a.rows())
        throw DimensionError("affine system: coefficient matrix, right-hand side and unknown count disagree");
    LinearSystem ls(sys.a.field(), sys.unknowns);
    ls.add_rows(sys.a, sys.b);
    return solve_affine(ls);
}

namespace {
EchelonForm row_echelon(const Mat& m) {
    EchelonForm ef(m.field(), m.cols());
    Scalar zero = m.field().zero();
    for (std::size_t r = 0; r < m.rows(); ++r) ef.insert(to_sparse(m.row(r)), zero);
    return ef;
}
}  // namespace

Mat nullspace(const Mat& m) { return row_echelon(m).nullspace_basis(); }

std::size_t rank(const Mat& m) { return row_echelon(m).rank(); }

std::optional<Mat> invert(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("invert: matrix is not square");
    const std::size_t n = m.rows();
    FieldSpec f = m.field();
    Mat a = m;
    Mat inv = Mat::identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(p, k), a(c, k));
                std::swap(inv(p, k), inv(c, k));
            }
        Scalar s = a(c, c).inverse();
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) *= s;
            inv(c, k) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            Scalar factor = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                if (!a(c, k).is_zero()) a(r, k) -= factor * a(c, k);
                if (!inv(c, k).is_zero()) inv(r, k) -= factor * inv(c, k);
            }
        }
    }
    return inv;
}

Mat left_inverse(const Mat& m) {
    const std::size_t k = m.cols();
    auto rows = row_echelon(m.transpose()).pivot_columns();
    if (rows.size() != k) throw DimensionError("left_inverse: columns are linearly dependent");
    Mat square(m.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) square(i, j) = m(rows[i], j);
    Mat sq_inv = *invert(square);
    Mat out(m.field(), k, m.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, rows[j]) = sq_inv(i, j);
    return out;
}

Mat column_basis(const Mat& m) {
    auto cols = row_echelon(m).pivot_columns();
    Mat out(m.field(), m.rows(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) out.set_col(k, m.col(cols[k]));
    return out;
}

bool span_contains(const Mat& sup, const Mat& sub) {
    if (sub.cols() == 0) return true;
    if (sup.rows() != sub.rows()) throw DimensionError("span_contains: ambient dimension mismatch");
    return rank(Mat::hstack(sup, sub)) == rank(sup);
}

bool same_span(const Mat& a, const Mat& b) { return span_contains(a, b) && span_contains(b, a); }

}  // namespace hopfsmith
