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

#include "hopfsmith/matrix.hpp"

#include <sstream>

namespace hopfsmith {

Vec zero_vec(FieldSpec f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
    if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(std::span<const Scalar> x, const Scalar& a) {
    Vec out(x.begin(), x.end());
    for (auto& s : out) s *= a;
    return out;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    if (a.empty()) throw DimensionError("dot of empty vectors has no field");
    Scalar s = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec kron(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.empty() || b.empty()) return {};
    Vec out = zero_vec(a[0].field(), a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

Mat::Mat(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Mat::Mat(FieldSpec f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionError("matrix entries do not match rows x cols");
    for (const auto& s : data_)
        if (s.field() != f) throw FieldError("matrix entry outside the matrix field");
}

Mat Mat::identity(FieldSpec f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Mat Mat::from_columns(FieldSpec f, std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
    return m;
}

Mat Mat::from_rows(FieldSpec f, std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Mat::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Mat::set_col(std::size_t c, std::span<const Scalar> v) {
    if (v.size() != rows_) throw DimensionError("set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Mat::operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector product: shape mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
    Mat out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    Mat out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
        }
    return out;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw DimensionError("hstack: row count mismatch");
    Mat out(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Mat out(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

bool Mat::is_zero() const { return hopfsmith::is_zero(data_); }

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace hopfsmith
