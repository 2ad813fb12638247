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

#ifndef HOPFSMITH_MATRIX_HPP
#define HOPFSMITH_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfsmith/field.hpp"

namespace hopfsmith {

/// Thrown on inconsistent matrix/tensor shapes.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec f, std::size_t n);
Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x);  // y += a x
Vec scaled(std::span<const Scalar> x, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
/// Flattened a ⊗ b (index i * b.size() + j).
Vec kron(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over one field.
class Mat {
   public:
    Mat() = default;
    Mat(FieldSpec f, std::size_t rows, std::size_t cols);
    Mat(FieldSpec f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Mat identity(FieldSpec f, std::size_t n);
    static Mat from_columns(FieldSpec f, std::size_t rows, const std::vector<Vec>& cols);
    static Mat from_rows(FieldSpec f, std::size_t cols, const std::vector<Vec>& rows);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec col(std::size_t c) const;
    void set_col(std::size_t c, std::span<const Scalar> v);
    const std::vector<Scalar>& entries() const { return data_; }

    Mat transpose() const;
    Vec operator*(std::span<const Scalar> v) const;
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

    /// Kronecker product: (a ⊗ b)((i,k),(j,l)) = a(i,j) b(k,l).
    static Mat kron(const Mat& a, const Mat& b);
    static Mat hstack(const Mat& a, const Mat& b);
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

   private:
    FieldSpec field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Mat& m);

}  // namespace hopfsmith

#endif  // HOPFSMITH_MATRIX_HPP
