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

#ifndef HOPFSMITH_LINSOLVE_HPP
#define HOPFSMITH_LINSOLVE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfsmith/matrix.hpp"

namespace hopfsmith {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Accumulates one linear equation  sum_k c_k x_k = rhs.
class Equation {
   public:
    explicit Equation(FieldSpec f) : rhs_(f.zero()) {}

    void add(std::size_t unknown, const Scalar& coef);
    void add_rhs(const Scalar& v) { rhs_ += v; }
    const Scalar& rhs() const { return rhs_; }
    /// Sorted, zero-free coefficient list.
    SparseRow terms() const;
    bool empty() const;

   private:
    std::unordered_map<std::size_t, Scalar> coef_;
    Scalar rhs_;
};

/// A sparse affine system A x = b assembled equation by equation.
class LinearSystem {
   public:
    LinearSystem(FieldSpec f, std::size_t unknowns) : field_(f), unknowns_(unknowns) {}

    FieldSpec field() const { return field_; }
    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return rows_.size(); }

    void add(const Equation& eq);
    void add_row(SparseRow row, Scalar rhs);
    /// Every row of m (acting on the unknowns) equals the matching entry of rhs.
    void add_rows(const Mat& m, const Vec& rhs);

    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<Scalar>& rhs() const { return rhs_; }

    /// A x for a candidate solution.
    Vec apply(std::span<const Scalar> x) const;
    bool satisfied_by(std::span<const Scalar> x) const;

   private:
    FieldSpec field_;
    std::size_t unknowns_;
    std::vector<SparseRow> rows_;
    std::vector<Scalar> rhs_;
};

/// Reduced row echelon form of an augmented system [A | b].
class EchelonForm {
   public:
    EchelonForm(FieldSpec f, std::size_t unknowns);

    /// Reduces the row against the current basis and keeps it if independent.
    void insert(SparseRow row, Scalar rhs);

    FieldSpec field() const { return field_; }
    bool consistent() const { return consistent_; }
    std::size_t unknowns() const { return unknowns_; }
    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t nullity() const { return unknowns_ - rank(); }
    std::vector<std::size_t> pivot_columns() const;
    std::vector<std::size_t> free_columns() const;

    /// Solution with every free unknown set to zero. Requires consistent().
    Vec particular() const;
    /// Columns span the solutions of the homogeneous system, one per free unknown.
    Mat nullspace_basis() const;
    /// Reduces a (homogeneous) row modulo the row space; zero iff it lies in the span.
    SparseRow reduce(SparseRow row) const;
    /// The reduced rows spanning the row space (homogeneous part).
    std::vector<SparseRow> basis_rows() const;

   private:
    struct PivotRow {
        std::uint32_t pivot;
        SparseRow row;
        Scalar rhs;
    };

    FieldSpec field_;
    std::size_t unknowns_;
    bool consistent_ = true;
    std::vector<PivotRow> pivot_rows_;
    std::vector<std::int64_t> row_of_pivot_;  // column -> index into pivot_rows_, or -1
};

EchelonForm reduce(const LinearSystem& sys);

/// Dense affine system (coefficient matrix, right-hand side).
struct AffineSystem {
    Mat a;
    Vec b;
    std::size_t unknowns;
};

struct AffineSolution {
    Vec particular;
    Mat nullspace;  // columns
};

/// One particular solution plus a basis of ker A, or nullopt when infeasible.
std::optional<AffineSolution> solve_affine(const AffineSystem& sys);
/// Same for a sparse system.
std::optional<AffineSolution> solve_affine(const LinearSystem& sys);

/// Columns form a basis of ker m.
Mat nullspace(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> invert(const Mat& m);
/// A matrix L with L * m = identity, for m of full column rank.
Mat left_inverse(const Mat& m);

/// Columns of m spanning its column space, linearly independent.
Mat column_basis(const Mat& m);
/// True if every column of sub lies in the column span of sup.
bool span_contains(const Mat& sup, const Mat& sub);
bool same_span(const Mat& a, const Mat& b);

}  // namespace hopfsmith

#endif  // HOPFSMITH_LINSOLVE_HPP
