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

#ifndef HOPFSMITH_HOPF_HPP
#define HOPFSMITH_HOPF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfsmith/matrix.hpp"

namespace hopfsmith {

enum class Side { left, right };

/// Dense rank-3 tensor t(i, j, k), last index fastest.
class Tensor3 {
   public:
    Tensor3() = default;
    Tensor3(FieldSpec f, std::size_t d0, std::size_t d1, std::size_t d2);

    FieldSpec field() const { return field_; }
    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    const std::vector<Scalar>& entries() const { return data_; }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

   private:
    FieldSpec field_{};
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> data_;
};

/// e_i e_j = sum_k mult(i, j, k) e_k, with unit 1 = sum_k unit[k] e_k.
struct AlgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    Tensor3 mult;
    Vec unit;
    friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};

/// Delta(e_k) = sum_{i,j} comult(k, i, j) e_i ⊗ e_j, with counit eps(e_k) = counit[k].
struct CoalgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    Tensor3 comult;
    Vec counit;
    friend bool operator==(const CoalgebraData&, const CoalgebraData&) = default;
};

/// Column j of the antipode matrix holds S(e_j).
struct HopfData {
    AlgebraData alg;
    CoalgebraData coa;
    Mat antipode;
    std::optional<Mat> antipode_inverse;
    std::vector<std::string> basis;

    FieldSpec field() const { return alg.field; }
    std::size_t dim() const { return alg.dim; }
    /// Structure constants only; basis labels are ignored.
    bool same_structure(const HopfData& o) const;
};

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::vector<std::size_t> witness;  // first violating index tuple
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
    const AxiomCheck* first_failure() const;
    /// Throws std::out_of_range when the axiom was not evaluated.
    bool passed(std::string_view axiom) const;
    void append(const AxiomReport& other);
};

AxiomReport check_algebra(const AlgebraData& a);
AxiomReport check_coalgebra(const CoalgebraData& c);
/// Algebra, coalgebra, bialgebra compatibility, antipode axiom, and S̄ = S⁻¹ when present.
AxiomReport check_hopf(const HopfData& h);

/// Throws DimensionError unless the tensors match the declared dimension and field.
void validate_shape(const AlgebraData& a);
void validate_shape(const CoalgebraData& c);
void validate_shape(const HopfData& h);

/// Sparse view of multiplication: products of basis elements.
class AlgebraOps {
   public:
    struct Term {
        std::uint32_t index;
        Scalar coef;
    };

    explicit AlgebraOps(const AlgebraData& a);

    std::size_t dim() const { return n_; }
    FieldSpec field() const { return field_; }
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    const Vec& unit() const { return unit_; }

    Vec mul(std::span<const Scalar> x, std::span<const Scalar> y) const;
    /// out += coef * e_i e_j
    void add_product(std::size_t i, std::size_t j, const Scalar& coef, Vec& out) const;
    Mat left_mult(std::span<const Scalar> x) const;   // y -> x y
    Mat right_mult(std::span<const Scalar> x) const;  // y -> y x
    Mat left_mult_basis(std::size_t i) const;
    Mat right_mult_basis(std::size_t i) const;
    /// n x n² matrix of a ⊗ b -> a b.
    Mat mult_matrix() const;

   private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<std::vector<Term>> table_;
    Vec unit_;
};

/// Sparse view of comultiplication and its iterates.
class CoalgebraOps {
   public:
    struct Term2 {
        std::uint32_t a, b;
        Scalar coef;
    };
    struct Term3 {
        std::uint32_t a, b, c;
        Scalar coef;
    };

    explicit CoalgebraOps(const CoalgebraData& c);

    std::size_t dim() const { return n_; }
    FieldSpec field() const { return field_; }
    const std::vector<Term2>& delta(std::size_t k) const { return delta_[k]; }
    /// (Delta ⊗ id) Delta (e_k)
    const std::vector<Term3>& delta2(std::size_t k) const { return delta2_[k]; }
    const Vec& counit() const { return counit_; }

    Vec comul(std::span<const Scalar> x) const;  // length n²
    Scalar eps(std::span<const Scalar> x) const;
    /// n² x n matrix of Delta.
    Mat comult_matrix() const;

   private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<std::vector<Term2>> delta_;
    std::vector<std::vector<Term3>> delta2_;
    Vec counit_;
};

/// Element-level arithmetic in a Hopf algebra.
class HopfOps {
   public:
    explicit HopfOps(const HopfData& h);

    std::size_t dim() const { return alg_.dim(); }
    FieldSpec field() const { return alg_.field(); }
    const AlgebraOps& alg() const { return alg_; }
    const CoalgebraOps& coa() const { return coa_; }
    const Mat& antipode() const { return s_; }
    /// Throws std::domain_error when S is singular.
    const Mat& antipode_inverse() const;
    bool has_invertible_antipode() const { return s_inv_.has_value(); }

    Vec mul(std::span<const Scalar> x, std::span<const Scalar> y) const { return alg_.mul(x, y); }
    Vec mul3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const;
    Vec S(std::span<const Scalar> x) const { return s_ * x; }
    Vec S_col(std::size_t j) const { return s_.col(j); }
    Vec Sbar_col(std::size_t j) const { return antipode_inverse().col(j); }
    Vec basis(std::size_t i) const { return unit_vec(field(), dim(), i); }
    const Vec& one() const { return alg_.unit(); }

    /// h ▷ x = h1 x S(h2) for basis h = e_i and arbitrary x.
    Vec left_adjoint(std::size_t i, std::span<const Scalar> x) const;

   private:
    AlgebraOps alg_;
    CoalgebraOps coa_;
    Mat s_;
    std::optional<Mat> s_inv_;
};

}  // namespace hopfsmith

#endif  // HOPFSMITH_HOPF_HPP
