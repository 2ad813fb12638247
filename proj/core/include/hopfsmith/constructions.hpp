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

#ifndef HOPFSMITH_CONSTRUCTIONS_HPP
#define HOPFSMITH_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>
#include <stdexcept>

#include "hopfsmith/hopf.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

/// Raised when a construction needs a valid Hopf algebra and the input is not one.
class AxiomError : public std::invalid_argument {
   public:
    AxiomError(const std::string& what, AxiomCheck failure)
        : std::invalid_argument(what), failure_(std::move(failure)) {}
    const AxiomCheck& failure() const { return failure_; }

   private:
    AxiomCheck failure_;
};

/// Throws AxiomError naming the first failed axiom.
void require_hopf(const HopfData& h);

/// Subspace of K^ambient spanned by the (independent) columns of basis.
struct SubspaceBasis {
    std::size_t ambient = 0;
    Mat basis;
    std::optional<Mat> complement;

    std::size_t dim() const { return basis.cols(); }
    /// Left inverse of basis: ambient vectors in the span to coordinates.
    Mat coordinates() const;
};

SubspaceBasis make_subspace(const Mat& spanning, FieldSpec f, std::size_t ambient);
SubspaceBasis full_space(FieldSpec f, std::size_t n);
SubspaceBasis zero_space(FieldSpec f, std::size_t n);

/// Quotient H -> H/K·1 realized on the basis vectors other than the pivot.
struct QuotientSpace {
    std::size_t ambient = 0;
    std::size_t pivot = 0;
    Mat projection;  // dim x ambient
    Mat section;     // ambient x dim, projection * section = identity

    std::size_t dim() const { return projection.rows(); }
};

/// Coordinates on K^n / W obtained by reduction modulo W. The kept coordinates
/// (non-pivot columns) index a complement of W.
class QuotientReducer {
   public:
    explicit QuotientReducer(const SubspaceBasis& w);

    std::size_t ambient() const { return ef_.unknowns(); }
    std::size_t dim() const { return kept_.size(); }
    const std::vector<std::size_t>& kept() const { return kept_; }
    Vec project(std::span<const Scalar> x) const;
    /// Representative supported on the kept coordinates.
    Vec lift(std::span<const Scalar> q) const;
    Mat projection() const;
    Mat section() const;

   private:
    EchelonForm ef_;
    std::vector<std::size_t> kept_;
    std::vector<std::int64_t> pos_;
};

/// Transposes structure maps. Checks the input first when validate is set.
HopfData dual_hopf(const HopfData& h, bool validate = true);
HopfData op_cop(const HopfData& h, bool flip_mult, bool flip_comult);

/// H⁺ = ker ε with complement K·1.
SubspaceBasis augmentation_ideal(const HopfData& h);
/// H̄ = coker u, split off along the first basis vector where the unit is nonzero.
QuotientSpace unit_cokernel(const HopfData& h);

/// Same structure up to the identification H ≅ H** (coordinates coincide).
bool double_dual_matches(const HopfData& h, const HopfData& dd);

}  // namespace hopfsmith

#endif  // HOPFSMITH_CONSTRUCTIONS_HPP
