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

#ifndef HOPFSMITH_FILTRATION_HPP
#define HOPFSMITH_FILTRATION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/hopf.hpp"
#include "hopfsmith/serialize.hpp"

namespace hopfsmith {

class FiltrationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// C* with (f g)(x) = f(x1) g(x2) and unit ε.
AlgebraData dual_algebra(const CoalgebraData& c);

/// Jacobson radical. Trace form in characteristic 0, p-power traces in characteristic p.
/// Throws std::logic_error if the result is not a nilpotent ideal with separable quotient.
SubspaceBasis radical(const AlgebraData& a);
/// Orthogonal complement of rad(C*).
SubspaceBasis coradical(const CoalgebraData& c);

/// Δ(X) ⊆ X ⊗ X.
bool is_subcoalgebra(const SubspaceBasis& x, const CoalgebraData& e);
/// Smallest subcoalgebra containing the columns of spanning.
SubspaceBasis generated_subcoalgebra(const Mat& spanning, const CoalgebraData& e);

/// ker((π_X ⊗ π_Y) Δ).
SubspaceBasis wedge(const SubspaceBasis& x, const SubspaceBasis& y, const CoalgebraData& e);

struct FiltrationRecord {
    std::vector<SubspaceBasis> stages;  // C^{∧1}, C^{∧2}, ...
    bool exhausted = false;
    std::size_t stabilization_index = 0;  // number of the first stage equal to its successor
    bool coradical_contained = false;
};

/// Throws FiltrationError when c is not a subcoalgebra, std::logic_error when
/// exhaustion disagrees with Corad(E) ⊆ C.
FiltrationRecord wedge_filtration(const SubspaceBasis& c, const CoalgebraData& e);
Json filtration_to_json(const FiltrationRecord& r);

/// Throws FiltrationError when i is not a two-sided ideal.
bool is_ideal(const SubspaceBasis& i, const AlgebraData& a);
/// Least n with Iⁿ = 0, or nullopt when the powers stabilize above zero.
std::optional<std::size_t> is_nilpotent_ideal(const SubspaceBasis& i, const AlgebraData& a);

/// A/I on the coordinates not used as pivots by the ideal.
AlgebraData quotient_algebra(const AlgebraData& a, const SubspaceBasis& i);

}  // namespace hopfsmith

#endif  // HOPFSMITH_FILTRATION_HPP
