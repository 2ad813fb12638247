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

#ifndef HOPFSMITH_DOUBLES_HPP
#define HOPFSMITH_DOUBLES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfsmith/hopf.hpp"
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/serialize.hpp"

namespace hopfsmith {

/// Algebra extension i: S → R.
struct ExtensionData {
    AlgebraData big;
    AlgebraData small;
    Mat embedding;  // dim R x dim S
};

class ExtensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ExtensionError unless i is an injective unital algebra map.
void validate_extension(const ExtensionData& ext);
ExtensionData trivial_extension(const AlgebraData& r);    // K → R
ExtensionData identity_extension(const AlgebraData& r);   // R → R

Json extension_to_json(const ExtensionData& ext);
ExtensionData extension_from_json(const Json& j);

struct DrinfeldDouble {
    HopfData hopf;        // basis f_i ⋈ e_j at index i·n + j
    ExtensionData over_h;  // h ↦ ε ⋈ h
};

/// D(H) = H*ᶜᵒᵖ ⋈ H. Throws AxiomError when the result fails the Hopf axioms.
DrinfeldDouble drinfeld_double(const HopfData& h);

/// R ⊗_S R as a quotient of R ⊗ R (index a·N + b).
struct RelTensor {
    std::size_t ambient = 0;
    std::vector<std::size_t> coordinates;  // ambient indices kept as quotient basis
    EchelonForm relations{FieldSpec{}, 0};  // reduced span of r i(s) ⊗ r' − r ⊗ i(s) r'
    bool bimodule_verified = false;

    std::size_t dim() const { return coordinates.size(); }
    std::size_t relation_rank() const { return relations.rank(); }
    Vec project(std::span<const Scalar> x) const;
    Vec lift(std::span<const Scalar> q) const;
    Mat projection() const;
    bool in_relations(std::span<const Scalar> x) const;
};

RelTensor relative_tensor(const ExtensionData& ext);

struct ExtensionSeparability {
    Vec element;  // in R ⊗_S R coordinates
    Vec lifted;   // a representative in R ⊗ R
    std::vector<std::string> verified;  // "multiplication", "central"
};

/// e ∈ R ⊗_S R with m̄(e) = 1 and r e = e r for every basis r.
std::optional<ExtensionSeparability> separable_extension(const ExtensionData& ext);
bool double_separable_over_h(const HopfData& h);
/// D(H*) separable over H*, the dual counterpart used for ad-coinvariant integrals.
bool dual_double_separable(const HopfData& h);

}  // namespace hopfsmith

#endif  // HOPFSMITH_DOUBLES_HPP
