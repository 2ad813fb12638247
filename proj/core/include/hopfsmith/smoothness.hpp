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

#ifndef HOPFSMITH_SMOOTHNESS_HPP
#define HOPFSMITH_SMOOTHNESS_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/hopf.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

struct SectionCertificate {
    enum class Kind { fs_section, complete_fs_section, fs_retraction, complete_fs_retraction };
    Kind kind = Kind::fs_section;
    /// τ: (n·d) x d with row a·d + k holding the coefficient of e_a ⊗ b_k,
    /// or χ: d x (n·d) with column i·d + l for e_i ⊗ v_l.
    Mat matrix;
    std::vector<std::string> verified_conditions;
    /// Reduced constraint system; its free columns span all other solutions.
    std::shared_ptr<const EchelonForm> solution_space;

    bool verified(const std::string& condition) const;
};

std::string to_string(SectionCertificate::Kind k);

/// τ: H⁺ → H⊗H⁺ with τ(hx) = (h⊗1)τ(x) and m∘τ = id.
std::optional<SectionCertificate> find_fs_section(const HopfData& h);
/// Adds x1 S(x3) ⊗ τ(x2) = (coaction on H⊗H⁺)(τ(x)).
std::optional<SectionCertificate> find_complete_fs_section(const HopfData& h);
/// (ε⊗id)τ = 0 on the H⁺ basis, i.e. Im τ ⊆ H⁺⊗H⁺.
bool check_im_tau(const HopfData& h, const SectionCertificate& cert);

/// χ: H⊗H̄ → H̄, left colinear with χ(x1 ⊗ x̄2) = x̄.
std::optional<SectionCertificate> find_fs_retraction(const HopfData& h);
/// Adds ▷-equivariance.
std::optional<SectionCertificate> find_complete_fs_retraction(const HopfData& h);

/// Conditions (i), (ii), (iii) evaluated directly on a candidate map.
std::array<bool, 3> fs_section_conditions(const HopfData& h, const Mat& tau);
std::array<bool, 3> fs_retraction_conditions(const HopfData& h, const Mat& chi);

// Group algebra of the integers, on finitely supported coefficient sequences.
using LaurentElement = std::map<long, Scalar>;
using LaurentTensor = std::map<std::pair<long, long>, Scalar>;
/// Image of the basis vector gⁿ − gⁿ⁺¹ of the augmentation ideal.
using LaurentTau = std::function<LaurentTensor(long n)>;

/// gⁿ ⊗ (1 − g).
LaurentTensor laurent_standard_tau(long n);

struct LaurentWindowReport {
    bool linear = true;     // (i)
    bool splits = true;     // (ii)
    bool complete = true;   // (iii)
    bool holds() const { return linear && splits && complete; }
};

/// Multipliers g^a and basis vectors gⁿ − gⁿ⁺¹ with |a|, |n| ≤ window.
LaurentWindowReport laurent_window_report(long window, const LaurentTau& tau = laurent_standard_tau);
bool laurent_fs_section_window_check(long window);

}  // namespace hopfsmith

#endif  // HOPFSMITH_SMOOTHNESS_HPP
