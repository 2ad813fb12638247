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

#ifndef HOPFSMITH_YD_HPP
#define HOPFSMITH_YD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/hopf.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

/// alpha(i, j, k): e_i · v_j (left) or v_j · e_i (right) = sum_k alpha(i, j, k) v_k.
struct ModuleAction {
    Side side = Side::left;
    std::size_t space_dim = 0;
    Tensor3 alpha;
};

/// rho(j, a, k): coefficient of e_a ⊗ v_k (left) or v_k ⊗ e_a (right) in the coaction of v_j.
struct ComoduleCoaction {
    Side side = Side::left;
    std::size_t space_dim = 0;
    Tensor3 rho;
};

enum class YDVariant { LL, RR, LR, RL };

struct YDStructure {
    ModuleAction action;
    ComoduleCoaction coaction;
    YDVariant variant = YDVariant::LL;
};

/// ▷ h1 x S(h2), ◁ S(h1) x h2, ▶ h2 x S̄(h1), ◀ S̄(h2) x h1, plus left/right multiplication.
enum class AdjointAction { left, right, left_bar, right_bar, left_regular, right_regular };
/// ^Hϱ h1 S(h3)⊗h2, ϱ^H h2⊗S(h1)h3, ϱ̄^H h2⊗h3 S̄(h1), ^Hϱ̄ S̄(h3)h1⊗h2, plus Δ read as either side.
enum class AdjointCoaction { left, right, right_bar, left_bar, left_regular, right_regular };

struct YDReport {
    bool holds = true;
    std::string failure;               // "action", "coaction" or "compatibility"
    std::vector<std::size_t> witness;  // basis indices (h, v), or a module/comodule axiom index tuple
};

ModuleAction adjoint_action(const HopfData& h, AdjointAction which);
ComoduleCoaction adjoint_coaction(const HopfData& h, AdjointCoaction which);

AxiomCheck check_module_action(const ModuleAction& m, const HopfData& h);
AxiomCheck check_comodule_coaction(const ComoduleCoaction& c, const HopfData& h);
/// The variant fixes the required sides: LL left/left, RR right/right, LR left/right, RL right/left.
YDReport check_yd(const YDStructure& s, const HopfData& h);

/// The eight pairings on H itself that are Yetter-Drinfeld by construction.
struct NamedYD {
    std::string name;
    YDStructure yd;
};
std::vector<NamedYD> canonical_yd_structures(const HopfData& h);

/// H⁺ with left multiplication and x ↦ x1 S(x3) ⊗ x2, in the coordinates of augmentation_ideal(h).
YDStructure h_plus_yd(const HopfData& h);
/// H̄ with the induced ▷ and x̄ ↦ x1 ⊗ x̄2, in the coordinates of unit_cokernel(h).
YDStructure h_bar_yd(const HopfData& h);
/// K with h·1 = ε(h) and 1 ↦ 1_H ⊗ 1.
YDStructure trivial_yd(const HopfData& h, YDVariant v = YDVariant::LL);

/// Does F (dim W x dim V) intertwine both the actions and the coactions?
bool is_yd_morphism(const Mat& f, const YDStructure& v, const YDStructure& w, const HopfData& h);
/// Appends the intertwining equations for an unknown F, stored row-major from unknown `offset` on.
void add_yd_morphism_equations(LinearSystem& sys, std::size_t offset, const YDStructure& v, const YDStructure& w,
                               const HopfData& h);

}  // namespace hopfsmith

#endif  // HOPFSMITH_YD_HPP
