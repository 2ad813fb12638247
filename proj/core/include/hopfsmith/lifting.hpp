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

#ifndef HOPFSMITH_LIFTING_HPP
#define HOPFSMITH_LIFTING_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/hopf.hpp"
#include "hopfsmith/serialize.hpp"
#include "hopfsmith/yd.hpp"

namespace hopfsmith {

class LiftError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Bimodule over an algebra: left[i], right[i] act by e_i on M.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Mat> left;
    std::vector<Mat> right;
};

/// Throws LiftError unless M is a unital bimodule over a.
void check_bimodule(const AlgebraData& a, const Bimodule& m);
Bimodule regular_bimodule(const AlgebraData& a);
/// K with a·k = χ(a) k = k·a for an algebra character χ.
Bimodule character_bimodule(const AlgebraData& a, const Vec& chi);
/// A ⊗ A with the outer actions.
Bimodule free_bimodule(const AlgebraData& a);

// Hochschild cochains: a 1-cochain is dim M x n, a 2-cochain dim M x n², a 3-cochain dim M x n³.
Mat hochschild_d1(const AlgebraData& a, const Bimodule& m, const Mat& h);
Mat hochschild_d2(const AlgebraData& a, const Bimodule& m, const Mat& c);
bool is_cocycle(const AlgebraData& a, const Bimodule& m, const Mat& c);
/// Columns are (row-major flattened) 2-cocycles resp. 2-coboundaries.
Mat cocycle_space(const AlgebraData& a, const Bimodule& m);
Mat coboundary_space(const AlgebraData& a, const Bimodule& m);
/// h with δh = c, or nullopt when [c] ≠ 0 in H². Throws LiftError when c is not a cocycle.
std::optional<Mat> hochschild_coboundary_solve(const AlgebraData& a, const Bimodule& m, const Mat& c);

/// σ T_a = T_e σ is imposed on every lift.
struct Intertwiner {
    Mat on_e;
    Mat on_a;
};

/// Right coactions of a common Hopf algebra on E and A.
struct Coactions {
    HopfData h;
    ComoduleCoaction on_e;
    ComoduleCoaction on_a;
};

struct SurjectionProblem {
    AlgebraData e;
    AlgebraData a;
    Mat pi;  // dim A x dim E
    SubspaceBasis kernel;
    std::optional<Coactions> coactions;
    std::vector<Intertwiner> constraints;
};

/// Validates π (surjective unital algebra map, nilpotent kernel) and fills in the kernel.
SurjectionProblem make_surjection(const AlgebraData& e, const AlgebraData& a, const Mat& pi);
/// E = A ⊕ M with (a, m)(a', m') = (aa', am' + ma' + c(a, a')); c = 0 when omitted.
SurjectionProblem square_zero_extension(const AlgebraData& a, const Bimodule& m,
                                        const std::optional<Mat>& cocycle = std::nullopt);

struct LiftStage {
    std::size_t r = 0;             // lifting through E/I^{r+1} → E/I^r
    std::size_t layer_dim = 0;     // dim I^r/I^{r+1}
    Mat section;                   // σ_{r+1}: A → E/I^{r+1}
};

struct Obstruction {
    std::size_t stage = 0;
    Bimodule layer;  // I^r/I^{r+1}
    Mat cocycle;     // the curvature in layer coordinates
    bool closed = false;
    std::string reason;  // "cohomology" or "constraints"
};

struct LiftCertificate {
    std::vector<LiftStage> stages;
    Mat section;  // dim E x dim A
    bool algebra_map = false;
    bool colinear = false;
    bool constraints_hold = false;
};

struct LiftOutcome {
    std::optional<LiftCertificate> certificate;
    std::optional<Obstruction> obstruction;
    explicit operator bool() const { return certificate.has_value(); }
};

LiftOutcome lift_algebra_section(const SurjectionProblem& p, bool colinear = false);
Json lift_to_json(const LiftOutcome& out);

/// Sub-Hopf algebra on the span of the given columns together with its inclusion.
struct SubHopf {
    HopfData hopf;
    Mat inclusion;  // dim E x dim H
};
SubHopf sub_hopf_algebra(const HopfData& e, const SubspaceBasis& s);

struct WeakProjection {
    Mat retraction;  // dim H x dim E
    bool retracts = false;
    bool coalgebra_map = false;
    bool left_linear = false;
    bool right_linear = false;
};

struct WeakProjectionOutcome {
    std::optional<WeakProjection> projection;
    std::optional<Obstruction> obstruction;
    explicit operator bool() const { return projection.has_value(); }
};

/// Left H-linear coalgebra retraction E → H of a Hopf subalgebra inclusion, found on the dual side.
/// bilinear also asks for right H-linearity. Throws LiftError when Corad(E) ⊄ H.
WeakProjectionOutcome weak_projection(const HopfData& e, const HopfData& h, const Mat& inclusion,
                                      bool bilinear = false);
Json weak_projection_to_json(const WeakProjectionOutcome& out);

}  // namespace hopfsmith

#endif  // HOPFSMITH_LIFTING_HPP
