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

#ifndef HOPFSMITH_INTEGRALS_HPP
#define HOPFSMITH_INTEGRALS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/hopf.hpp"

namespace hopfsmith {

enum class Carrier { in_h, in_dual };

struct IntegralCertificate {
    Side side = Side::left;
    Carrier carrier = Carrier::in_h;
    Vec vector;  // t in H, or (λ(e_k))_k for a functional
    bool total = false;
    bool ad_invariant = false;
    bool ad_coinvariant = false;
    std::vector<std::string> verified;
};

struct SeparabilityCertificate {
    enum class Kind { idempotent_for_algebra, retraction_for_coalgebra };
    Kind kind = Kind::idempotent_for_algebra;
    Vec idempotent;  // e in H⊗H, index a * n + b
    Mat retraction;  // θ: H⊗H -> H, n x n²
    std::string route;  // "formula" or "search"
    std::vector<std::string> verified;
};

/// Basis of the left/right integrals in H or in H*.
SubspaceBasis integral_space(const HopfData& h, Side side, Carrier carrier);
bool is_integral(const HopfData& h, std::span<const Scalar> v, Side side, Carrier carrier);
/// An integral normalized to ε(t) = 1 resp. λ(1) = 1, if one exists.
std::optional<IntegralCertificate> total_integral(const HopfData& h, Carrier carrier, Side side = Side::left);
bool is_unimodular(const HopfData& h, Carrier carrier);

struct AdIntegralSearch {
    std::optional<IntegralCertificate> integral;
    std::size_t homogeneous_dim = 0;  // solutions of conditions (a)+(b) without the normalization
    std::size_t affine_nullity = 0;   // > 0 would mean non-uniqueness
};

/// λ ∈ H* with h1 λ(h2) = λ(h) 1, λ(h ▷ x) = ε(h) λ(x), λ(1) = 1.
AdIntegralSearch ad_invariant_search(const HopfData& h);
std::optional<IntegralCertificate> ad_invariant_integral(const HopfData& h);
/// t ∈ H with h t = ε(h) t, t1 S(t3) ⊗ t2 = 1 ⊗ t, ε(t) = 1.
AdIntegralSearch ad_coinvariant_search(const HopfData& h);
std::optional<IntegralCertificate> ad_coinvariant_integral(const HopfData& h);

/// Linearity of a functional under ▷, ◁, ▶, ◀ (in that order).
std::array<bool, 4> adjoint_linearity(const HopfData& h, std::span<const Scalar> lambda);

/// σ_t(1) = t1 ⊗ S(t2).
Vec sigma_from_integral(const HopfData& h, std::span<const Scalar> t);
/// m(e) = 1 and (h ⊗ 1) e = e (1 ⊗ h) for all basis h.
bool verify_separability_idempotent(const HopfData& h, std::span<const Scalar> e);
std::optional<Vec> blind_idempotent_search(const HopfData& h);

/// θ_λ(x ⊗ y) = x1 λ(x2 S(y)).
Mat theta_from_integral(const HopfData& h, std::span<const Scalar> lambda);
/// θ ∘ Δ = id and θ is left and right colinear.
bool verify_coseparability_retraction(const HopfData& h, const Mat& theta);
/// x1 λ(x2 S(y)) = λ(x S(y1)) y2 on all basis pairs.
bool left_integral_identity(const HopfData& h, std::span<const Scalar> lambda);
std::optional<Mat> blind_retraction_search(const HopfData& h);

struct SeparabilityRoutes {
    std::optional<IntegralCertificate> total;
    bool formula_verified = false;
    std::optional<Vec> formula_element;
    std::optional<Mat> formula_map;
    bool blind_found = false;
    bool blind_verified = false;
    bool agree() const { return total.has_value() == blind_found && (!total || formula_verified) && (!blind_found || blind_verified); }
};

SeparabilityRoutes separability_routes(const HopfData& h);
SeparabilityRoutes coseparability_routes(const HopfData& h);
/// Throws std::logic_error when the formula and search routes disagree.
std::optional<SeparabilityCertificate> separability_idempotent(const HopfData& h);
std::optional<SeparabilityCertificate> coseparability_retraction(const HopfData& h);

}  // namespace hopfsmith

#endif  // HOPFSMITH_INTEGRALS_HPP
