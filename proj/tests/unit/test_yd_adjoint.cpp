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

#include "doctest.h"
#include "hopfsmith/integrals.hpp"
#include "hopfsmith/presets.hpp"
#include "hopfsmith/yd.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<std::pair<std::string, FieldSpec>> instances() {
    std::vector<std::pair<std::string, FieldSpec>> out;
    for (FieldSpec f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
        for (const auto& name : grid_preset_names()) out.emplace_back(name, f);
    out.emplace_back("taft:3:2", FieldSpec::prime(7));
    return out;
}

}  // namespace

TEST_CASE("adjoint action of a group algebra is conjugation") {
    GroupTable s3 = symmetric_group_s3();
    HopfData h = preset_group_algebra(s3, Q);
    ModuleAction ad = adjoint_action(h, AdjointAction::left);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t x = 0; x < 6; ++x)
            for (std::size_t k = 0; k < 6; ++k)
                CHECK(ad.alpha(g, x, k).is_one() == (k == s3.table[s3.table[g][x]][s3.inverse[g]]));
    CHECK(check_module_action(ad, h).passed);
}

TEST_CASE("cocommutative: barred and unbarred structures coincide") {
    for (const char* name : {"group:S3", "group:Q8", "group:C4"}) {
        HopfData h = preset_by_name(name, Q);
        CHECK(adjoint_action(h, AdjointAction::left).alpha == adjoint_action(h, AdjointAction::left_bar).alpha);
        CHECK(adjoint_action(h, AdjointAction::right).alpha == adjoint_action(h, AdjointAction::right_bar).alpha);
        Tensor3 first = adjoint_coaction(h, AdjointCoaction::left).rho;
        for (auto c : {AdjointCoaction::right, AdjointCoaction::right_bar, AdjointCoaction::left_bar})
            CHECK(adjoint_coaction(h, c).rho == first);
    }
    HopfData k = preset_group_algebra(cyclic_group(1), Q);
    CHECK(adjoint_action(k, AdjointAction::left).alpha(0, 0, 0).is_one());
    CHECK(adjoint_coaction(k, AdjointCoaction::left).rho(0, 0, 0).is_one());
}

TEST_CASE("adjoint coactions on group and function algebras") {
    GroupTable s3 = symmetric_group_s3();
    HopfData kg = preset_group_algebra(s3, Q);
    ComoduleCoaction c = adjoint_coaction(kg, AdjointCoaction::left);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) CHECK(c.rho(g, a, b).is_one() == (a == s3.identity && b == g));

    // On K^G: δ_a ⊗ δ_b appears in the coaction of δ_g exactly when a b a⁻¹ = g.
    HopfData kgd = preset_function_algebra(s3, Q);
    ComoduleCoaction cd = adjoint_coaction(kgd, AdjointCoaction::left);
    CHECK(check_comodule_coaction(cd, kgd).passed);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b)
                CHECK(cd.rho(g, a, b).is_one() == (s3.table[s3.table[a][b]][s3.inverse[a]] == g));
}

TEST_CASE("canonical Yetter-Drinfeld structures on H") {
    for (const auto& [name, f] : instances()) {
        HopfData h = preset_by_name(name, f);
        for (const auto& yd : canonical_yd_structures(h)) {
            CAPTURE(name);
            CAPTURE(f.name());
            CAPTURE(yd.name);
            YDReport r = check_yd(yd.yd, h);
            CHECK(r.holds);
        }
    }
}

TEST_CASE("mixed pairing (ad action, coadjoint coaction) on H4") {
    HopfData h4 = preset_sweedler(Q);
    YDStructure mixed{adjoint_action(h4, AdjointAction::left), adjoint_coaction(h4, AdjointCoaction::left), YDVariant::LL};
    YDReport r = check_yd(mixed, h4);
    CHECK_FALSE(r.holds);
    CHECK(r.failure == "compatibility");
    CHECK(r.witness.size() == 2);
}

TEST_CASE("H+ and H-bar structures") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    YDStructure hp = h_plus_yd(c2);
    CHECK(hp.action.space_dim == 1);
    // Coaction 1 ⊗ (e - g): only the e-factor appears.
    CHECK(hp.coaction.rho(0, 0, 0).is_one());
    CHECK(hp.coaction.rho(0, 1, 0).is_zero());
    for (const auto& [name, f] : instances()) {
        HopfData h = preset_by_name(name, f);
        CAPTURE(name);
        CAPTURE(f.name());
        YDStructure p = h_plus_yd(h), b = h_bar_yd(h);
        CHECK(p.action.space_dim == h.dim() - 1);
        CHECK(b.action.space_dim == h.dim() - 1);
        CHECK(check_yd(p, h).holds);
        CHECK(check_yd(b, h).holds);
    }
}

TEST_CASE("counit and unit are Yetter-Drinfeld morphisms") {
    for (const auto& [name, f] : instances()) {
        HopfData h = preset_by_name(name, f);
        const std::size_t n = h.dim();
        auto canon = canonical_yd_structures(h);
        YDStructure k = trivial_yd(h);
        CHECK(check_yd(k, h).holds);
        Mat eps(f, 1, n, h.coa.counit);
        Mat unit(f, n, 1, h.alg.unit);
        const YDStructure& mult_coad = canon[4].yd;
        const YDStructure& ad_delta = canon[0].yd;
        CHECK(is_yd_morphism(eps, mult_coad, k, h));
        CHECK(is_yd_morphism(unit, k, ad_delta, h));
    }
}

TEST_CASE("ad-invariant integral as a retraction of the unit") {
    for (const auto& [name, f] : instances()) {
        HopfData h = preset_by_name(name, f);
        const std::size_t n = h.dim();
        CAPTURE(name);
        CAPTURE(f.name());
        YDStructure ad_delta = canonical_yd_structures(h)[0].yd;
        LinearSystem sys(f, n);
        add_yd_morphism_equations(sys, 0, ad_delta, trivial_yd(h), h);
        Equation norm(f);
        for (std::size_t k = 0; k < n; ++k) norm.add(k, h.alg.unit[k]);
        norm.add_rhs(f.one());
        sys.add(norm);
        auto sol = solve_affine(sys);
        auto direct = ad_invariant_integral(h);
        REQUIRE(sol.has_value() == direct.has_value());
        if (sol) CHECK(sol->particular == direct->vector);
    }
}
