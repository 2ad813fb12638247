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
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/presets.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Mat col(FieldSpec f, std::initializer_list<long> v) {
    Mat m(f, v.size(), 1);
    std::size_t r = 0;
    for (long x : v) m(r++, 0) = f.from_int(x);
    return m;
}

Vec delta_e(FieldSpec f, std::size_t n) { return unit_vec(f, n, 0); }

std::vector<std::pair<std::string, FieldSpec>> grid() {
    std::vector<std::pair<std::string, FieldSpec>> out;
    for (FieldSpec f : {Q, F2, F3, FieldSpec::prime(5)})
        for (const auto& name : grid_preset_names()) out.emplace_back(name, f);
    out.emplace_back("taft:3:2", FieldSpec::prime(7));
    return out;
}

}  // namespace

TEST_CASE("integral spaces") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (FieldSpec f : {Q, F2, F3}) {
            HopfData h = preset_group_algebra(cyclic_group(n), f);
            SubspaceBasis s = integral_space(h, Side::left, Carrier::in_h);
            REQUIRE(s.dim() == 1);
            CHECK(same_span(s.basis, Mat(f, n, 1, Vec(n, f.one()))));
            CHECK(is_unimodular(h, Carrier::in_h));
        }
    HopfData h4 = preset_sweedler(Q);
    SubspaceBasis left = integral_space(h4, Side::left, Carrier::in_h);
    SubspaceBasis right = integral_space(h4, Side::right, Carrier::in_h);
    CHECK(left.dim() == 1);
    CHECK(right.dim() == 1);
    CHECK(same_span(left.basis, col(Q, {0, 0, 1, 1})));    // x + gx
    CHECK(same_span(right.basis, col(Q, {0, 0, 1, -1})));  // x - gx
    CHECK_FALSE(is_unimodular(h4, Carrier::in_h));

    HopfData k = preset_group_algebra(cyclic_group(1), Q);
    CHECK(integral_space(k, Side::left, Carrier::in_h).dim() == 1);
    CHECK(total_integral(k, Carrier::in_h)->vector == Vec{Q.one()});
    CHECK(is_unimodular(k, Carrier::in_h));
}

TEST_CASE("integrals in H* are integrals of the dual") {
    for (const auto& [name, f] : grid()) {
        HopfData h = preset_by_name(name, f);
        HopfData d = dual_hopf(h);
        for (Side s : {Side::left, Side::right})
            CHECK(same_span(integral_space(h, s, Carrier::in_dual).basis, integral_space(d, s, Carrier::in_h).basis));
    }
}

TEST_CASE("total integrals") {
    auto t = total_integral(preset_group_algebra(cyclic_group(2), Q), Carrier::in_h);
    REQUIRE(t);
    CHECK(t->vector == Vec{Q.from_fraction(1, 2), Q.from_fraction(1, 2)});
    CHECK_FALSE(total_integral(preset_group_algebra(cyclic_group(3), F3), Carrier::in_h));
    auto te = total_integral(preset_function_algebra(cyclic_group(2), Q), Carrier::in_h);
    REQUIRE(te);
    CHECK(te->vector == delta_e(Q, 2));
    CHECK_FALSE(total_integral(preset_sweedler(Q), Carrier::in_h));
    CHECK_FALSE(total_integral(preset_sweedler(Q), Carrier::in_dual));
}

TEST_CASE("ad-invariant integral") {
    for (FieldSpec f : {Q, F2, F3, FieldSpec::prime(5)})
        for (const char* g : {"C1", "C2", "C3", "C4", "C6", "S3", "Q8"}) {
            HopfData h = preset_group_algebra(group_by_name(g), f);
            AdIntegralSearch s = ad_invariant_search(h);
            REQUIRE(s.integral);
            CHECK(s.integral->vector == delta_e(f, h.dim()));
            CHECK(s.homogeneous_dim == 1);
            CHECK(s.affine_nullity == 0);
            CHECK(s.integral->verified == std::vector<std::string>{"a", "b", "c"});
        }
    CHECK_FALSE(ad_invariant_integral(preset_sweedler(Q)));
    CHECK(ad_invariant_integral(preset_group_algebra(cyclic_group(1), Q))->vector == Vec{Q.one()});
}

TEST_CASE("ad-coinvariant integral") {
    for (FieldSpec f : {Q, F2, F3})
        for (const char* g : {"C2", "C3", "S3"}) {
            auto t = ad_coinvariant_integral(preset_function_algebra(group_by_name(g), f));
            REQUIRE(t);
            CHECK(t->vector == delta_e(f, t->vector.size()));
        }
    auto c2 = ad_coinvariant_integral(preset_group_algebra(cyclic_group(2), Q));
    REQUIRE(c2);
    CHECK(c2->vector == Vec{Q.from_fraction(1, 2), Q.from_fraction(1, 2)});
    CHECK_FALSE(ad_coinvariant_integral(preset_group_algebra(cyclic_group(2), F2)));
}

TEST_CASE("property: ad-invariant integral is the normalized total integral of H*") {
    for (const auto& [name, f] : grid()) {
        HopfData h = preset_by_name(name, f);
        auto ad = ad_invariant_integral(h);
        if (!ad) continue;
        auto tot = total_integral(h, Carrier::in_dual);
        REQUIRE(tot);
        CHECK(tot->vector == ad->vector);
    }
}

TEST_CASE("property: ad-coinvariant integral of h equals ad-invariant integral of the dual") {
    for (const auto& [name, f] : grid()) {
        HopfData h = preset_by_name(name, f);
        CAPTURE(name);
        CAPTURE(f.name());
        auto co = ad_coinvariant_integral(h);
        auto inv = ad_invariant_integral(dual_hopf(h));
        REQUIRE(co.has_value() == inv.has_value());
        if (co) CHECK(co->vector == inv->vector);
    }
}

TEST_CASE("separability idempotent") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    auto e = separability_idempotent(c2);
    REQUIRE(e);
    Scalar half = Q.from_fraction(1, 2);
    CHECK(e->idempotent == Vec{half, Q.zero(), Q.zero(), half});
    CHECK_FALSE(separability_idempotent(preset_group_algebra(cyclic_group(3), F3)));
    SeparabilityRoutes r = separability_routes(preset_group_algebra(cyclic_group(3), F3));
    CHECK_FALSE(r.total);
    CHECK_FALSE(r.blind_found);
    CHECK(separability_idempotent(preset_group_algebra(cyclic_group(1), Q))->idempotent == Vec{Q.one()});
}

TEST_CASE("coseparability retraction") {
    for (FieldSpec f : {Q, F2, F3})
        for (const char* g : {"C2", "C3", "S3"}) {
            HopfData h = preset_group_algebra(group_by_name(g), f);
            auto c = coseparability_retraction(h);
            REQUIRE(c);
            // θ(g ⊗ k) = g when g = k, else 0.
            const std::size_t n = h.dim();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    CHECK(c->retraction.col(a * n + b) == (a == b ? unit_vec(f, n, a) : zero_vec(f, n)));
        }
    CHECK_FALSE(coseparability_retraction(preset_sweedler(Q)));
    auto k = coseparability_retraction(preset_group_algebra(cyclic_group(1), Q));
    REQUIRE(k);
    CHECK(k->retraction == Mat::identity(Q, 1));
}

TEST_CASE("property: integral and search routes agree on the grid") {
    for (const auto& [name, f] : grid()) {
        HopfData h = preset_by_name(name, f);
        CAPTURE(name);
        CAPTURE(f.name());
        SeparabilityRoutes s = separability_routes(h);
        CHECK(s.agree());
        SeparabilityRoutes c = coseparability_routes(h);
        CHECK(c.agree());
        if (s.formula_element) CHECK(verify_separability_idempotent(h, *s.formula_element));
    }
}

TEST_CASE("property: four adjoint linearities agree for total integrals") {
    for (const auto& [name, f] : grid()) {
        HopfData h = preset_by_name(name, f);
        auto lambda = total_integral(h, Carrier::in_dual);
        if (!lambda) continue;
        auto flags = adjoint_linearity(h, lambda->vector);
        CHECK(flags[0] == flags[1]);
        CHECK(flags[0] == flags[2]);
        CHECK(flags[0] == flags[3]);
    }
}
