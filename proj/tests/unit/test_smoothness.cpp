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
#include "hopfsmith/smoothness.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

std::vector<std::pair<std::string, FieldSpec>> grid() {
    std::vector<std::pair<std::string, FieldSpec>> out;
    for (FieldSpec f : {Q, F2, F3, F5})
        for (const auto& name : grid_preset_names()) out.emplace_back(name, f);
    out.emplace_back("taft:3:2", FieldSpec::prime(7));
    return out;
}

}  // namespace

TEST_CASE("fs-section on cyclic group algebras") {
    for (std::uint32_t c : {0u, 2u, 3u, 5u})
        for (std::size_t n = 1; n <= 6; ++n) {
            FieldSpec f = FieldSpec::with_characteristic(c);
            HopfData h = preset_group_algebra(cyclic_group(n), f);
            bool expected = c == 0 || n % c != 0;
            auto cert = find_fs_section(h);
            CAPTURE(n);
            CAPTURE(c);
            REQUIRE(cert.has_value() == expected);
            if (!cert) continue;
            CHECK(cert->kind == SectionCertificate::Kind::fs_section);
            CHECK(cert->verified("i"));
            CHECK(cert->verified("ii"));
            CHECK(check_im_tau(h, *cert));
            CHECK(cert->solution_space->consistent());
        }
}

TEST_CASE("one-dimensional Hopf algebra is trivially smooth") {
    HopfData k = preset_group_algebra(cyclic_group(1), Q);
    for (auto cert : {find_fs_section(k), find_complete_fs_section(k), find_fs_retraction(k),
                      find_complete_fs_retraction(k)}) {
        REQUIRE(cert.has_value());
        CHECK(cert->matrix.entries().empty());
        CHECK(cert->verified_conditions == std::vector<std::string>{"i", "ii", "iii"});
    }
    CHECK(check_im_tau(k, *find_fs_section(k)));
}

TEST_CASE("complete fs-section") {
    auto q = find_complete_fs_section(preset_group_algebra(cyclic_group(2), Q));
    REQUIRE(q.has_value());
    CHECK(q->kind == SectionCertificate::Kind::complete_fs_section);
    CHECK(q->verified("iii"));
    CHECK_FALSE(find_complete_fs_section(preset_group_algebra(cyclic_group(2), F2)).has_value());
}

TEST_CASE("image containment rejects a map violating H-linearity") {
    // H⁺ of KC2 is spanned by g - e; τ(g - e) = e ⊗ (g - e) splits but is not linear.
    HopfData h = preset_group_algebra(cyclic_group(2), Q);
    SubspaceBasis plus = augmentation_ideal(h);
    REQUIRE(plus.dim() == 1);
    Scalar scale = plus.basis(1, 0);  // b = scale (g - e)
    Mat tau(Q, 2, 1);
    tau(0, 0) = scale;
    auto conds = fs_section_conditions(h, tau);
    CHECK_FALSE(conds[0]);
    CHECK(conds[1]);
    SectionCertificate bad{SectionCertificate::Kind::fs_section, tau, {"ii"}, nullptr};
    CHECK_FALSE(check_im_tau(h, bad));
}

TEST_CASE("fs-retraction on function algebras") {
    CHECK(find_fs_retraction(preset_function_algebra(cyclic_group(2), Q)).has_value());
    CHECK_FALSE(find_fs_retraction(preset_function_algebra(cyclic_group(2), F2)).has_value());
    auto c = find_complete_fs_retraction(preset_function_algebra(cyclic_group(3), Q));
    REQUIRE(c.has_value());
    CHECK(c->verified_conditions == std::vector<std::string>{"i", "ii", "iii"});
}

TEST_CASE("integers: windowed fs-section") {
    CHECK(laurent_fs_section_window_check(1));
    CHECK(laurent_fs_section_window_check(8));
    auto corrupted = [](long n) {
        LaurentTensor t;
        t[{n, 0}] = Q.one();
        t[{n, 2}] = -Q.one();
        return t;
    };
    LaurentWindowReport rep = laurent_window_report(8, corrupted);
    CHECK_FALSE(rep.splits);
    CHECK_FALSE(rep.holds());
    CHECK_THROWS_AS(laurent_window_report(0), std::invalid_argument);
}

TEST_CASE("property: smoothness relations on the grid") {
    for (const auto& [name, f] : grid()) {
        CAPTURE(name);
        CAPTURE(f.characteristic());
        HopfData h = preset_by_name(name, f);
        HopfData d = dual_hopf(h);
        auto plain = find_fs_section(h);
        auto complete = find_complete_fs_section(h);
        auto rplain = find_fs_retraction(h);
        auto rcomplete = find_complete_fs_retraction(h);

        if (complete) CHECK(plain.has_value());
        if (rcomplete) CHECK(rplain.has_value());
        if (complete) {
            auto conds = fs_section_conditions(h, complete->matrix);
            CHECK((conds[0] && conds[1]));
        }
        if (plain) CHECK(check_im_tau(h, *plain));
        if (separability_idempotent(h)) CHECK(plain.has_value());
        if (ad_invariant_integral(h)) CHECK(plain.has_value() == complete.has_value());

        CHECK(rplain.has_value() == find_fs_section(d).has_value());
        CHECK(rcomplete.has_value() == find_complete_fs_section(d).has_value());
    }
}
