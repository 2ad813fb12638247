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
#include "hopfsmith/constructions.hpp"
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/presets.hpp"
#include "hopfsmith/serialize.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<FieldSpec> grid_fields() {
    return {Q, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::prime(7)};
}

Mat column(FieldSpec f, std::initializer_list<long> v) {
    Mat m(f, v.size(), 1);
    std::size_t r = 0;
    for (long x : v) m(r++, 0) = f.from_int(x);
    return m;
}

}  // namespace

TEST_CASE("check_algebra examples") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    CHECK(check_algebra(c2.alg).all_passed());

    AlgebraData broken = c2.alg;
    broken.mult(0, 1, 1) = Q.from_int(2);  // e*g = 2g
    AxiomReport rep = check_algebra(broken);
    CHECK_FALSE(rep.passed("associativity"));
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->witness.size() == 3);

    HopfData k = preset_group_algebra(cyclic_group(1), Q);
    CHECK(check_algebra(k.alg).all_passed());
    CHECK(check_hopf(k).all_passed());

    AlgebraData mis = c2.alg;
    mis.unit.pop_back();
    CHECK_THROWS_AS(check_algebra(mis), DimensionError);
}

TEST_CASE("check_hopf examples") {
    CHECK(check_hopf(preset_sweedler(Q)).all_passed());
    for (FieldSpec f : grid_fields()) CHECK(check_hopf(preset_group_algebra(cyclic_group(3), f)).all_passed());

    HopfData h4 = preset_sweedler(Q);
    h4.antipode = Mat::identity(Q, 4);
    h4.antipode_inverse.reset();
    AxiomReport rep = check_hopf(h4);
    CHECK(rep.passed("associativity"));
    CHECK(rep.passed("comult_multiplicative"));
    CHECK_FALSE(rep.passed("antipode_left"));
}

TEST_CASE("group presets") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    CHECK(c2.dim() == 2);
    CHECK(c2.antipode == Mat::identity(Q, 2));
    HopfData c3 = preset_group_algebra(cyclic_group(3), FieldSpec::prime(2));
    CHECK(c3.dim() == 3);
    CHECK(check_hopf(c3).all_passed());

    std::vector<std::vector<std::size_t>> bad{{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
    CHECK_THROWS_AS(make_group("bad", bad), GroupError);
    std::vector<std::vector<std::size_t>> nonassoc{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS_AS(make_group("bad", nonassoc), GroupError);
    CHECK_THROWS_AS(group_by_name("C13"), PresetError);

    GroupTable s3 = symmetric_group_s3(), q8 = quaternion_group();
    CHECK(s3.order() == 6);
    CHECK(q8.order() == 8);
    // Q8 has a unique element of order 2 and S3 is non-abelian.
    std::size_t involutions = 0;
    for (std::size_t a = 0; a < 8; ++a)
        if (a != q8.identity && q8.table[a][a] == q8.identity) ++involutions;
    CHECK(involutions == 1);
    CHECK(s3.table[1][2] != s3.table[2][1]);
}

TEST_CASE("function algebra presets") {
    HopfData kc2 = preset_function_algebra(cyclic_group(2), Q);
    // Idempotent basis: d_a d_b = [a == b] d_a, unit d_e + d_g.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(kc2.alg.mult(a, b, k) == ((a == b && b == k) ? Q.one() : Q.zero()));
    CHECK(kc2.alg.unit == Vec{Q.one(), Q.one()});
    // Delta(d_g) = sum_{uv = g} d_u ⊗ d_v.
    GroupTable c3 = cyclic_group(3);
    HopfData kc3 = preset_function_algebra(c3, FieldSpec::prime(3));
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = 0; v < 3; ++v)
                CHECK(kc3.coa.comult(g, u, v).is_one() == (c3.table[u][v] == g));
    CHECK(check_hopf(kc3).all_passed());
    HopfData k1 = preset_function_algebra(cyclic_group(1), Q);
    CHECK(k1.dim() == 1);
    CHECK(k1.same_structure(preset_group_algebra(cyclic_group(1), Q)));
}

TEST_CASE("Sweedler and Taft presets") {
    HopfData h4 = preset_sweedler(Q);
    CHECK(h4.dim() == 4);
    HopfData t2 = preset_taft(2, Q.from_int(-1));
    CHECK(t2.alg.mult == h4.alg.mult);
    CHECK(t2.coa.comult == h4.coa.comult);
    CHECK(t2.antipode == h4.antipode);
    CHECK(t2.coa.counit == h4.coa.counit);

    FieldSpec f7 = FieldSpec::prime(7);
    HopfData t3 = preset_taft(3, f7.from_int(2));
    CHECK(t3.dim() == 9);
    CHECK(check_hopf(t3).all_passed());
    CHECK(t3.antipode * t3.antipode != Mat::identity(f7, 9));
    CHECK(invert(t3.antipode));
    CHECK_THROWS_AS(preset_taft(3, f7.from_int(1)), PresetError);
    CHECK_THROWS_AS(preset_taft(3, f7.from_int(6)), PresetError);
    CHECK_THROWS_AS(preset_taft(2, FieldSpec::prime(2).one()), PresetError);
    for (FieldSpec f : grid_fields()) CHECK(check_hopf(preset_sweedler(f)).all_passed());
}

TEST_CASE("dual_hopf") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    HopfData d = dual_hopf(c2);
    HopfData kc2 = preset_function_algebra(cyclic_group(2), Q);
    CHECK(d.same_structure(kc2));
    CHECK(double_dual_matches(c2, dual_hopf(d)));
    HopfData dh4 = dual_hopf(preset_sweedler(Q));
    CHECK(check_hopf(dh4).all_passed());

    HopfData bad = preset_sweedler(Q);
    bad.antipode = Mat::identity(Q, 4);
    bad.antipode_inverse.reset();
    CHECK_THROWS_AS(dual_hopf(bad), AxiomError);
}

TEST_CASE("op_cop") {
    HopfData c3 = preset_group_algebra(cyclic_group(3), Q);
    CHECK(op_cop(c3, true, true).same_structure(c3));
    // Non-abelian: H^{op,cop} differs entrywise, S is unchanged and S itself is the isomorphism.
    HopfData s3 = preset_group_algebra(symmetric_group_s3(), Q);
    HopfData both = op_cop(s3, true, true);
    CHECK_FALSE(both.same_structure(s3));
    CHECK(both.antipode == s3.antipode);
    CHECK(check_hopf(both).all_passed());
    AlgebraOps a(s3.alg), b(both.alg);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(s3.antipode * a.mul(unit_vec(Q, 6, i), unit_vec(Q, 6, j)) ==
                  b.mul(s3.antipode.col(i), s3.antipode.col(j)));
    HopfData h4 = preset_sweedler(Q);
    HopfData cop = op_cop(h4, false, true);
    CHECK(check_hopf(cop).all_passed());
    CHECK(cop.antipode == *invert(h4.antipode));
    CHECK(check_hopf(op_cop(h4, true, false)).all_passed());
    CHECK(op_cop(h4, false, false).same_structure(h4));

    HopfData singular = h4;
    singular.antipode = Mat(Q, 4, 4);
    singular.antipode_inverse.reset();
    CHECK_THROWS_AS(op_cop(singular, true, false), std::domain_error);
}

TEST_CASE("augmentation ideal and unit cokernel") {
    HopfData c2 = preset_group_algebra(cyclic_group(2), Q);
    SubspaceBasis hp = augmentation_ideal(c2);
    CHECK(hp.dim() == 1);
    CHECK(same_span(hp.basis, column(Q, {1, -1})));

    HopfData h4 = preset_sweedler(Q);
    SubspaceBasis hp4 = augmentation_ideal(h4);
    Mat expect(Q, 4, 3);
    expect.set_col(0, column(Q, {1, -1, 0, 0}).col(0));
    expect.set_col(1, column(Q, {0, 0, 1, 0}).col(0));
    expect.set_col(2, column(Q, {0, 0, 0, 1}).col(0));
    CHECK(same_span(hp4.basis, expect));

    for (const auto& name : grid_preset_names()) {
        HopfData h = preset_by_name(name, Q);
        CHECK(augmentation_ideal(h).dim() == h.dim() - 1);
        QuotientSpace bar = unit_cokernel(h);
        CHECK(bar.dim() == h.dim() - 1);
        CHECK(bar.projection * bar.section == Mat::identity(Q, h.dim() - 1));
        CHECK(is_zero(bar.projection * h.alg.unit));
        Mat coords = augmentation_ideal(h).coordinates();
        CHECK(coords * augmentation_ideal(h).basis == Mat::identity(Q, h.dim() - 1));
    }
}

TEST_CASE("property: presets are Hopf algebras over every admissible field") {
    for (FieldSpec f : grid_fields()) {
        for (const auto& name : grid_preset_names()) {
            CAPTURE(name);
            CAPTURE(f.name());
            HopfData h = preset_by_name(name, f);
            CHECK(check_hopf(h).all_passed());
            CHECK(double_dual_matches(h, dual_hopf(dual_hopf(h))));
            CoalgebraOps coa(h.coa);
            CHECK(coa.eps(h.alg.unit).is_one());
            CHECK(coa.comul(h.alg.unit) == kron(h.alg.unit, h.alg.unit));
            if (name.rfind("group:", 0) == 0) CHECK(h.antipode * h.antipode == Mat::identity(f, h.dim()));
        }
    }
    HopfData t3 = preset_by_name("taft:3:2", FieldSpec::prime(7));
    CHECK(check_hopf(t3).all_passed());
}

TEST_CASE("serialization round trip") {
    for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
        for (const auto& name : grid_preset_names()) {
            HopfData h = preset_by_name(name, f);
            HopfData back = parse_hopf(dump_sorted(hopf_to_json(h)));
            CHECK(back.same_structure(h));
            CHECK(back.basis == h.basis);
        }
    }
    Json j = hopf_to_json(preset_sweedler(Q));
    j.erase("unit");
    j.erase("antipode_inverse");
    HopfData solved = hopf_from_json(j);
    CHECK(solved.alg.unit == preset_sweedler(Q).alg.unit);

    CHECK_THROWS_AS(parse_hopf("{\"dim\": 2"), FormatError);
    CHECK_THROWS_AS(parse_hopf("{\"field\": {\"char\": 4}, \"dim\": 1}"), FormatError);
    Json short_mult = hopf_to_json(preset_sweedler(Q));
    short_mult["mult"].erase(0);
    CHECK_THROWS_AS(hopf_from_json(short_mult), FormatError);
}
