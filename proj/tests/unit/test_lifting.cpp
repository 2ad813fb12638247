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

#include <random>

#include "doctest.h"
#include "hopfsmith/filtration.hpp"
#include "hopfsmith/lifting.hpp"
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/presets.hpp"
#include "hopfsmith/smoothness.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Mat random_mat(FieldSpec f, std::size_t r, std::size_t c, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(coef(rng));
    return m;
}

AlgebraData cyclic(std::size_t n, FieldSpec f) { return preset_group_algebra(cyclic_group(n), f).alg; }

Bimodule trivial_module(const HopfData& h) { return character_bimodule(h.alg, h.coa.counit); }

std::size_t h2_dim(const AlgebraData& a, const Bimodule& m) {
    return cocycle_space(a, m).cols() - coboundary_space(a, m).cols();
}

// Right regular coaction on A, extended to A ⊕ A by acting on both summands.
Coactions doubled_regular(const HopfData& h) {
    const std::size_t n = h.dim();
    ComoduleCoaction on_a = adjoint_coaction(h, AdjointCoaction::right_regular);
    ComoduleCoaction on_e{Side::right, 2 * n, Tensor3(h.field(), 2 * n, n, 2 * n)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                on_e.rho(j, a, k) = on_a.rho(j, a, k);
                on_e.rho(n + j, a, n + k) = on_a.rho(j, a, k);
            }
    return Coactions{h, on_e, on_a};
}

void check_certificate(const SurjectionProblem& p, const LiftCertificate& c) {
    AlgebraOps ea(p.e), aa(p.a);
    CHECK(p.pi * c.section == Mat::identity(p.a.field, p.a.dim));
    for (std::size_t i = 0; i < p.a.dim; ++i)
        for (std::size_t j = 0; j < p.a.dim; ++j) {
            Vec ij = aa.mul(unit_vec(p.a.field, p.a.dim, i), unit_vec(p.a.field, p.a.dim, j));
            CHECK(c.section * ij == ea.mul(c.section.col(i), c.section.col(j)));
        }
    CHECK(c.section * p.a.unit == p.e.unit);
}

}  // namespace

TEST_CASE("hochschild complex") {
    std::mt19937 rng(7);
    for (FieldSpec f : {Q, F2, F3}) {
        HopfData h = preset_by_name("group:C3", f);
        for (const Bimodule& m : {regular_bimodule(h.alg), trivial_module(h), free_bimodule(h.alg)}) {
            check_bimodule(h.alg, m);
            Mat x = random_mat(f, m.dim, h.dim(), rng);
            Mat c = hochschild_d1(h.alg, m, x);
            CHECK(hochschild_d2(h.alg, m, c).is_zero());
            auto back = hochschild_coboundary_solve(h.alg, m, c);
            REQUIRE(back);
            CHECK(hochschild_d1(h.alg, m, *back) == c);
            CHECK(hochschild_d1(h.alg, m, *back - x).is_zero());
        }
    }

    HopfData s3 = preset_by_name("group:S3", Q);
    Bimodule reg = regular_bimodule(s3.alg);
    Mat c = hochschild_d1(s3.alg, reg, random_mat(Q, 6, 6, rng));
    Mat bent = c;
    bent(0, 7) = bent(0, 7) + Q.one();
    CHECK_FALSE(is_cocycle(s3.alg, reg, bent));
    CHECK_THROWS_AS(hochschild_coboundary_solve(s3.alg, reg, bent), LiftError);
}

TEST_CASE("second cohomology") {
    HopfData c2q = preset_by_name("group:C2", Q);
    for (const Bimodule& m : {regular_bimodule(c2q.alg), trivial_module(c2q), free_bimodule(c2q.alg),
                              character_bimodule(c2q.alg, {Q.one(), -Q.one()})}) {
        CHECK(h2_dim(c2q.alg, m) == 0);
        Mat z = cocycle_space(c2q.alg, m);
        for (std::size_t k = 0; k < z.cols(); ++k)
            CHECK(hochschild_coboundary_solve(c2q.alg, m, Mat(Q, m.dim, 4, z.col(k))));
    }

    // H²(C_n, F_p) with trivial coefficients is F_p when p | n; free bimodules are acyclic.
    HopfData c2 = preset_by_name("group:C2", F2);
    Bimodule k = trivial_module(c2);
    CHECK(h2_dim(c2.alg, k) == 1);
    CHECK(h2_dim(c2.alg, free_bimodule(c2.alg)) == 0);
    Mat z = cocycle_space(c2.alg, k);
    bool found = false;
    for (std::size_t i = 0; i < z.cols(); ++i)
        found = found || !hochschild_coboundary_solve(c2.alg, k, Mat(F2, 1, 4, z.col(i)));
    CHECK(found);

    CHECK(h2_dim(cyclic(3, F3), trivial_module(preset_by_name("group:C3", F3))) == 1);
    CHECK(h2_dim(cyclic(3, F2), trivial_module(preset_by_name("group:C3", F2))) == 0);
}

TEST_CASE("square-zero sections") {
    HopfData h = preset_by_name("group:C2", Q);
    SurjectionProblem p = square_zero_extension(h.alg, regular_bimodule(h.alg));
    CHECK(p.kernel.dim() == 2);
    LiftOutcome out = lift_algebra_section(p);
    REQUIRE(out);
    check_certificate(p, *out.certificate);
    CHECK(out.certificate->stages.size() == 1);
    CHECK(out.certificate->stages[0].layer_dim == 2);
    CHECK(lift_to_json(out)["holds"] == true);

    p.coactions = doubled_regular(h);
    LiftOutcome col = lift_algebra_section(p, true);
    REQUIRE(col);
    check_certificate(p, *col.certificate);
    CHECK(col.certificate->colinear);
    const Mat& s = col.certificate->section;
    for (std::size_t a = 0; a < 2; ++a) {
        Mat te(Q, 4, 4), ta(Q, 2, 2);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) te(k, j) = p.coactions->on_e.rho(j, a, k);
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) ta(k, j) = p.coactions->on_a.rho(j, a, k);
        CHECK(s * ta == te * s);
    }

    Mat twist = cocycle_space(h.alg, regular_bimodule(h.alg));
    for (std::size_t k = 0; k < twist.cols(); ++k) {
        SurjectionProblem t = square_zero_extension(h.alg, regular_bimodule(h.alg), Mat(Q, 2, 4, twist.col(k)));
        LiftOutcome lt = lift_algebra_section(t);
        REQUIRE(lt);
        check_certificate(t, *lt.certificate);
    }

    CHECK_THROWS_AS(lift_algebra_section(square_zero_extension(h.alg, regular_bimodule(h.alg)), true), LiftError);
}

TEST_CASE("cyclic surjection over F2 is obstructed") {
    AlgebraData c4 = cyclic(4, F2), c2 = cyclic(2, F2);
    Mat pi(F2, 2, 4);
    for (std::size_t k = 0; k < 4; ++k) pi(k % 2, k) = F2.one();
    SurjectionProblem p = make_surjection(c4, c2, pi);
    CHECK(p.kernel.dim() == 2);
    LiftOutcome out = lift_algebra_section(p);
    REQUIRE_FALSE(out);
    REQUIRE(out.obstruction);
    const Obstruction& o = *out.obstruction;
    CHECK(o.stage == 1);
    CHECK(o.reason == "cohomology");
    CHECK(o.closed);
    CHECK(is_cocycle(c2, o.layer, o.cocycle));
    CHECK_FALSE(hochschild_coboundary_solve(c2, o.layer, o.cocycle));
    Json j = lift_to_json(out);
    CHECK(j["holds"] == false);
    CHECK(j["obstruction"]["stage"] == 1);

    // Over Q the kernel is spanned by idempotent combinations and is not nilpotent.
    Mat piq(Q, 2, 4);
    for (std::size_t k = 0; k < 4; ++k) piq(k % 2, k) = Q.one();
    CHECK_THROWS_AS(make_surjection(cyclic(4, Q), cyclic(2, Q), piq), LiftError);
}

TEST_CASE("surjection validation and identity") {
    for (FieldSpec f : {Q, F2}) {
        AlgebraData a = preset_by_name("group:S3", f).alg;
        SurjectionProblem p = make_surjection(a, a, Mat::identity(f, 6));
        LiftOutcome out = lift_algebra_section(p);
        REQUIRE(out);
        CHECK(out.certificate->stages.empty());
        CHECK(out.certificate->section == Mat::identity(f, 6));
    }
    AlgebraData c2 = cyclic(2, Q);
    Mat bad(Q, 2, 2);
    bad(0, 0) = Q.one();
    CHECK_THROWS_AS(make_surjection(c2, c2, bad), LiftError);
    Mat swap(Q, 2, 2);
    swap(0, 1) = swap(1, 0) = Q.one();
    CHECK_THROWS_AS(make_surjection(c2, c2, swap), LiftError);
}

TEST_CASE("twisted square-zero extensions match fs-sections") {
    for (FieldSpec f : {Q, F2, F3}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            HopfData h = preset_by_name("group:C" + std::to_string(n), f);
            bool all_lift = true;
            for (const Bimodule& m : {trivial_module(h), regular_bimodule(h.alg)}) {
                Mat z = cocycle_space(h.alg, m);
                for (std::size_t k = 0; k < z.cols(); ++k) {
                    SurjectionProblem p = square_zero_extension(h.alg, m, Mat(f, m.dim, n * n, z.col(k)));
                    LiftOutcome out = lift_algebra_section(p);
                    if (out) check_certificate(p, *out.certificate);
                    else CHECK(is_cocycle(h.alg, out.obstruction->layer, out.obstruction->cocycle));
                    all_lift = all_lift && static_cast<bool>(out);
                }
            }
            CAPTURE(n);
            CAPTURE(f.characteristic());
            CHECK(all_lift == find_fs_section(h).has_value());
            CHECK(all_lift == (f.characteristic() == 0 || n % f.characteristic() != 0));
        }
    }
}

TEST_CASE("weak projections") {
    HopfData h4 = preset_sweedler(Q);
    SubHopf k = sub_hopf_algebra(h4, coradical(h4.coa));
    CHECK(k.hopf.dim() == 2);
    CHECK(k.hopf.basis == std::vector<std::string>{"1", "g"});
    WeakProjectionOutcome out = weak_projection(h4, k.hopf, k.inclusion);
    REQUIRE(out);
    const WeakProjection& w = *out.projection;
    CHECK(w.retracts);
    CHECK(w.coalgebra_map);
    CHECK(w.left_linear);
    CHECK(w.retraction * k.inclusion == Mat::identity(Q, 2));
    CHECK(weak_projection_to_json(out)["holds"] == true);

    WeakProjectionOutcome both = weak_projection(h4, k.hopf, k.inclusion, true);
    if (both) CHECK(both.projection->right_linear);

    SubHopf one = sub_hopf_algebra(h4, make_subspace(Mat(Q, 4, 1, h4.alg.unit), Q, 4));
    CHECK_THROWS_AS(weak_projection(h4, one.hopf, one.inclusion), LiftError);
    CHECK_THROWS_AS(sub_hopf_algebra(h4, make_subspace(Mat(Q, 4, 1, unit_vec(Q, 4, 2)), Q, 4)), LiftError);

    HopfData s3 = preset_by_name("group:S3", F3);
    WeakProjectionOutcome id = weak_projection(s3, s3, Mat::identity(F3, 6));
    REQUIRE(id);
    CHECK(id.projection->retraction == Mat::identity(F3, 6));
}

TEST_CASE("weak projections onto cosemisimple coradicals") {
    std::vector<HopfData> pointed{preset_sweedler(Q), preset_sweedler(F3), preset_by_name("taft:3:2", FieldSpec::prime(7)),
                                  preset_by_name("functions:C2", F2), preset_by_name("group:C4", F2)};
    for (const HopfData& e : pointed) {
        SubspaceBasis c = coradical(e.coa);
        SubHopf k = sub_hopf_algebra(e, c);
        CHECK(wedge_filtration(c, e.coa).exhausted);
        WeakProjectionOutcome out = weak_projection(e, k.hopf, k.inclusion);
        REQUIRE(out);
        CHECK(out.projection->retracts);
        CHECK(out.projection->coalgebra_map);
        CHECK(out.projection->left_linear);
    }
}
