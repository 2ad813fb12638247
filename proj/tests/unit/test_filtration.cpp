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
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/presets.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

SubspaceBasis span(FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<long>> vecs) {
    std::vector<Vec> cols;
    for (auto v : vecs) {
        Vec c;
        for (long x : v) c.push_back(f.from_int(x));
        cols.push_back(c);
    }
    return make_subspace(Mat::from_columns(f, n, cols), f, n);
}

bool same(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.dim() != b.dim()) return false;
    return a.dim() == 0 || same_span(a.basis, b.basis);
}

// Subcoalgebras spanned by sets of basis group-likes, plus generated ones from random vectors.
std::vector<SubspaceBasis> sample_subcoalgebras(const HopfData& h, unsigned seed) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    std::vector<SubspaceBasis> out;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        Vec v(n, f.zero());
        std::size_t nz = 0;
        for (auto& x : v)
            if (rng() % 3 == 0) {
                x = f.from_int(coef(rng));
                nz += !x.is_zero();
            }
        if (nz == 0) v[rng() % n] = f.one();
        out.push_back(generated_subcoalgebra(Mat(f, n, 1, v), h.coa));
    }
    out.push_back(generated_subcoalgebra(Mat(f, n, 1, h.alg.unit), h.coa));
    out.push_back(full_space(f, n));
    return out;
}

}  // namespace

TEST_CASE("radical") {
    CHECK(radical(preset_group_algebra(cyclic_group(2), Q).alg).dim() == 0);

    AlgebraData c2 = preset_group_algebra(cyclic_group(2), F2).alg;
    SubspaceBasis r2 = radical(c2);
    CHECK(same(r2, span(F2, 2, {{1, -1}})));
    CHECK(is_nilpotent_ideal(r2, c2) == std::optional<std::size_t>(2));

    AlgebraData h4 = preset_sweedler(Q).alg;
    SubspaceBasis r4 = radical(h4);
    CHECK(same(r4, span(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}})));
    CHECK(is_nilpotent_ideal(r4, h4) == std::optional<std::size_t>(2));

    // C4 over F2: K[t]/(t⁴) with t = g − 1 has radical of dimension 3 and nilpotency 4.
    AlgebraData c4 = preset_group_algebra(cyclic_group(4), F2).alg;
    SubspaceBasis r = radical(c4);
    CHECK(r.dim() == 3);
    CHECK(is_nilpotent_ideal(r, c4) == std::optional<std::size_t>(4));
    // C6 over F3: K[C2] ⊗ K[C3]; the radical is 4-dimensional.
    CHECK(radical(preset_group_algebra(cyclic_group(6), F3).alg).dim() == 4);
    CHECK(radical(preset_group_algebra(symmetric_group_s3(), F3).alg).dim() == 4);
    CHECK(radical(preset_group_algebra(symmetric_group_s3(), F2).alg).dim() == 1);
}

TEST_CASE("nilpotent ideals") {
    AlgebraData c2 = preset_group_algebra(cyclic_group(2), F2).alg;
    CHECK(is_nilpotent_ideal(augmentation_ideal(preset_group_algebra(cyclic_group(2), F2)), c2) ==
          std::optional<std::size_t>(2));
    CHECK_FALSE(is_nilpotent_ideal(full_space(F2, 2), c2).has_value());
    CHECK(is_nilpotent_ideal(zero_space(F2, 2), c2) == std::optional<std::size_t>(1));
    AlgebraData h4 = preset_sweedler(Q).alg;
    CHECK_THROWS_AS(is_nilpotent_ideal(span(Q, 4, {{0, 0, 1, 0}}), h4), FiltrationError);
}

TEST_CASE("coradical") {
    for (std::size_t n = 1; n <= 6; ++n) {
        HopfData h = preset_group_algebra(cyclic_group(n), Q);
        CHECK(coradical(h.coa).dim() == n);
    }
    // KG is pointed and cosemisimple in every characteristic.
    CHECK(coradical(preset_group_algebra(cyclic_group(2), F2).coa).dim() == 2);
    CoalgebraData h4 = preset_sweedler(Q).coa;
    CHECK(same(coradical(h4), span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
    CHECK(coradical(preset_group_algebra(cyclic_group(1), Q).coa).dim() == 1);
    // K^{C2} over F2 is the dual of K[t]/(t²): Corad is the line of the counit of KC2.
    SubspaceBasis k = coradical(preset_function_algebra(cyclic_group(2), F2).coa);
    CHECK(same(k, span(F2, 2, {{1, 1}})));
}

TEST_CASE("wedge") {
    CoalgebraData c2 = preset_group_algebra(cyclic_group(2), Q).coa;
    CHECK(wedge(zero_space(Q, 2), zero_space(Q, 2), c2).dim() == 0);
    CoalgebraData h4 = preset_sweedler(Q).coa;
    SubspaceBasis corad = coradical(h4);
    CHECK(wedge(corad, corad, h4).dim() == 4);
    SubspaceBasis one = span(Q, 4, {{1, 0, 0, 0}});
    CHECK(wedge(one, full_space(Q, 4), h4).dim() == 4);
    SubspaceBasis w = wedge(one, one, h4);
    CHECK(same(w, one));
    // Δ(x) = x ⊗ 1 + g ⊗ x, Δ(gx) = gx ⊗ g + 1 ⊗ gx.
    SubspaceBasis g = span(Q, 4, {{0, 1, 0, 0}});
    CHECK(wedge(g, one, h4).dim() == 3);   // 1, g, x
    CHECK(wedge(one, g, h4).dim() == 3);   // 1, g, gx
}

TEST_CASE("wedge filtration") {
    CoalgebraData h4 = preset_sweedler(Q).coa;
    FiltrationRecord r = wedge_filtration(coradical(h4), h4);
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].dim() == 2);
    CHECK(r.stages[1].dim() == 4);
    CHECK(r.exhausted);
    CHECK(r.stabilization_index == 2);

    FiltrationRecord r1 = wedge_filtration(span(Q, 4, {{1, 0, 0, 0}}), h4);
    CHECK_FALSE(r1.exhausted);
    CHECK_FALSE(r1.coradical_contained);

    FiltrationRecord full = wedge_filtration(full_space(Q, 4), h4);
    CHECK(full.stages.size() == 1);
    CHECK(full.exhausted);

    CHECK_THROWS_AS(wedge_filtration(span(Q, 4, {{0, 0, 1, 0}}), h4), FiltrationError);
    Json j = filtration_to_json(r);
    CHECK(j["stages"].size() == 2);
    CHECK(j["exhausted"] == true);
}

TEST_CASE("property: wedge associativity and exhaustion on subcoalgebras") {
    std::size_t instances = 0;
    for (FieldSpec f : {Q, F2, F3})
        for (const auto& name : grid_preset_names()) {
            HopfData h = preset_by_name(name, f);
            CAPTURE(name);
            auto subs = sample_subcoalgebras(h, 7 + h.dim());
            SubspaceBasis corad = coradical(h.coa);
            for (const auto& x : subs) {
                REQUIRE(is_subcoalgebra(x, h.coa));
                FiltrationRecord r = wedge_filtration(x, h.coa);
                bool contains = corad.dim() == 0 || span_contains(x.basis, corad.basis);
                CHECK(r.exhausted == contains);
                for (std::size_t k = 1; k < r.stages.size(); ++k)
                    CHECK(span_contains(r.stages[k].basis, r.stages[k - 1].basis));
                ++instances;
            }
            for (std::size_t a = 0; a + 2 < subs.size(); ++a) {
                const auto &x = subs[a], &y = subs[a + 1], &z = subs[a + 2];
                SubspaceBasis xy = wedge(x, y, h.coa);
                CHECK(is_subcoalgebra(xy, h.coa));
                CHECK(same(wedge(xy, z, h.coa), wedge(x, wedge(y, z, h.coa), h.coa)));
            }
        }
    CHECK(instances >= 10);
}

TEST_CASE("property: coradical is the annihilator of the dual radical") {
    for (FieldSpec f : {Q, F2, F3})
        for (const auto& name : grid_preset_names()) {
            CAPTURE(name);
            HopfData h = preset_by_name(name, f);
            HopfData d = dual_hopf(h);
            SubspaceBasis corad = coradical(h.coa);
            SubspaceBasis rad = radical(d.alg);
            CHECK(corad.dim() + rad.dim() == h.dim());
            if (rad.dim() > 0 && corad.dim() > 0) CHECK((rad.basis.transpose() * corad.basis).is_zero());
            // Round trip: the annihilator of Corad is rad(H*) again.
            SubspaceBasis back = corad.dim() == 0 ? full_space(f, h.dim())
                                                  : make_subspace(nullspace(corad.basis.transpose()), f, h.dim());
            if (rad.dim() == 0)
                CHECK(back.dim() == 0);
            else
                CHECK(same(back, rad));
        }
}
