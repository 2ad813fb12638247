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
#include "hopfsmith/doubles.hpp"
#include "hopfsmith/integrals.hpp"
#include "hopfsmith/presets.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

bool commutative(const AlgebraData& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.mult(i, j, k) != a.mult(j, i, k)) return false;
    return true;
}

}  // namespace

TEST_CASE("Drinfeld double structure") {
    for (FieldSpec f : {Q, F2, F3}) {
        DrinfeldDouble d4 = drinfeld_double(preset_sweedler(f));
        CHECK(d4.hopf.dim() == 16);
        CHECK(check_hopf(d4.hopf).all_passed());
        DrinfeldDouble c2 = drinfeld_double(preset_group_algebra(cyclic_group(2), f));
        CHECK(check_hopf(c2.hopf).all_passed());
    }
    // Abelian group: D(KG) ≅ K^G ⊗ KG as algebras, hence commutative.
    CHECK(commutative(drinfeld_double(preset_group_algebra(cyclic_group(3), Q)).hopf.alg));
    CHECK_FALSE(commutative(drinfeld_double(preset_group_algebra(symmetric_group_s3(), Q)).hopf.alg));
    CHECK_FALSE(commutative(drinfeld_double(preset_sweedler(Q)).hopf.alg));
}

TEST_CASE("embedding of H into its double is a bialgebra map") {
    for (const auto& name : grid_preset_names()) {
        if (name == "group:Q8") continue;
        CAPTURE(name);
        HopfData h = preset_by_name(name, Q);
        DrinfeldDouble d = drinfeld_double(h);
        CHECK_NOTHROW(validate_extension(d.over_h));
        const Mat& i = d.over_h.embedding;
        const std::size_t n = h.dim();
        CoalgebraOps dc(d.hopf.coa), hc(h.coa);
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = dc.comul(i.col(j));
            Vec rhs = zero_vec(Q, n * n * n * n);
            for (const auto& t : hc.delta(j)) axpy(rhs, t.coef, kron(i.col(t.a), i.col(t.b)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("relative tensor product") {
    HopfData h = preset_sweedler(Q);
    AlgebraData r = h.alg;

    RelTensor over_k = relative_tensor(trivial_extension(r));
    CHECK(over_k.dim() == 16);
    CHECK(over_k.projection() == Mat::identity(Q, 16));

    RelTensor over_r = relative_tensor(identity_extension(r));
    CHECK(over_r.dim() == 4);
    // R ⊗_R R ≅ R via multiplication: the relation span is ker m.
    Mat m = AlgebraOps(r).mult_matrix();
    CHECK(over_r.relation_rank() == 12);
    Mat ker = nullspace(m);
    for (std::size_t c = 0; c < ker.cols(); ++c) CHECK(over_r.in_relations(ker.col(c)));

    RelTensor dbl = relative_tensor(drinfeld_double(h).over_h);
    CHECK(dbl.dim() == 64);
    CHECK(dbl.bimodule_verified);
}

TEST_CASE("separable extensions") {
    CHECK(separable_extension(drinfeld_double(preset_group_algebra(cyclic_group(2), F2)).over_h).has_value());
    CHECK_FALSE(separable_extension(drinfeld_double(preset_sweedler(Q)).over_h).has_value());
    CHECK(double_separable_over_h(preset_group_algebra(cyclic_group(3), F3)));
    CHECK_FALSE(double_separable_over_h(preset_sweedler(Q)));
    CHECK(double_separable_over_h(preset_group_algebra(cyclic_group(1), Q)));

    auto cert = separable_extension(drinfeld_double(preset_group_algebra(cyclic_group(2), F2)).over_h);
    REQUIRE(cert.has_value());
    CHECK(cert->verified == std::vector<std::string>{"multiplication", "central"});
}

TEST_CASE("property: separability over the ground field matches the separability idempotent") {
    for (FieldSpec f : {Q, F2, F3})
        for (const auto& name : grid_preset_names()) {
            CAPTURE(name);
            HopfData h = preset_by_name(name, f);
            CHECK(separable_extension(trivial_extension(h.alg)).has_value() ==
                  separability_idempotent(h).has_value());
        }
}

TEST_CASE("property: ad-invariant integral exists iff the double is separable over H") {
    for (FieldSpec f : {Q, F2, F3})
        for (const char* name : {"group:C2", "group:C3", "functions:C2", "sweedler"}) {
            CAPTURE(name);
            HopfData h = preset_by_name(name, f);
            CHECK(ad_invariant_integral(h).has_value() == double_separable_over_h(h));
            CHECK(ad_coinvariant_integral(h).has_value() == dual_double_separable(h));
        }
    HopfData s3 = preset_function_algebra(symmetric_group_s3(), F2);
    CHECK_FALSE(ad_invariant_integral(s3).has_value());
    CHECK_FALSE(double_separable_over_h(s3));
}

TEST_CASE("extension serialization") {
    ExtensionData ext = drinfeld_double(preset_group_algebra(cyclic_group(2), F3)).over_h;
    ExtensionData back = extension_from_json(Json::parse(dump_sorted(extension_to_json(ext))));
    CHECK(back.big == ext.big);
    CHECK(back.small == ext.small);
    CHECK(back.embedding == ext.embedding);
    CHECK_THROWS_AS(extension_from_json(Json::parse("{\"big\": {}}")), FormatError);

    ExtensionData bad = ext;
    bad.embedding(0, 0) += F3.one();
    CHECK_THROWS_AS(validate_extension(bad), ExtensionError);
}
