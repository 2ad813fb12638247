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
#include "hopfsmith/linsolve.hpp"

using namespace hopfsmith;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Mat ints(FieldSpec f, std::size_t r, std::size_t c, std::initializer_list<long> v) {
    std::vector<Scalar> e;
    for (long x : v) e.push_back(f.from_int(x));
    return Mat(f, r, c, std::move(e));
}

Vec ivec(FieldSpec f, std::initializer_list<long> v) {
    Vec out;
    for (long x : v) out.push_back(f.from_int(x));
    return out;
}

Mat random_mat(FieldSpec f, std::size_t r, std::size_t c, std::mt19937& rng, int density) {
    std::uniform_int_distribution<int> val(-3, 3), coin(0, 9);
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) < density) m(i, j) = f.from_int(val(rng));
    return m;
}

}  // namespace

TEST_CASE("field arithmetic stays reduced") {
    Scalar a = Q.from_fraction(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK((a * a.inverse()).is_one());
    CHECK(Q.parse("10/4").to_string() == "5/2");

    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(f7.from_int(-1).to_string() == "6");
    CHECK(f7.from_fraction(1, 2).to_string() == "4");
    CHECK((f7.from_int(3) * f7.from_int(5)).to_string() == "1");
    CHECK_THROWS_AS(f7.from_int(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
    CHECK_THROWS_AS(Q.one() + f7.one(), FieldError);
}

TEST_CASE("rationals overflow into big storage and come back") {
    Scalar big = Q.from_int(1);
    Scalar base = Q.from_int(3037000499);
    big = base * base * base;
    mpq_class expect = mpq_class(3037000499) * 3037000499 * 3037000499;
    CHECK(big.to_mpq() == expect);
    Scalar back = big / (base * base);
    CHECK(back == base);
    CHECK(back.to_string() == "3037000499");
}

TEST_CASE("solve_affine examples") {
    auto one = solve_affine(AffineSystem{ints(Q, 1, 1, {1}), ivec(Q, {0}), 1});
    REQUIRE(one);
    CHECK(one->particular == ivec(Q, {0}));
    CHECK(one->nullspace.cols() == 0);

    auto two = solve_affine(AffineSystem{ints(Q, 2, 2, {1, 1, 1, 1}), ivec(Q, {2, 2}), 2});
    REQUIRE(two);
    CHECK(two->particular == ivec(Q, {2, 0}));
    REQUIRE(two->nullspace.cols() == 1);
    CHECK(same_span(two->nullspace, ints(Q, 2, 1, {1, -1})));

    CHECK_FALSE(solve_affine(AffineSystem{ints(Q, 2, 1, {1, 0}), ivec(Q, {0, 1}), 1}));
    CHECK_THROWS_AS(solve_affine(AffineSystem{ints(Q, 2, 1, {1, 0}), ivec(Q, {0}), 1}), DimensionError);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Mat::identity(Q, 3)).cols() == 0);
    CHECK(nullspace(Mat(Q, 2, 2)).cols() == 2);
    Mat k = nullspace(ints(Q, 2, 2, {1, 2, 2, 4}));
    REQUIRE(k.cols() == 1);
    CHECK(same_span(k, ints(Q, 2, 1, {2, -1})));
}

TEST_CASE("invert examples") {
    CHECK(*invert(Mat::identity(Q, 3)) == Mat::identity(Q, 3));
    Mat swap = ints(Q, 2, 2, {0, 1, 1, 0});
    CHECK(*invert(swap) == swap);
    CHECK(*invert(ints(Q, 2, 2, {1, 1, 0, 1})) == ints(Q, 2, 2, {1, -1, 0, 1}));
    CHECK_FALSE(invert(ints(Q, 2, 2, {1, 2, 2, 4})));
    CHECK_THROWS_AS(invert(Mat(Q, 2, 3)), DimensionError);
}

TEST_CASE("property: rank-nullity, exact solutions, two-sided inverses") {
    std::mt19937 rng(20261014);
    for (FieldSpec f : {Q, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(2147483647)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            Mat m = random_mat(f, r, c, rng, 5);
            Mat k = nullspace(m);
            CHECK(rank(m) + k.cols() == c);
            CHECK((m * k).is_zero());
            CHECK(rank(k) == k.cols());

            Vec x0 = random_mat(f, c, 1, rng, 7).col(0);
            Vec b = m * x0;
            auto sol = solve_affine(AffineSystem{m, b, c});
            REQUIRE(sol);
            CHECK(m * sol->particular == b);
            Vec shifted = sol->particular;
            for (std::size_t j = 0; j < sol->nullspace.cols(); ++j) axpy(shifted, f.from_int(j + 2), sol->nullspace.col(j));
            CHECK(m * shifted == b);

            Mat sq = random_mat(f, r, r, rng, 6);
            if (auto inv = invert(sq)) {
                CHECK(sq * *inv == Mat::identity(f, r));
                CHECK(*inv * sq == Mat::identity(f, r));
            } else {
                CHECK(rank(sq) < r);
            }
        }
    }
}

TEST_CASE("echelon form reduce detects span membership") {
    EchelonForm ef(Q, 3);
    ef.insert({{0, Q.one()}, {1, Q.one()}}, Q.zero());
    ef.insert({{1, Q.one()}, {2, Q.from_int(2)}}, Q.zero());
    CHECK(ef.rank() == 2);
    CHECK(ef.reduce({{0, Q.one()}, {1, Q.from_int(2)}, {2, Q.from_int(2)}}).empty());
    CHECK_FALSE(ef.reduce({{2, Q.one()}}).empty());
    Mat li = left_inverse(ints(Q, 3, 2, {1, 0, 2, 1, 0, 3}));
    CHECK(li * ints(Q, 3, 2, {1, 0, 2, 1, 0, 3}) == Mat::identity(Q, 2));
}
