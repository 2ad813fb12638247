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

#include "hopfsmith/presets.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "hopfsmith/constructions.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

GroupTable make_group(std::string name, std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw GroupError("empty Cayley table", {});
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw GroupError("Cayley table is not square", {a});
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] >= n) throw GroupError("product outside the group", {a, b});
    }
    std::size_t id = n;
    for (std::size_t e = 0; e < n && id == n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) id = e;
    }
    if (id == n) throw GroupError("no identity element", {});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GroupError("multiplication is not associative", {a, b, c});
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == id && table[b][a] == id) inv[a] = b;
        if (inv[a] == n) throw GroupError("element without inverse", {a});
    }
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back(a == id ? "e" : "g" + std::to_string(a));
    if (labels.size() != n) throw GroupError("label count differs from group order", {});
    return GroupTable{std::move(name), std::move(table), std::move(labels), id, std::move(inv)};
}

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw PresetError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    }
    return make_group("C" + std::to_string(n), std::move(t), std::move(labels));
}

GroupTable symmetric_group_s3() {
    // Permutations of {0,1,2} as images of 0,1,2; composition (p*q)(x) = p(q(x)).
    const std::array<std::array<std::size_t, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
    const std::vector<std::string> labels{"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return make_group("S3", std::move(t), labels);
}

GroupTable quaternion_group() {
    // Index 2u + s encodes sign (-1)^s times unit u in {1, i, j, k}.
    const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            std::size_t u = a / 2, v = b / 2;
            std::size_t s = (a % 2 + b % 2 + static_cast<std::size_t>(sign_mul[u][v])) % 2;
            t[a][b] = 2 * static_cast<std::size_t>(unit_mul[u][v]) + s;
        }
    return make_group("Q8", std::move(t), labels);
}

GroupTable group_by_name(std::string_view name) {
    if (name == "S3") return symmetric_group_s3();
    if (name == "Q8") return quaternion_group();
    if (name.size() >= 2 && name[0] == 'C') {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
        if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 12) return cyclic_group(n);
    }
    throw PresetError("unknown group '" + std::string(name) + "' (expected C1..C12, S3, Q8)");
}

HopfData preset_group_algebra(const GroupTable& g, FieldSpec f) {
    const std::size_t n = g.order();
    HopfData h;
    h.alg = {f, n, Tensor3(f, n, n, n), unit_vec(f, n, g.identity)};
    h.coa = {f, n, Tensor3(f, n, n, n), Vec(n, f.one())};
    h.antipode = Mat(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) h.alg.mult(a, b, g.table[a][b]) = f.one();
        h.coa.comult(a, a, a) = f.one();
        h.antipode(g.inverse[a], a) = f.one();
    }
    h.antipode_inverse = h.antipode;
    h.basis = g.labels;
    return h;
}

HopfData preset_function_algebra(const GroupTable& g, FieldSpec f) {
    HopfData h = dual_hopf(preset_group_algebra(g, f), false);
    for (auto& label : h.basis) label = "d_" + label;
    return h;
}

HopfData preset_sweedler(FieldSpec f) {
    // Basis 1, g, x, gx.
    HopfData h;
    const Scalar one = f.one(), m1 = f.from_int(-1);
    h.alg = {f, 4, Tensor3(f, 4, 4, 4), unit_vec(f, 4, 0)};
    auto& mu = h.alg.mult;
    for (std::size_t a = 0; a < 4; ++a) {
        mu(0, a, a) = one;
        mu(a, 0, a) = one;
    }
    mu(1, 1, 0) = one;
    mu(1, 2, 3) = one;
    mu(1, 3, 2) = one;
    mu(2, 1, 3) = m1;
    mu(3, 1, 2) = m1;

    h.coa = {f, 4, Tensor3(f, 4, 4, 4), Vec{one, one, f.zero(), f.zero()}};
    auto& de = h.coa.comult;
    de(0, 0, 0) = one;
    de(1, 1, 1) = one;
    de(2, 2, 0) = one;
    de(2, 1, 2) = one;
    de(3, 3, 1) = one;
    de(3, 0, 3) = one;

    h.antipode = Mat(f, 4, 4);
    h.antipode(0, 0) = one;
    h.antipode(1, 1) = one;
    h.antipode(3, 2) = m1;
    h.antipode(2, 3) = one;
    h.antipode_inverse = invert(h.antipode);
    h.basis = {"1", "g", "x", "gx"};
    return h;
}

namespace {

bool is_primitive_root(const Scalar& q, std::size_t n) {
    Scalar p = q.field().one();
    for (std::size_t k = 1; k <= n; ++k) {
        p *= q;
        if (p.is_one()) return k == n;
    }
    return false;
}

}  // namespace

HopfData preset_taft(std::size_t n, const Scalar& q) {
    FieldSpec f = q.field();
    if (n < 2) throw PresetError("Taft algebra needs n >= 2");
    if (!is_primitive_root(q, n)) throw PresetError("q = " + q.to_string() + " is not a primitive root of unity of order " +
                                                    std::to_string(n) + " in " + f.name());
    const std::size_t dim = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };  // g^i x^j
    std::vector<Scalar> qpow(n, f.one());
    for (std::size_t k = 1; k < n; ++k) qpow[k] = qpow[k - 1] * q;

    HopfData h;
    h.alg = {f, dim, Tensor3(f, dim, dim, dim), unit_vec(f, dim, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l + j < n; ++l)
                    h.alg.mult(idx(i, j), idx(k, l), idx((i + k) % n, j + l)) = qpow[(j * k) % n];

    // Gaussian binomials [j choose m]_q by the q-Pascal rule.
    std::vector<std::vector<Scalar>> binom(n, std::vector<Scalar>(n, f.zero()));
    for (std::size_t j = 0; j < n; ++j) {
        binom[j][0] = f.one();
        for (std::size_t m = 1; m <= j; ++m)
            binom[j][m] = binom[j - 1][m - 1] + qpow[m % n] * (m <= j - 1 ? binom[j - 1][m] : f.zero());
    }
    Vec counit = zero_vec(f, dim);
    for (std::size_t i = 0; i < n; ++i) counit[idx(i, 0)] = f.one();
    h.coa = {f, dim, Tensor3(f, dim, dim, dim), counit};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m <= j; ++m)
                h.coa.comult(idx(i, j), idx((i + m) % n, j - m), idx(i, m)) = binom[j][m];

    // S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^{n-1}, S(x) = -g^{n-1} x.
    AlgebraOps ops(h.alg);
    Vec sg = unit_vec(f, dim, idx(n - 1, 0));
    Vec sx = scaled(unit_vec(f, dim, idx(n - 1, 1)), f.from_int(-1));
    h.antipode = Mat(f, dim, dim);
    for (std::size_t j = 0; j < n; ++j) {
        Vec xpart = h.alg.unit;
        for (std::size_t t = 0; t < j; ++t) xpart = ops.mul(xpart, sx);
        Vec v = xpart;
        for (std::size_t i = 0; i < n; ++i) {
            h.antipode.set_col(idx(i, j), v);
            v = ops.mul(v, sg);
        }
    }
    h.antipode_inverse = invert(h.antipode);
    h.basis.resize(dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string s;
            if (i > 0) s += i == 1 ? "g" : "g^" + std::to_string(i);
            if (j > 0) s += j == 1 ? "x" : "x^" + std::to_string(j);
            h.basis[idx(i, j)] = s.empty() ? "1" : s;
        }
    return h;
}

HopfData preset_by_name(std::string_view name, FieldSpec f) {
    auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
    if (starts("group:")) return preset_group_algebra(group_by_name(name.substr(6)), f);
    if (starts("functions:")) return preset_function_algebra(group_by_name(name.substr(10)), f);
    if (name == "sweedler") return preset_sweedler(f);
    if (starts("taft:")) {
        std::string_view rest = name.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw PresetError("taft preset must be taft:<n>:<q>");
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + colon, n);
        if (ec != std::errc() || ptr != rest.data() + colon) throw PresetError("taft order is not an integer");
        Scalar q;
        try {
            q = f.parse(rest.substr(colon + 1));
        } catch (const std::exception& e) {
            throw PresetError(std::string("taft parameter q: ") + e.what());
        }
        return preset_taft(n, q);
    }
    throw PresetError("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> grid_preset_names() {
    return {"group:C1",     "group:C2",     "group:C3",     "group:C4",  "group:C5", "group:C6",
            "group:S3",     "group:Q8",     "functions:C2", "functions:C3", "functions:S3", "sweedler"};
}

}  // namespace hopfsmith
