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

#include "hopfsmith/serialize.hpp"

#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    return j.at(key);
}

void expect_array(const Json& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n)
        throw FormatError(what + ": expected an array of length " + std::to_string(n));
}

Tensor3 tensor_from_json(const Json& j, FieldSpec f, std::size_t n, const std::string& what) {
    Tensor3 t(f, n, n, n);
    expect_array(j, n, what);
    for (std::size_t a = 0; a < n; ++a) {
        expect_array(j[a], n, what + "[" + std::to_string(a) + "]");
        for (std::size_t b = 0; b < n; ++b) {
            Vec v = vec_from_json(j[a][b], f, n);
            for (std::size_t c = 0; c < n; ++c) t(a, b, c) = v[c];
        }
    }
    return t;
}

Vec solve_unit(const Tensor3& mult, FieldSpec f, std::size_t n) {
    // sum_i u_i mult(i, j, k) = [j == k] and sum_i u_i mult(j, i, k) = [j == k]
    LinearSystem sys(f, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (int side = 0; side < 2; ++side) {
                Equation eq(f);
                for (std::size_t i = 0; i < n; ++i) eq.add(i, side == 0 ? mult(i, j, k) : mult(j, i, k));
                if (j == k) eq.add_rhs(f.one());
                sys.add(eq);
            }
    auto sol = solve_affine(sys);
    if (!sol) throw FormatError("multiplication table has no two-sided unit");
    return sol->particular;
}

FieldSpec field_from_json(const Json& j) {
    const Json& cj = member(member(j, "field"), "char");
    if (!cj.is_number_unsigned()) throw FormatError("field.char must be a non-negative integer");
    try {
        return FieldSpec::with_characteristic(cj.get<std::uint32_t>());
    } catch (const FieldError& e) {
        throw FormatError(e.what());
    }
}

std::size_t dim_from_json(const Json& j) {
    const Json& dj = member(j, "dim");
    if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) throw FormatError("dim must be a positive integer");
    return dj.get<std::size_t>();
}

}  // namespace

Json algebra_to_json(const AlgebraData& a) {
    validate_shape(a);
    Json j;
    j["field"] = {{"char", a.field.characteristic()}};
    j["dim"] = a.dim;
    j["mult"] = tensor_to_json(a.mult);
    j["unit"] = vec_to_json(a.unit);
    return j;
}

AlgebraData algebra_from_json(const Json& j) {
    AlgebraData a;
    a.field = field_from_json(j);
    a.dim = dim_from_json(j);
    a.mult = tensor_from_json(member(j, "mult"), a.field, a.dim, "mult");
    a.unit = j.contains("unit") ? vec_from_json(j.at("unit"), a.field, a.dim) : solve_unit(a.mult, a.field, a.dim);
    validate_shape(a);
    return a;
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

Scalar scalar_from_json(const Json& j, FieldSpec f) {
    try {
        if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
        if (j.is_string()) return f.parse(j.get<std::string>());
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(std::string("bad scalar: ") + e.what());
    }
    throw FormatError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

Json vec_to_json(std::span<const Scalar> v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vec vec_from_json(const Json& j, FieldSpec f, std::size_t expected) {
    expect_array(j, expected, "vector");
    Vec v;
    v.reserve(expected);
    for (const auto& e : j) v.push_back(scalar_from_json(e, f));
    return v;
}

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
    return out;
}

Mat mat_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols) {
    expect_array(j, rows, "matrix");
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec v = vec_from_json(j[r], f, cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
    }
    return m;
}

Json tensor_to_json(const Tensor3& t) {
    Json out = Json::array();
    for (std::size_t a = 0; a < t.dim0(); ++a) {
        Json slab = Json::array();
        for (std::size_t b = 0; b < t.dim1(); ++b) {
            Json row = Json::array();
            for (std::size_t c = 0; c < t.dim2(); ++c) row.push_back(scalar_to_json(t(a, b, c)));
            slab.push_back(std::move(row));
        }
        out.push_back(std::move(slab));
    }
    return out;
}

Json hopf_to_json(const HopfData& h) {
    validate_shape(h);
    Json j;
    j["field"] = {{"char", h.field().characteristic()}};
    j["dim"] = h.dim();
    j["basis"] = h.basis;
    j["mult"] = tensor_to_json(h.alg.mult);
    j["comult"] = tensor_to_json(h.coa.comult);
    j["unit"] = vec_to_json(h.alg.unit);
    j["counit"] = vec_to_json(h.coa.counit);
    j["antipode"] = mat_to_json(h.antipode);
    if (h.antipode_inverse) j["antipode_inverse"] = mat_to_json(*h.antipode_inverse);
    return j;
}

HopfData hopf_from_json(const Json& j) {
    FieldSpec f = field_from_json(j);
    const std::size_t n = dim_from_json(j);

    HopfData h;
    h.alg.field = h.coa.field = f;
    h.alg.dim = h.coa.dim = n;
    h.alg.mult = tensor_from_json(member(j, "mult"), f, n, "mult");
    h.coa.comult = tensor_from_json(member(j, "comult"), f, n, "comult");
    h.coa.counit = vec_from_json(member(j, "counit"), f, n);
    h.alg.unit = j.contains("unit") ? vec_from_json(j.at("unit"), f, n) : solve_unit(h.alg.mult, f, n);
    h.antipode = mat_from_json(member(j, "antipode"), f, n, n);
    if (j.contains("antipode_inverse")) h.antipode_inverse = mat_from_json(j.at("antipode_inverse"), f, n, n);
    if (j.contains("basis")) {
        const Json& bj = j.at("basis");
        expect_array(bj, n, "basis");
        for (const auto& b : bj) {
            if (!b.is_string()) throw FormatError("basis labels must be strings");
            h.basis.push_back(b.get<std::string>());
        }
    }
    validate_shape(h);
    return h;
}

HopfData parse_hopf(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    return hopf_from_json(j);
}

std::string dump_sorted(const Json& j, int indent) { return j.dump(indent); }

}  // namespace hopfsmith
