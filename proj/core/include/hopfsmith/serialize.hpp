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

#ifndef HOPFSMITH_SERIALIZE_HPP
#define HOPFSMITH_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hopfsmith/hopf.hpp"
#include "json.hpp"

namespace hopfsmith {

using Json = nlohmann::json;  // std::map objects: keys dump in sorted order

/// Malformed or inconsistent JSON input.
class FormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Rationals as "p/q" strings, residues as integers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, FieldSpec f);
Json vec_to_json(std::span<const Scalar> v);
Vec vec_from_json(const Json& j, FieldSpec f, std::size_t expected);
/// Row-major nested arrays.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols);
Json tensor_to_json(const Tensor3& t);

/// Keys: field, dim, mult, unit ("unit" optional on input).
Json algebra_to_json(const AlgebraData& a);
AlgebraData algebra_from_json(const Json& j);

/// Keys: field, dim, basis, mult, comult, unit, counit, antipode (+ antipode_inverse when known).
Json hopf_to_json(const HopfData& h);
/// "unit" is optional and solved from mult when absent. Shapes are validated, axioms are not.
HopfData hopf_from_json(const Json& j);
HopfData parse_hopf(std::string_view text);
std::string dump_sorted(const Json& j, int indent = 2);

}  // namespace hopfsmith

#endif  // HOPFSMITH_SERIALIZE_HPP
