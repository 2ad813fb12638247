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

#ifndef HOPFSMITH_PRESETS_HPP
#define HOPFSMITH_PRESETS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfsmith/hopf.hpp"

namespace hopfsmith {

/// Raised when a Cayley table is not a group. The witness names the offending entries.
class GroupError : public std::invalid_argument {
   public:
    GroupError(const std::string& what, std::vector<std::size_t> witness)
        : std::invalid_argument(what), witness_(std::move(witness)) {}
    const std::vector<std::size_t>& witness() const { return witness_; }

   private:
    std::vector<std::size_t> witness_;
};

/// Raised for unknown preset names or inadmissible parameters.
class PresetError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct GroupTable {
    std::string name;
    std::vector<std::vector<std::size_t>> table;  // table[a][b] = a*b
    std::vector<std::string> labels;
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t order() const { return table.size(); }
};

/// Validates closure, identity, inverses and associativity; fills identity and inverse.
GroupTable make_group(std::string name, std::vector<std::vector<std::size_t>> table,
                      std::vector<std::string> labels = {});
GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group_s3();
GroupTable quaternion_group();
/// "C1".."C12", "S3", "Q8".
GroupTable group_by_name(std::string_view name);

HopfData preset_group_algebra(const GroupTable& g, FieldSpec f);
HopfData preset_function_algebra(const GroupTable& g, FieldSpec f);
HopfData preset_sweedler(FieldSpec f);
/// Requires q to be a primitive n-th root of unity in its field.
HopfData preset_taft(std::size_t n, const Scalar& q);

/// "group:<G>", "functions:<G>", "sweedler", "taft:<n>:<q>".
HopfData preset_by_name(std::string_view name, FieldSpec f);
/// Preset names the full test grid runs over.
std::vector<std::string> grid_preset_names();

}  // namespace hopfsmith

#endif  // HOPFSMITH_PRESETS_HPP
