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

#ifndef HOPFSMITH_FIELD_HPP
#define HOPFSMITH_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfsmith {

__extension__ typedef __int128 wide_int;

class Scalar;

/// Thrown when scalars from different fields meet, or a field is invalid.
class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Ground field: the rationals (characteristic 0) or F_p for a prime p < 2^31.
class FieldSpec {
   public:
    constexpr FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint32_t p);
    /// 0 selects the rationals, anything else must be a prime.
    static FieldSpec with_characteristic(std::uint32_t c);

    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    constexpr bool is_rational() const noexcept { return p_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;
    /// Parses "a", "-a", "a/b". Fractions are reduced modulo p for prime fields.
    Scalar parse(std::string_view text) const;

    std::string name() const;

    friend constexpr bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }

   private:
    explicit constexpr FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact field element. Rationals are kept reduced with positive denominator;
/// they live in two machine words until they overflow, then in an mpq_class.
/// Residues are kept in [0, p).
class Scalar {
   public:
    /// Rational zero.
    Scalar() = default;

    FieldSpec field() const { return FieldSpec::with_characteristic(p_); }
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    /// Re-reads this value in another field (rationals reduce mod p; residues lift to [0,p)).
    Scalar convert(FieldSpec target) const;

    /// Residues as plain integers, rationals as "p/q" (or "n" when integral).
    std::string to_string() const;
    /// Numerator/denominator for rationals (residue over 1 for prime fields).
    mpq_class to_mpq() const;
    /// Residue for prime fields; throws for rationals.
    std::uint32_t residue() const;

   private:
    friend class FieldSpec;
    static Scalar make_residue(std::uint32_t p, std::uint64_t r);
    static Scalar make_rational(const mpq_class& q);
    static Scalar make_small(std::int64_t num, std::int64_t den);
    void check_same(const Scalar& o) const;
    void set_from_wide(wide_int num, wide_int den);

    std::uint32_t p_ = 0;
    std::int64_t num_ = 0;  // residue when p_ != 0
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfsmith

#endif  // HOPFSMITH_FIELD_HPP
