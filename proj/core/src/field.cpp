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

#include "hopfsmith/field.hpp"

#include <limits>
#include <ostream>

namespace hopfsmith {

namespace {

using i128 = wide_int;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) z = -z;
    return z;
}

bool fits_int64(const mpz_class& z) {
    return mpz_cmp_si(z.get_mpz_t(), std::numeric_limits<long>::min()) >= 0 &&
           mpz_cmp_si(z.get_mpz_t(), std::numeric_limits<long>::max()) <= 0 && sizeof(long) == 8;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // a != 0 mod p, p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31)) throw FieldError("prime field modulus must be below 2^31");
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::with_characteristic(std::uint32_t c) { return c == 0 ? FieldSpec{} : prime(c); }

Scalar FieldSpec::zero() const { return p_ == 0 ? Scalar{} : Scalar::make_residue(p_, 0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
    if (p_ == 0) return Scalar::make_small(v, 1);
    return Scalar::make_residue(p_, reduce_signed(v, p_));
}

Scalar FieldSpec::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw FieldError("zero denominator");
    if (p_ == 0) {
        Scalar s;
        s.set_from_wide(num, den);
        return s;
    }
    std::uint64_t d = reduce_signed(den, p_);
    if (d == 0) throw FieldError("denominator " + std::to_string(den) + " vanishes in " + name());
    return Scalar::make_residue(p_, reduce_signed(num, p_) * mod_inverse(d, p_) % p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
    std::string s(text);
    mpq_class q;
    try {
        if (q.set_str(s, 10) != 0) throw FieldError("malformed scalar '" + s + "'");
    } catch (const std::invalid_argument&) {
        throw FieldError("malformed scalar '" + s + "'");
    }
    if (q.get_den() == 0) throw FieldError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar::make_rational(q).convert(*this);
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Scalar::make_residue(std::uint32_t p, std::uint64_t r) {
    Scalar s;
    s.p_ = p;
    s.num_ = static_cast<std::int64_t>(r);
    s.den_ = 1;
    return s;
}

Scalar Scalar::make_small(std::int64_t num, std::int64_t den) {
    Scalar s;
    s.set_from_wide(num, den);
    return s;
}

Scalar Scalar::make_rational(const mpq_class& q) {
    Scalar s;
    if (fits_int64(q.get_num()) && fits_int64(q.get_den())) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
    } else {
        s.num_ = 1;  // marks non-zero; value lives in big_
        s.big_ = std::make_shared<const mpq_class>(q);
    }
    return s;
}

void Scalar::set_from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    if (den != 1) {
        u128 g = gcd128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
        if (g > 1) {
            num /= static_cast<i128>(g);
            den /= static_cast<i128>(g);
        }
    }
    if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    *this = make_rational(q);
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_)
        throw FieldError("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint32_t Scalar::residue() const {
    if (p_ == 0) throw FieldError("residue() on a rational scalar");
    return static_cast<std::uint32_t>(num_);
}

Scalar Scalar::operator-() const {
    if (p_ != 0) return make_residue(p_, num_ == 0 ? 0 : p_ - static_cast<std::uint64_t>(num_));
    if (big_) return make_rational(-*big_);
    Scalar s;
    s.set_from_wide(-static_cast<i128>(num_), den_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (p_ != 0) {
        std::uint64_t r = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
        if (r >= p_) r -= p_;
        num_ = static_cast<std::int64_t>(r);
        return *this;
    }
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1)
            set_from_wide(static_cast<i128>(num_) + o.num_, 1);
        else
            set_from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                          static_cast<i128>(den_) * o.den_);
        return *this;
    }
    *this = make_rational(to_mpq() + o.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (p_ != 0) {
        num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % p_);
        return *this;
    }
    if (is_zero() || o.is_zero()) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return *this;
    }
    if (!big_ && !o.big_) {
        set_from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
        return *this;
    }
    *this = make_rational(to_mpq() * o.to_mpq());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (p_ != 0) return make_residue(p_, mod_inverse(static_cast<std::uint64_t>(num_), p_));
    if (big_) return make_rational(1 / *big_);
    Scalar s;
    s.set_from_wide(den_, num_);
    return s;
}

Scalar Scalar::convert(FieldSpec target) const {
    std::uint32_t tp = target.characteristic();
    if (tp == p_) return *this;
    if (tp == 0) return make_small(num_, 1);  // residue lifted to [0,p)
    if (p_ != 0) throw FieldError("cannot convert between distinct prime fields");
    mpq_class q = to_mpq();
    std::uint64_t d = reduce_mpz(q.get_den(), tp);
    if (d == 0) throw FieldError("denominator of " + to_string() + " vanishes in " + target.name());
    return make_residue(tp, reduce_mpz(q.get_num(), tp) * mod_inverse(d, tp) % tp);
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // big values never fit the small representation
}

std::string Scalar::to_string() const {
    if (p_ != 0) return std::to_string(num_);
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfsmith
