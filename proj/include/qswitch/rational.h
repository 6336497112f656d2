// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_RATIONAL_H
#define QSWITCH_RATIONAL_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qswitch {

/// Signed 128-bit integer used for all exact capacity and flow arithmetic.
using Int128 = __int128;

std::string int128_to_string(Int128 value);

/// Arithmetic helpers that throw std::overflow_error instead of wrapping.
Int128 checked_add(Int128 a, Int128 b);
Int128 checked_sub(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);
Int128 gcd128(Int128 a, Int128 b);
Int128 lcm128(Int128 a, Int128 b);

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(Int128 numerator, Int128 denominator = 1);

    /// Accepts "p", "p/q" and plain decimals such as "0.001".
    static Rational parse(std::string_view text);

    Int128 num() const {
        return num_;
    }
    Int128 den() const {
        return den_;
    }
    bool is_integer() const {
        return den_ == 1;
    }
    bool is_zero() const {
        return num_ == 0;
    }

    /// Smallest integer >= this value.
    Int128 ceil() const;
    Int128 floor() const;
    double to_double() const;

    /// Always "p/q", including integers ("4/1").
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b) {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b) {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b) {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    Int128 num_ = 0;
    Int128 den_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

}  // namespace qswitch

#endif
