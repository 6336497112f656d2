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

#include "qswitch/rational.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qswitch {

namespace {

Int128 abs128(Int128 v) {
    return v < 0 ? -v : v;
}

Int128 parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw std::invalid_argument("Not a rational number: '" + std::string(whole) + "'.");
    }
    Int128 value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("Not a rational number: '" + std::string(whole) + "'.");
        }
        value = checked_add(checked_mul(value, 10), c - '0');
    }
    return value;
}

}  // namespace

std::string int128_to_string(Int128 value) {
    if (value == 0) {
        return "0";
    }
    bool negative = value < 0;
    // Work on the negative side so the minimum value does not overflow.
    Int128 v = negative ? value : -value;
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) {
        out.push_back('-');
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("128-bit integer overflow in addition.");
    }
    return r;
}

Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("128-bit integer overflow in subtraction.");
    }
    return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("128-bit integer overflow in multiplication.");
    }
    return r;
}

Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int128 lcm128(Int128 a, Int128 b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return checked_mul(abs128(a) / gcd128(a, b), abs128(b));
}

Rational::Rational(Int128 numerator, Int128 denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational with zero denominator.");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    Int128 g = gcd128(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    num_ = numerator;
    den_ = denominator;
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        Int128 p = parse_digits(body.substr(0, slash), text);
        Int128 q = parse_digits(body.substr(slash + 1), text);
        if (q == 0) {
            throw std::invalid_argument("Zero denominator in '" + std::string(text) + "'.");
        }
        result = Rational(p, q);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("Not a rational number: '" + std::string(text) + "'.");
        }
        Int128 scale = 1;
        for (size_t k = 0; k < frac_part.size(); k++) {
            scale = checked_mul(scale, 10);
        }
        Int128 whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        Int128 frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
        result = Rational(checked_add(checked_mul(whole, scale), frac), scale);
    } else {
        result = Rational(parse_digits(body, text));
    }
    return negative ? -result : result;
}

Int128 Rational::ceil() const {
    Int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) {
        q += 1;
    }
    return q;
}

Int128 Rational::floor() const {
    Int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        q -= 1;
    }
    return q;
}

double Rational::to_double() const {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

Rational &Rational::operator+=(const Rational &other) {
    Int128 g = gcd128(den_, other.den_);
    Int128 lhs = checked_mul(num_, other.den_ / g);
    Int128 rhs = checked_mul(other.num_, den_ / g);
    *this = Rational(checked_add(lhs, rhs), checked_mul(den_ / g, other.den_));
    return *this;
}

Rational &Rational::operator-=(const Rational &other) {
    return *this += -other;
}

Rational &Rational::operator*=(const Rational &other) {
    Int128 g1 = gcd128(num_, other.den_);
    Int128 g2 = gcd128(other.num_, den_);
    if (g1 == 0) {
        g1 = 1;
    }
    if (g2 == 0) {
        g2 = 1;
    }
    *this = Rational(checked_mul(num_ / g1, other.num_ / g2), checked_mul(den_ / g2, other.den_ / g1));
    return *this;
}

Rational &Rational::operator/=(const Rational &other) {
    if (other.num_ == 0) {
        throw std::domain_error("Division of a rational by zero.");
    }
    return *this *= Rational(other.den_, other.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    Int128 lhs = checked_mul(a.num_, b.den_);
    Int128 rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &out, const Rational &value) {
    return out << value.str();
}

}  // namespace qswitch
