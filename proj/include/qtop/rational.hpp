/*
 * Copyright 2026 The qtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtop {

/// Exact arithmetic throughout; no floating point anywhere in the library.
using rational = boost::rational<long long>;

/// Nonnegative exact rational extended with an absorbing top element `inf`.
/// This is the classical distance codomain: addition is exact, `inf + a = inf`,
/// and `inf` is the top of the order.
class ext_rational {
public:
    ext_rational() = default; // zero

    ext_rational(long long n) : q_(check_nonneg(rational(n))) {}

    ext_rational(long long num, long long den) : q_(check_nonneg(rational(num, den))) {}

    ext_rational(const rational& q) : q_(check_nonneg(q)) {}

    static ext_rational inf() {
        ext_rational v;
        v.inf_ = true;
        return v;
    }

    bool is_inf() const { return inf_; }

    /// The finite value; only meaningful when !is_inf().
    const rational& finite() const {
        if (inf_) throw std::logic_error("ext_rational: finite() on inf");
        return q_;
    }

    friend ext_rational operator+(const ext_rational& a, const ext_rational& b) {
        if (a.inf_ || b.inf_) return inf();
        return ext_rational(a.q_ + b.q_);
    }

    friend bool operator==(const ext_rational& a, const ext_rational& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.q_ == b.q_;
    }

    friend bool operator<(const ext_rational& a, const ext_rational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }

    friend bool operator<=(const ext_rational& a, const ext_rational& b) { return a < b || a == b; }

private:
    static const rational& check_nonneg(const rational& q) {
        if (q < rational(0)) throw std::invalid_argument("ext_rational: negative value");
        return q;
    }
    static rational check_nonneg(rational&& q) {
        check_nonneg(q);
        return std::move(q);
    }

    bool inf_ = false;
    rational q_{0};
};

/// Canonical text form: reduced `p/q`, plain `p` when the denominator is 1.
std::string format_rational(const rational& q);

/// Accepts `p`, `p/q`, optional leading sign. Throws std::invalid_argument on
/// malformed or oversized input (|num|, den capped at 10^9 so downstream
/// exact arithmetic stays within 64-bit range).
rational parse_rational(std::string_view token);

/// `inf`, or the format_rational form of a nonnegative rational.
std::string format_ext_rational(const ext_rational& v);

ext_rational parse_ext_rational(std::string_view token);

} // namespace qtop
