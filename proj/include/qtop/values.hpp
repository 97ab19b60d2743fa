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

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtop/rational.hpp"
#include "qtop/report.hpp"

namespace qtop {

/// Abelian monoid with order, ball relation and halving positives: the
/// codomain of generalized distances. An instance supplies
///   - add / zero / leq          (the monoid and its partial order)
///   - ball_lt(a, r)             the "a is strictly inside radius r" test
///   - is_positive(r)            membership in the positives P
///   - half(r)                   the designated r/2 with half(r) + half(r) = r
///   - meet_hint(r, s)           a down-directedness witness below r and s
/// The four ball axioms V1-V4 checked by check_value_axioms are exactly what
/// the entourage constructions consume.
template <typename S>
concept value_semigroup =
    std::copy_constructible<typename S::value_type> &&
    std::equality_comparable<typename S::value_type> &&
    requires(const S s, const typename S::value_type a, const typename S::value_type b) {
        { s.zero() } -> std::same_as<typename S::value_type>;
        { s.add(a, b) } -> std::same_as<typename S::value_type>;
        { s.leq(a, b) } -> std::convertible_to<bool>;
        { s.ball_lt(a, b) } -> std::convertible_to<bool>;
        { s.is_positive(a) } -> std::convertible_to<bool>;
        { s.half(a) } -> std::same_as<typename S::value_type>;
        { s.meet_hint(a, b) } -> std::same_as<typename S::value_type>;
        { s.in_carrier(a) } -> std::convertible_to<bool>;
        { s.format(a) } -> std::same_as<std::string>;
        { s.name() } -> std::convertible_to<std::string>;
    };

/// Extended nonnegative rationals. P is the strictly positive finite part,
/// half(r) = r/2 exactly, meet_hint = min, and the ball relation is the
/// numeric strict order (so nothing is inside any ball around inf).
struct ereal_semigroup {
    using value_type = ext_rational;

    value_type zero() const { return ext_rational(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    bool leq(const value_type& a, const value_type& b) const { return a <= b; }
    bool ball_lt(const value_type& a, const value_type& r) const { return a < r; }
    bool is_positive(const value_type& r) const {
        return !r.is_inf() && rational(0) < r.finite();
    }
    value_type half(const value_type& r) const {
        require_positive(r);
        return ext_rational(r.finite() / 2);
    }
    value_type meet_hint(const value_type& r, const value_type& s) const {
        require_positive(r);
        require_positive(s);
        return r < s ? r : s;
    }
    bool in_carrier(const value_type&) const { return true; }
    std::string format(const value_type& v) const { return format_ext_rational(v); }
    value_type parse(std::string_view token) const { return parse_ext_rational(token); }
    std::string name() const { return "ereal"; }

private:
    void require_positive(const value_type& r) const {
        if (!is_positive(r)) throw std::invalid_argument("ereal: not a positive");
    }
};

/// A function Omega -> {0, inf}, stored as the bitmask of indices where it is
/// inf. Addition is union, the order is inclusion, and the ball relation
/// coincides with the order (it is not irreflexive).
struct zero_inf_fn {
    std::uint64_t infinity_set = 0;
    auto operator<=>(const zero_inf_fn&) const = default;
};

/// Functions on a fixed finite index set Omega of size omega (<= 64) with
/// values in {0, inf}. P is the whole carrier and halving is the identity:
/// r + r = r, so the exact-halving axiom holds with an idempotent half.
class zeroinf_semigroup {
public:
    using value_type = zero_inf_fn;

    explicit zeroinf_semigroup(int omega) : omega_(omega) {
        if (omega < 0 || omega > 64)
            throw std::invalid_argument("zeroinf: omega must be in 0..64");
    }

    int omega() const { return omega_; }

    value_type zero() const { return {}; }
    value_type add(const value_type& a, const value_type& b) const {
        return {a.infinity_set | b.infinity_set};
    }
    bool leq(const value_type& a, const value_type& b) const {
        return (a.infinity_set & ~b.infinity_set) == 0;
    }
    bool ball_lt(const value_type& a, const value_type& r) const { return leq(a, r); }
    bool is_positive(const value_type& r) const { return in_carrier(r); }
    value_type half(const value_type& r) const { return r; }
    value_type meet_hint(const value_type& r, const value_type& s) const {
        return {r.infinity_set & s.infinity_set};
    }
    bool in_carrier(const value_type& v) const {
        return omega_ == 64 || (v.infinity_set >> omega_) == 0;
    }
    std::string format(const value_type& v) const;
    value_type parse(std::string_view token) const;
    std::string name() const { return "zeroinf"; }

private:
    int omega_;
};

/// Componentwise product of two instances; P = P_left x P_right. Test
/// plumbing for combining instances.
template <value_semigroup L, value_semigroup R>
struct product_semigroup {
    using value_type = std::pair<typename L::value_type, typename R::value_type>;

    L left;
    R right;

    value_type zero() const { return {left.zero(), right.zero()}; }
    value_type add(const value_type& a, const value_type& b) const {
        return {left.add(a.first, b.first), right.add(a.second, b.second)};
    }
    bool leq(const value_type& a, const value_type& b) const {
        return left.leq(a.first, b.first) && right.leq(a.second, b.second);
    }
    bool ball_lt(const value_type& a, const value_type& r) const {
        return left.ball_lt(a.first, r.first) && right.ball_lt(a.second, r.second);
    }
    bool is_positive(const value_type& r) const {
        return left.is_positive(r.first) && right.is_positive(r.second);
    }
    value_type half(const value_type& r) const {
        return {left.half(r.first), right.half(r.second)};
    }
    value_type meet_hint(const value_type& r, const value_type& s) const {
        return {left.meet_hint(r.first, s.first), right.meet_hint(r.second, s.second)};
    }
    bool in_carrier(const value_type& v) const {
        return left.in_carrier(v.first) && right.in_carrier(v.second);
    }
    std::string format(const value_type& v) const {
        return "(" + left.format(v.first) + ", " + right.format(v.second) + ")";
    }
    std::string name() const { return "product(" + left.name() + "," + right.name() + ")"; }
};

/// c * a with c a finite positive rational; inf is absorbing.
ext_rational scale(const ext_rational& a, const rational& c);

/// Exhaustively checks the monoid laws, exact halving, positives closure and
/// the ball axioms V1-V4 over the given samples. Each clause either passes or
/// carries a concrete counterexample. Malformed samples (outside the carrier
/// or, for the positives list, outside P) are rejected up front.
template <value_semigroup S>
report check_value_axioms(const S& s,
                          const std::vector<typename S::value_type>& elements,
                          const std::vector<typename S::value_type>& positives) {
    using V = typename S::value_type;
    if (elements.empty() || positives.empty())
        throw std::invalid_argument("check_value_axioms: empty sample");
    for (const V& a : elements)
        if (!s.in_carrier(a))
            throw std::invalid_argument("check_value_axioms: sample element not in carrier: " +
                                        s.format(a));
    for (const V& r : positives) {
        if (!s.in_carrier(r))
            throw std::invalid_argument("check_value_axioms: sample positive not in carrier: " +
                                        s.format(r));
        if (!s.is_positive(r))
            throw std::invalid_argument("check_value_axioms: sample positive not in P: " +
                                        s.format(r));
    }

    report rep;

    auto check = [&rep](std::string name, auto&& scan) {
        std::string witness = scan();
        if (witness.empty())
            rep.add_pass(std::move(name));
        else
            rep.add_fail(std::move(name), std::move(witness));
    };

    check("add_identity", [&]() -> std::string {
        for (const V& a : elements)
            if (!(s.add(a, s.zero()) == a))
                return "a = " + s.format(a) + ": a + 0 = " + s.format(s.add(a, s.zero()));
        return {};
    });

    check("add_commutative", [&]() -> std::string {
        for (const V& a : elements)
            for (const V& b : elements)
                if (!(s.add(a, b) == s.add(b, a)))
                    return "a = " + s.format(a) + ", b = " + s.format(b);
        return {};
    });

    check("add_associative", [&]() -> std::string {
        for (const V& a : elements)
            for (const V& b : elements)
                for (const V& c : elements)
                    if (!(s.add(s.add(a, b), c) == s.add(a, s.add(b, c))))
                        return "a = " + s.format(a) + ", b = " + s.format(b) +
                               ", c = " + s.format(c);
        return {};
    });

    check("halving_exact", [&]() -> std::string {
        for (const V& r : positives) {
            V h = s.half(r);
            if (!(s.add(h, h) == r))
                return "r = " + s.format(r) + ": half(r) + half(r) = " +
                       s.format(s.add(h, h));
        }
        return {};
    });

    check("positives_closed", [&]() -> std::string {
        for (const V& r : positives)
            if (!s.is_positive(s.half(r)))
                return "half(" + s.format(r) + ") not in P";
        for (const V& r : positives)
            for (const V& t : positives)
                if (!s.is_positive(s.meet_hint(r, t)))
                    return "meet_hint(" + s.format(r) + ", " + s.format(t) + ") not in P";
        return {};
    });

    check("ball_v1_zero", [&]() -> std::string {
        for (const V& r : positives)
            if (!s.ball_lt(s.zero(), r)) return "r = " + s.format(r);
        return {};
    });

    check("ball_v2_halving", [&]() -> std::string {
        for (const V& r : positives) {
            V h = s.half(r);
            for (const V& a : elements)
                for (const V& b : elements)
                    if (s.ball_lt(a, h) && s.ball_lt(b, h) && !s.ball_lt(s.add(a, b), r))
                        return "a = " + s.format(a) + ", b = " + s.format(b) +
                               ", r = " + s.format(r);
        }
        return {};
    });

    check("ball_v3_lower", [&]() -> std::string {
        for (const V& a : elements)
            for (const V& b : elements)
                for (const V& r : positives)
                    if (s.leq(a, b) && s.ball_lt(b, r) && !s.ball_lt(a, r))
                        return "a = " + s.format(a) + ", b = " + s.format(b) +
                               ", r = " + s.format(r);
        return {};
    });

    check("ball_v4_meet", [&]() -> std::string {
        for (const V& r : positives)
            for (const V& t : positives) {
                V m = s.meet_hint(r, t);
                for (const V& a : elements)
                    if (s.ball_lt(a, m) && !(s.ball_lt(a, r) && s.ball_lt(a, t)))
                        return "a = " + s.format(a) + ", r = " + s.format(r) +
                               ", s = " + s.format(t);
            }
        return {};
    });

    return rep;
}

} // namespace qtop
