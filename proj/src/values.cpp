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

#include "qtop/values.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>

namespace qtop {

namespace {

constexpr long long kMaxMagnitude = 1000000000; // parser cap, keeps int64 arithmetic exact

long long parse_int(std::string_view text, std::string_view what) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                    std::string(text) + "'");
    if (out > kMaxMagnitude || out < -kMaxMagnitude)
        throw std::invalid_argument(std::string(what) + " out of range: '" +
                                    std::string(text) + "'");
    return out;
}

} // namespace

std::string format_rational(const rational& q) {
    std::string out = std::to_string(q.numerator());
    if (q.denominator() != 1) out += "/" + std::to_string(q.denominator());
    return out;
}

rational parse_rational(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("empty rational");
    auto slash = token.find('/');
    if (slash == std::string_view::npos) return rational(parse_int(token, "rational"));
    long long num = parse_int(token.substr(0, slash), "numerator");
    long long den = parse_int(token.substr(slash + 1), "denominator");
    if (den <= 0) throw std::invalid_argument("denominator must be positive: '" +
                                              std::string(token) + "'");
    return rational(num, den);
}

std::string format_ext_rational(const ext_rational& v) {
    if (v.is_inf()) return "inf";
    return format_rational(v.finite());
}

ext_rational parse_ext_rational(std::string_view token) {
    if (token == "inf") return ext_rational::inf();
    rational q = parse_rational(token);
    if (q < rational(0))
        throw std::invalid_argument("distance values must be nonnegative: '" +
                                    std::string(token) + "'");
    return ext_rational(q);
}

std::string zeroinf_semigroup::format(const value_type& v) const {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t m = v.infinity_set; m != 0; m &= m - 1) {
        if (!first) out += ",";
        out += std::to_string(std::countr_zero(m));
        first = false;
    }
    out += "}";
    return out;
}

zeroinf_semigroup::value_type zeroinf_semigroup::parse(std::string_view token) const {
    if (token.size() < 2 || token.front() != '{' || token.back() != '}')
        throw std::invalid_argument("malformed infinity set: '" + std::string(token) + "'");
    std::string_view body = token.substr(1, token.size() - 2);
    zero_inf_fn v;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        long long idx = parse_int(item, "infinity-set index");
        if (idx < 0 || idx >= omega_)
            throw std::invalid_argument("infinity-set index out of range: " +
                                        std::to_string(idx));
        v.infinity_set |= std::uint64_t{1} << idx;
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return v;
}

ext_rational scale(const ext_rational& a, const rational& c) {
    if (c <= rational(0)) throw std::invalid_argument("scale: factor must be positive");
    if (a.is_inf()) return ext_rational::inf();
    return ext_rational(a.finite() * c);
}

} // namespace qtop
