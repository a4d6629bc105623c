// Copyright 2026 The apcshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apcshare/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace apcshare {

namespace {

mpz_class pow10(unsigned exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

// floor(num/den) for den > 0.
mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("rational denominator must be nonzero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_decimal(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);

    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string digits;
    unsigned fraction_digits = 0;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : body) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + std::string(text));
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++fraction_digits;
        } else {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
    }
    if (!seen_digit)
        throw std::invalid_argument("malformed decimal: " + std::string(text));

    mpz_class scaled(digits.empty() ? "0" : digits, 10);
    if (negative) scaled = -scaled;
    Rational r(scaled, pow10(fraction_digits));
    r.canonicalize();
    return r;
}

Rational round_half_up(const Rational& value, unsigned decimals) {
    const mpz_class scale = pow10(decimals);
    const int sign = sgn(value);
    if (sign == 0) return Rational(0);

    Rational magnitude = abs(value) * Rational(scale);
    // floor(x + 1/2) == floor((2*num + den) / (2*den))
    mpz_class units =
        floor_div(2 * magnitude.get_num() + magnitude.get_den(), 2 * magnitude.get_den());
    if (sign < 0) units = -units;
    Rational r(units, scale);
    r.canonicalize();
    return r;
}

long long round_half_up_to_int64(const Rational& value) {
    Rational rounded = round_half_up(value, 0);
    mpz_class units = rounded.get_num();
    if (!units.fits_slong_p())
        throw std::overflow_error("rounded value does not fit in 64 bits");
    return units.get_si();
}

std::string format_decimal(const Rational& value, unsigned decimals) {
    const Rational rounded = round_half_up(value, decimals);
    mpz_class units = rounded.get_num() * pow10(decimals) / rounded.get_den();

    const bool negative = units < 0;
    if (negative) units = -units;
    std::string digits = units.get_str();
    if (digits.size() <= decimals)
        digits.insert(0, decimals + 1 - digits.size(), '0');

    std::string out;
    if (negative) out.push_back('-');
    out.append(digits, 0, digits.size() - decimals);
    if (decimals > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - decimals, decimals);
    }
    return out;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace apcshare
