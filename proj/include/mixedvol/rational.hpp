#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedvol {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", "p/q" or a decimal like "0.25" into a canonical
/// rational. Throws std::invalid_argument on malformed input or a zero
/// denominator.
inline Rational parse_rational(const std::string& text) {
    if (text.find_first_of("0123456789") == std::string::npos) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (slash == std::string::npos && dot == std::string::npos) {
            return Rational(Integer(text));
        }
        if (slash == std::string::npos) {
            const std::string head = text.substr(0, dot);
            const std::string tail = text.substr(dot + 1);
            if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("malformed rational: " + text);
            }
            const bool neg = !head.empty() && head[0] == '-';
            const std::string digits = (neg || (!head.empty() && head[0] == '+'))
                                           ? head.substr(1)
                                           : head;
            Integer num(digits.empty() ? "0" : digits);
            Integer den = 1;
            for (char c : tail) {
                num = num * 10 + (c - '0');
                den *= 10;
            }
            return Rational(neg ? -num : num, den);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

/// Canonical string form "p" or "p/q" with q > 1 and gcd(p, q) = 1.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Fixed-point decimal rendering, round-toward-zero, for display only.
inline std::string rational_to_decimal(const Rational& q, int digits = 6) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    Integer ipart = num / den;
    Integer rem = num % den;
    std::ostringstream out;
    if (neg && (ipart != 0 || rem != 0)) out << '-';
    out << ipart;
    if (digits > 0) {
        out << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out << (rem / den);
            rem %= den;
        }
    }
    return out.str();
}

inline double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline Integer integer_pow(const Integer& base, long long exp) {
    Integer result = 1;
    Integer b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline Rational rational_pow(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("0 has no negative power");
        return Rational(integer_pow(denominator(base), -exp),
                        integer_pow(numerator(base), -exp));
    }
    return Rational(integer_pow(numerator(base), exp),
                    integer_pow(denominator(base), exp));
}

}  // namespace mixedvol
