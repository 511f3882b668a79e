#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulerext {

/* Exact rational on 64-bit integers, always normalized (gcd 1, den > 0).
 * Every bound comparison in this library goes through this type; verdicts
 * must never depend on floating point. Intermediate products use __int128,
 * which is far wider than anything a desk-scale graph can produce.
 */
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long value) : num(value), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from_wide(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from_wide((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = (__int128)a.num * b.den;
        __int128 rhs = (__int128)b.num * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd_wide(an, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num = (long long)n;
        r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd_wide(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
};

/// Ceiling of a/b for nonnegative a, positive b.
inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div needs positive divisor");
    if (a < 0) throw std::invalid_argument("ceil_div needs nonnegative dividend");
    return (a + b - 1) / b;
}

/// Largest x >= 0 with x*x <= m/n, i.e. floor(sqrt(m/n)) without rounding error.
inline long long floor_sqrt_ratio(long long m, long long n) {
    if (n <= 0) throw std::invalid_argument("floor_sqrt_ratio needs positive denominator");
    if (m < 0) throw std::invalid_argument("floor_sqrt_ratio needs nonnegative numerator");
    long long x = 0;
    while ((__int128)(x + 1) * (x + 1) * n <= (__int128)m) ++x;
    return x;
}

}  // namespace eulerext
