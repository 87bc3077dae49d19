#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace avc {

// Exact rational on 64-bit numerator/denominator. All table machinery compares
// bounds with exact arithmetic because several capability cells sit exactly on
// a tie; floating point would flip them. Intermediates use __int128 so the
// desk-scale magnitudes here (products of grid sizes and exponents) never
// overflow.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    long long floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }
    long long ceil() const { return -Rat(-num, den).floor(); }
    double to_double() const { return double(num) / double(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from128(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        r.num = (long long)n;
        r.den = d == 0 ? 1 : (long long)d;
        if (r.den == 0) throw std::invalid_argument("rational with zero denominator");
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
};

}  // namespace avc
