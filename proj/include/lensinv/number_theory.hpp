#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "lensinv/error.hpp"
#include "lensinv/rational.hpp"

namespace lensinv {

/// Non-negative remainder of a modulo n (n > 0).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t n) noexcept
{
    std::int64_t m = a % n;
    return m < 0 ? m + n : m;
}

/// Product modulo n without intermediate overflow.
constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) noexcept
{
    auto prod = static_cast<__int128>(floor_mod(a, n)) * floor_mod(b, n);
    return static_cast<std::int64_t>(prod % n);
}

struct ExtGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g. gcd(0, 0) is (0, 0, 0).
constexpr ExtGcd ext_gcd(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    if (old_r == 0)
        return {0, 0, 0};
    return {old_r, old_s, old_t};
}

/// Element of Z/nZ with n > 0.
class Residue {
public:
    Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus)
    {
        if (modulus <= 0)
            throw Error(ErrorKind::invalid_argument, "residue modulus must be positive");
        value_ = floor_mod(value, modulus);
    }

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    friend Residue operator+(const Residue& a, const Residue& b)
    {
        check_same(a, b);
        return {a.value_ + b.value_, a.modulus_};
    }
    friend Residue operator-(const Residue& a, const Residue& b)
    {
        check_same(a, b);
        return {a.value_ - b.value_, a.modulus_};
    }
    friend Residue operator*(const Residue& a, const Residue& b)
    {
        check_same(a, b);
        return {mul_mod(a.value_, b.value_, a.modulus_), a.modulus_};
    }
    Residue operator-() const { return {-value_, modulus_}; }

    friend bool operator==(const Residue& a, const Residue& b) noexcept
    {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Residue& x)
    {
        return os << x.value_ << " (mod " << x.modulus_ << ")";
    }

private:
    static void check_same(const Residue& a, const Residue& b)
    {
        if (a.modulus_ != b.modulus_)
            throw Error(ErrorKind::modulus_mismatch,
                        "moduli " + std::to_string(a.modulus_) + " and " + std::to_string(b.modulus_));
    }

    std::int64_t value_ = 0;
    std::int64_t modulus_ = 1;
};

/// The residue v in [0, n) with a*v = 1 (mod n).
inline Residue mod_inverse(std::int64_t a, std::int64_t n)
{
    if (n <= 0)
        throw Error(ErrorKind::invalid_argument, "modulus must be positive");
    auto [g, x, y] = ext_gcd(floor_mod(a, n), n);
    if (g != 1)
        throw Error(ErrorKind::not_coprime,
                    std::to_string(a) + " is not invertible modulo " + std::to_string(n));
    return {x, n};
}

/// Jacobi symbol (a|n) for odd n >= 1. Negative a is reduced mod n first.
inline int jacobi_symbol(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        throw Error(ErrorKind::even_modulus, "Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    a = floor_mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t n8 = n % 8;
            if (n8 == 3 || n8 == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

/// Image a*b' of the fraction a/b in Z/rZ. Uses the reduced form of x.
inline Residue rational_mod(const Rational& x, std::int64_t r)
{
    if (r <= 0)
        throw Error(ErrorKind::invalid_argument, "modulus must be positive");
    Integer rr(static_cast<long>(r));
    std::int64_t num = to_int64(Integer(x.numerator() % rr));
    std::int64_t den = to_int64(Integer(x.denominator() % rr));
    if (std::gcd(den, r) != 1)
        throw Error(ErrorKind::not_coprime,
                    "denominator of " + x.str() + " is not invertible modulo " + std::to_string(r));
    return Residue(num, r) * mod_inverse(den, r);
}

struct BezoutPair {
    std::int64_t u_prime;
    std::int64_t v_prime;
};

/// u'u + v'v = 1 with 0 <= u' < |v|; (0, v) when |v| = 1.
inline BezoutPair bezout_pair(std::int64_t u, std::int64_t v)
{
    auto [g, x, y] = ext_gcd(u, v);
    if (g != 1)
        throw Error(ErrorKind::not_coprime,
                    std::to_string(u) + " and " + std::to_string(v) + " are not coprime");
    std::int64_t av = std::abs(v);
    if (av == 0)
        return {u, 0}; // u = +-1
    if (av == 1)
        return {0, v};
    std::int64_t u_prime = floor_mod(x, av);
    // (1 - u'u) is divisible by v by construction.
    std::int64_t v_prime = static_cast<std::int64_t>((1 - static_cast<__int128>(u_prime) * u) / v);
    return {u_prime, v_prime};
}

/// Dedekind sum s(q, p) for coprime q and p > 0, by the reciprocity recursion
///
///     s(a, b) + s(b, a) = -1/4 + (a/b + b/a + 1/(ab)) / 12,
///
/// reducing the first argument modulo the second at every step (s is periodic
/// and odd in its first argument).
inline Rational dedekind_sum(std::int64_t q, std::int64_t p)
{
    if (p <= 0)
        throw Error(ErrorKind::invalid_argument, "Dedekind sum needs p > 0");
    if (std::gcd(q, p) != 1)
        throw Error(ErrorKind::not_coprime,
                    "s(" + std::to_string(q) + ", " + std::to_string(p) + ") needs coprime arguments");

    Rational total;
    int sign = 1;
    std::int64_t a = floor_mod(q, p);
    std::int64_t b = p;
    // Invariant: s(q, p) = total + sign * s(a, b).
    while (b > 1) {
        Rational ab(a, b);
        Rational ba(b, a);
        Rational corr = Rational(-1, 4) + (ab + ba + Rational(1, a * b)) / Rational(12);
        total += sign == 1 ? corr : -corr;
        sign = -sign;
        std::int64_t next = b % a;
        b = a;
        a = next;
    }
    return total;
}

} // namespace lensinv
