#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lensinv/error.hpp"

namespace lensinv {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    explicit Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0)
            throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(std::int64_t num, std::int64_t den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)))
    {
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw Error(ErrorKind::division_by_zero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const
    {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Converts an Integer to int64, throwing if it does not fit.
inline std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw Error(ErrorKind::invalid_argument, "integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

} // namespace lensinv
