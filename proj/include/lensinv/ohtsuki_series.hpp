#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lensinv/error.hpp"
#include "lensinv/lens_invariants.hpp"
#include "lensinv/number_theory.hpp"
#include "lensinv/rational.hpp"

namespace lensinv {

inline constexpr std::size_t default_series_terms = 16;

/// Truncated power series sum_n coeffs[n] h^n in h = t - 1. Binary operations
/// truncate to the shorter operand.
class FormalSeries {
public:
    FormalSeries() = default;
    explicit FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    /// h^k with the given truncation order.
    static FormalSeries monomial(std::size_t k, std::size_t terms)
    {
        std::vector<Rational> c(terms);
        if (k < terms)
            c[k] = Rational(1);
        return FormalSeries(std::move(c));
    }

    std::size_t truncation_order() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Index of the first non-zero coefficient, or truncation_order() if none.
    std::size_t valuation() const
    {
        auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
        return static_cast<std::size_t>(it - coeffs_.begin());
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
        const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = a.coeffs_[i] + b.coeffs_[i];
        return FormalSeries(std::move(out));
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b)
    {
        const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = a.coeffs_[i] - b.coeffs_[i];
        return FormalSeries(std::move(out));
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
        const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < n; ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return FormalSeries(std::move(out));
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplicative inverse of a series with non-zero constant term.
    FormalSeries inverse() const
    {
        if (coeffs_.empty() || coeffs_[0].is_zero())
            throw Error(ErrorKind::not_invertible, "series has zero constant term");
        const std::size_t n = coeffs_.size();
        std::vector<Rational> out(n);
        const Rational inv0 = Rational(1) / coeffs_[0];
        out[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            Rational acc;
            for (std::size_t j = 1; j <= k; ++j)
                acc += coeffs_[j] * out[k - j];
            out[k] = -acc * inv0;
        }
        return FormalSeries(std::move(out));
    }

    /// Sum of the truncated series at a complex point.
    std::complex<double> evaluate(std::complex<double> h) const
    {
        std::complex<double> acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * h + coeffs_[i].to_double();
        return acc;
    }

private:
    std::vector<Rational> coeffs_;
};

/// a / b where both may vanish at h = 0: the common factor h^v (v = valuation
/// of b) is cancelled, so the quotient has min(len a, len b) - v terms.
inline FormalSeries divide(const FormalSeries& a, const FormalSeries& b)
{
    const std::size_t n = std::min(a.truncation_order(), b.truncation_order());
    const std::size_t v = b.valuation();
    if (v >= n)
        throw Error(ErrorKind::not_invertible, "denominator series vanishes to the truncation order");
    if (a.valuation() < v)
        throw Error(ErrorKind::not_invertible, "numerator vanishes to lower order than denominator");
    std::vector<Rational> num(a.coeffs().begin() + static_cast<std::ptrdiff_t>(v),
                              a.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Rational> den(b.coeffs().begin() + static_cast<std::ptrdiff_t>(v),
                              b.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
    return FormalSeries(std::move(num)) * FormalSeries(std::move(den)).inverse();
}

/// (1 + h)^alpha = sum_n C(alpha, n) h^n, C(alpha, n) = C(alpha, n-1) (alpha - n + 1) / n.
inline FormalSeries binomial_series(const Rational& alpha, std::size_t n_terms)
{
    if (n_terms < 1)
        throw Error(ErrorKind::invalid_argument, "series needs at least one term");
    std::vector<Rational> c(n_terms);
    c[0] = Rational(1);
    for (std::size_t n = 1; n < n_terms; ++n) {
        const auto k = static_cast<std::int64_t>(n);
        c[n] = c[n - 1] * (alpha - Rational(k - 1)) / Rational(k);
    }
    return FormalSeries(std::move(c));
}

/// The Ohtsuki series t^{-3 s(q,p)} (t^{1/2p} - t^{-1/2p}) / (t^{1/2} - t^{-1/2})
/// expanded in h = t - 1. One code path for every p, odd or even.
inline FormalSeries ohtsuki_tau(const LensSpace& l, std::size_t n_terms = default_series_terms)
{
    if (n_terms < 1)
        throw Error(ErrorKind::invalid_argument, "series needs at least one term");
    const Rational half_p(1, 2 * l.p);
    const Rational half(1, 2);
    const std::size_t m = n_terms + 1;
    const FormalSeries numerator = binomial_series(half_p, m) - binomial_series(-half_p, m);
    const FormalSeries denominator = binomial_series(half, m) - binomial_series(-half, m);
    const FormalSeries prefactor = binomial_series(Rational(-3) * dedekind_sum(l.q, l.p), n_terms);
    return prefactor * divide(numerator, denominator);
}

} // namespace lensinv
