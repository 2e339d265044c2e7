#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lensinv/error.hpp"
#include "lensinv/number_theory.hpp"
#include "lensinv/rational.hpp"

namespace lensinv {

inline constexpr std::int64_t default_max_order = 5000;

namespace detail {

inline std::atomic<std::int64_t>& max_order_setting()
{
    static std::atomic<std::int64_t> value{default_max_order};
    return value;
}

/// Q(zeta_N) as Q[x]/Phi_N: the monic integer polynomial Phi_N, low degree first.
struct FieldData {
    std::int64_t order = 1;
    std::int64_t degree = 1;
    std::vector<long> phi;
};

using ZPoly = std::vector<Integer>;

// Exact quotient of num by a monic divisor.
inline ZPoly divide_exact_monic(ZPoly num, const ZPoly& den)
{
    const std::size_t dd = den.size() - 1;
    ZPoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        Integer c = num[i];
        quot[i - dd] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    return quot;
}

class FieldCache {
public:
    static FieldCache& instance()
    {
        static FieldCache cache;
        return cache;
    }

    std::shared_ptr<const FieldData> get(std::int64_t n)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = fields_.find(n); it != fields_.end())
                return it->second;
        }
        auto built = build(n);
        std::unique_lock lock(mutex_);
        auto [it, inserted] = fields_.emplace(n, std::move(built));
        return it->second;
    }

private:
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
    std::shared_ptr<const FieldData> build(std::int64_t n)
    {
        ZPoly poly(static_cast<std::size_t>(n) + 1);
        poly[0] = -1;
        poly[static_cast<std::size_t>(n)] = 1;
        for (std::int64_t d = 1; d < n; ++d) {
            if (n % d != 0)
                continue;
            const auto sub = get(d);
            ZPoly den(sub->phi.size());
            for (std::size_t i = 0; i < den.size(); ++i)
                den[i] = sub->phi[i];
            poly = divide_exact_monic(std::move(poly), den);
        }
        auto data = std::make_shared<FieldData>();
        data->order = n;
        data->degree = static_cast<std::int64_t>(poly.size()) - 1;
        data->phi.reserve(poly.size());
        for (const auto& c : poly) {
            if (!c.fits_slong_p())
                throw Error(ErrorKind::order_too_large, "cyclotomic polynomial coefficient overflow");
            data->phi.push_back(c.get_si());
        }
        return data;
    }

    std::shared_mutex mutex_;
    std::unordered_map<std::int64_t, std::shared_ptr<const FieldData>> fields_;
};

inline std::shared_ptr<const FieldData> field(std::int64_t n)
{
    if (n < 1)
        throw Error(ErrorKind::invalid_argument, "cyclotomic order must be positive");
    if (n > max_order_setting().load())
        throw Error(ErrorKind::order_too_large,
                    "order " + std::to_string(n) + " exceeds the configured maximum "
                        + std::to_string(max_order_setting().load()));
    return FieldCache::instance().get(n);
}

using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

// Reduces a polynomial of any degree modulo Phi_N in place; result has size degree(Phi_N).
inline void reduce_mod_phi(QPoly& v, const FieldData& f)
{
    const auto d = static_cast<std::size_t>(f.degree);
    for (std::size_t i = v.size(); i-- > d;) {
        if (sgn(v[i]) == 0)
            continue;
        const mpq_class c = v[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (f.phi[j] != 0)
                v[i - d + j] -= c * f.phi[j];
        }
        v[i] = 0;
    }
    v.resize(d);
}

// Polynomial division with remainder over Q; divisor must be non-zero and trimmed.
inline std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den)
{
    trim(num);
    if (num.size() < den.size())
        return {QPoly{}, num};
    QPoly quot(num.size() - den.size() + 1);
    const mpq_class lead = den.back();
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (sgn(num[i]) == 0)
            continue;
        mpq_class c = num[i] / lead;
        const std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= c * den[j];
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(quot);
    return {quot, num};
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b)
{
    QPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

} // namespace detail

/// Upper bound on the cyclotomic order any operation may create.
inline std::int64_t max_order() { return detail::max_order_setting().load(); }
inline void set_max_order(std::int64_t n) { detail::max_order_setting().store(n); }

/// Degree of the N-th cyclotomic polynomial, i.e. Euler's phi(N).
inline std::int64_t cyclotomic_degree(std::int64_t n) { return detail::field(n)->degree; }

/// Coefficients of Phi_N, constant term first.
inline std::vector<long> cyclotomic_polynomial(std::int64_t n) { return detail::field(n)->phi; }

/// An element of Q(zeta_N), N = order(), stored as the unique polynomial in
/// zeta_N of degree < phi(N). Values of different orders are combined in
/// Q(zeta_lcm).
class Cyclotomic {
public:
    /// Zero in Q(zeta_1) = Q.
    Cyclotomic() : order_(1), coeffs_(1) {}

    explicit Cyclotomic(const Rational& x, std::int64_t order = 1) : order_(order)
    {
        const auto f = detail::field(order);
        coeffs_.assign(static_cast<std::size_t>(f->degree), Rational());
        coeffs_[0] = x;
    }

    /// Builds from coefficients over the power basis; length must be phi(order).
    static Cyclotomic from_coeffs(std::int64_t order, std::vector<Rational> coeffs)
    {
        const auto f = detail::field(order);
        if (static_cast<std::int64_t>(coeffs.size()) != f->degree)
            throw Error(ErrorKind::invalid_argument,
                        "expected " + std::to_string(f->degree) + " coefficients for order "
                            + std::to_string(order));
        Cyclotomic out;
        out.order_ = order;
        out.coeffs_ = std::move(coeffs);
        return out;
    }

    std::int64_t order() const noexcept { return order_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    bool is_rational() const
    {
        return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    /// The same value viewed in Q(zeta_M); M must be a multiple of order().
    Cyclotomic lift(std::int64_t m) const
    {
        if (m <= 0 || m % order_ != 0)
            throw Error(ErrorKind::invalid_argument,
                        "cannot lift order " + std::to_string(order_) + " to " + std::to_string(m));
        if (m == order_)
            return *this;
        const auto f = detail::field(m);
        const std::int64_t step = m / order_;
        detail::QPoly v(static_cast<std::size_t>(std::max<std::int64_t>(m, f->degree)));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            v[i * static_cast<std::size_t>(step)] = coeffs_[i].raw();
        return from_cyclic(*f, std::move(v));
    }

    Cyclotomic operator-() const
    {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
    {
        return combine(a, b, [](Rational& x, const Rational& y) { x += y; });
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b)
    {
        return combine(a, b, [](Rational& x, const Rational& y) { x -= y; });
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
    {
        if (a.order_ != b.order_) {
            const std::int64_t n = std::lcm(a.order_, b.order_);
            return a.lift(n) * b.lift(n);
        }
        const auto f = detail::field(a.order_);
        const auto n = static_cast<std::size_t>(a.order_);
        detail::QPoly v(std::max(n, a.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero())
                    continue;
                v[(i + j) % n] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
            }
        }
        return from_cyclic(*f, std::move(v));
    }

    friend Cyclotomic operator*(const Rational& s, Cyclotomic x)
    {
        for (auto& c : x.coeffs_)
            c *= s;
        return x;
    }
    friend Cyclotomic operator*(const Cyclotomic& x, const Rational& s) { return s * x; }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    Cyclotomic inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
        const auto f = detail::field(order_);
        detail::QPoly r0(f->phi.begin(), f->phi.end());
        detail::QPoly r1;
        for (const auto& c : coeffs_)
            r1.push_back(c.raw());
        detail::trim(r1);
        detail::QPoly s0, s1{mpq_class(1)};
        while (!r1.empty()) {
            auto [quot, rem] = detail::divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto next = detail::poly_sub(s0, detail::poly_mul(quot, s1));
            s0 = std::move(s1);
            s1 = std::move(next);
        }
        // Phi_N is irreducible, so the gcd r0 is a non-zero constant.
        const mpq_class g = r0.at(0);
        for (auto& c : s0)
            c /= g;
        s0.resize(std::max<std::size_t>(s0.size(), 1));
        return from_cyclic(*f, std::move(s0));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    /// Integer power; negative exponents invert first.
    Cyclotomic pow(std::int64_t e) const
    {
        Cyclotomic base = e < 0 ? inverse() : *this;
        std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
        Cyclotomic acc(Rational(1), order_);
        while (n > 0) {
            if (n & 1u)
                acc = acc * base;
            n >>= 1;
            if (n > 0)
                base = base * base;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b)
    {
        if (a.order_ == b.order_)
            return a.coeffs_ == b.coeffs_;
        const std::int64_t n = std::lcm(a.order_, b.order_);
        return a.lift(n).coeffs_ == b.lift(n).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Human-readable polynomial in z = zeta_N, e.g. "1 + 2*z" (order 3).
    std::string str(const std::string& symbol = "z") const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero())
                continue;
            Rational mag = c.sign() < 0 ? -c : c;
            if (first)
                os << (c.sign() < 0 ? "-" : "");
            else
                os << (c.sign() < 0 ? " - " : " + ");
            first = false;
            const bool unit = mag == Rational(1);
            if (i == 0 || !unit)
                os << mag;
            if (i > 0) {
                if (!unit)
                    os << "*";
                os << symbol;
                if (i > 1)
                    os << "^" << i;
            }
        }
        if (first)
            os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x)
    {
        return os << x.str() << " [order " << x.order_ << "]";
    }

    /// Reduces a representation modulo x^N - 1 (any length) to canonical form.
    static Cyclotomic from_cyclic(const detail::FieldData& f, detail::QPoly v)
    {
        detail::reduce_mod_phi(v, f);
        Cyclotomic out;
        out.order_ = f.order;
        out.coeffs_.clear();
        out.coeffs_.reserve(v.size());
        for (auto& c : v)
            out.coeffs_.push_back(Rational(Integer(c.get_num()), Integer(c.get_den())));
        return out;
    }

private:
    template <typename Op>
    static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, Op op)
    {
        if (a.order_ != b.order_) {
            const std::int64_t n = std::lcm(a.order_, b.order_);
            return combine(a.lift(n), b.lift(n), op);
        }
        Cyclotomic out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            op(out.coeffs_[i], b.coeffs_[i]);
        return out;
    }

    std::int64_t order_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^k, with k reduced mod N.
inline Cyclotomic root_of_unity(std::int64_t n, std::int64_t k)
{
    const auto f = detail::field(n);
    detail::QPoly v(static_cast<std::size_t>(std::max(n, f->degree)));
    v[static_cast<std::size_t>(floor_mod(k, n))] = 1;
    return Cyclotomic::from_cyclic(*f, std::move(v));
}

/// e_N^x = exp(2 pi i x / N) for rational x = u/d in lowest terms, realized as zeta_{N d}^u.
inline Cyclotomic root_of_unity(std::int64_t n, const Rational& x)
{
    const std::int64_t u = to_int64(x.numerator());
    const std::int64_t d = to_int64(x.denominator());
    return root_of_unity(n * d, u);
}

/// Image of x under the automorphism zeta_N -> zeta_N^k.
inline Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t k)
{
    const std::int64_t n = x.order();
    if (std::gcd(floor_mod(k, n), n) != 1 && n > 1)
        throw Error(ErrorKind::not_coprime,
                    std::to_string(k) + " is not a unit modulo " + std::to_string(n));
    const auto f = detail::field(n);
    detail::QPoly v(static_cast<std::size_t>(std::max(n, f->degree)));
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i].is_zero())
            continue;
        v[static_cast<std::size_t>(mul_mod(static_cast<std::int64_t>(i), k, n))] += x.coeffs()[i].raw();
    }
    return Cyclotomic::from_cyclic(*f, std::move(v));
}

/// Complex conjugation, the automorphism zeta -> zeta^-1.
inline Cyclotomic conjugate(const Cyclotomic& x) { return galois_apply(x, -1); }

/// Value under the embedding zeta_N -> exp(2 pi i / N).
inline std::complex<double> to_complex(const Cyclotomic& x)
{
    std::complex<double> acc;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(x.order());
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i].is_zero())
            continue;
        acc += x.coeffs()[i].to_double() * std::polar(1.0, step * static_cast<double>(i));
    }
    return acc;
}

/// Re-expresses x in Q(zeta_d), d | order(x). Throws NotInSubfield when x is
/// outside that subfield.
///
/// Solves x = sum_i y_i zeta_d^i over the lifted power basis of Q(zeta_d) by
/// exact Gaussian elimination; the system is consistent exactly when x lies in
/// the subfield.
inline Cyclotomic descend(const Cyclotomic& x, std::int64_t d)
{
    const std::int64_t n = x.order();
    if (d <= 0 || n % d != 0)
        throw Error(ErrorKind::invalid_argument,
                    std::to_string(d) + " does not divide order " + std::to_string(n));
    if (d == n)
        return x;

    const auto sub = detail::field(d);
    const auto rows = static_cast<std::size_t>(x.degree());
    const auto cols = static_cast<std::size_t>(sub->degree);

    // Augmented matrix [basis | x], row-major.
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        const Cyclotomic b = root_of_unity(n, static_cast<std::int64_t>(j) * (n / d));
        for (std::size_t i = 0; i < rows; ++i)
            m[i][j] = b.coeffs()[i].raw();
    }
    for (std::size_t i = 0; i < rows; ++i)
        m[i][cols] = x.coeffs()[i].raw();

    std::vector<std::size_t> pivot_row(cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t sel = rank;
        while (sel < rows && sgn(m[sel][col]) == 0)
            ++sel;
        if (sel == rows)
            throw Error(ErrorKind::invalid_argument, "degenerate subfield basis");
        std::swap(m[rank], m[sel]);
        const mpq_class lead = m[rank][col];
        for (std::size_t j = col; j <= cols; ++j)
            m[rank][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || sgn(m[i][col]) == 0)
                continue;
            const mpq_class factor = m[i][col];
            for (std::size_t j = col; j <= cols; ++j)
                m[i][j] -= factor * m[rank][j];
        }
        pivot_row[col] = rank++;
    }
    for (std::size_t i = rank; i < rows; ++i) {
        if (sgn(m[i][cols]) != 0)
            throw Error(ErrorKind::not_in_subfield,
                        "element of Q(zeta_" + std::to_string(n) + ") is not in Q(zeta_" + std::to_string(d) + ")");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        const mpq_class& v = m[pivot_row[col]][cols];
        coeffs.emplace_back(Integer(v.get_num()), Integer(v.get_den()));
    }
    return Cyclotomic::from_coeffs(d, std::move(coeffs));
}

/// Quadratic Gauss sum sum_{j=1}^{c} zeta_c^{j^2} for odd c; equals eps(c) sqrt(c).
inline Cyclotomic gauss_sum(std::int64_t c)
{
    if (c < 1 || c % 2 == 0)
        throw Error(ErrorKind::even_input, "Gauss sum needs an odd positive argument, got " + std::to_string(c));
    const auto f = detail::field(c);
    detail::QPoly v(static_cast<std::size_t>(std::max(c, f->degree)));
    for (std::int64_t j = 1; j <= c; ++j)
        v[static_cast<std::size_t>(mul_mod(j, j, c))] += 1;
    return Cyclotomic::from_cyclic(*f, std::move(v));
}

/// eps(c) for odd c: 1 if c = 1 (mod 4), i if c = 3 (mod 4); an element of Q(zeta_4).
inline Cyclotomic epsilon(std::int64_t c)
{
    if (c % 2 == 0)
        throw Error(ErrorKind::even_input, "epsilon needs an odd argument, got " + std::to_string(c));
    return floor_mod(c, 4) == 1 ? Cyclotomic(Rational(1), 4) : root_of_unity(4, 1);
}

} // namespace lensinv
