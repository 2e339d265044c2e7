#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "lensinv/cyclotomic.hpp"
#include "lensinv/error.hpp"
#include "lensinv/number_theory.hpp"
#include "lensinv/rational.hpp"

namespace lensinv {

/// L(p, q) with 0 <= q < p and the Bezout data p* p + q* q = 1, 0 < q* < p.
/// For p = 1 (the 3-sphere) q = 0, q* = 0 and p* = 1.
struct LensSpace {
    std::int64_t p = 1;
    std::int64_t q = 0;
    std::int64_t q_star = 0;
    std::int64_t p_star = 1;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

inline LensSpace make_lens_space(std::int64_t p, std::int64_t q)
{
    if (p < 1)
        throw Error(ErrorKind::non_positive_p, "p must be positive, got " + std::to_string(p));
    if (p == 1)
        return {};
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::not_coprime,
                    "p = " + std::to_string(p) + " and q = " + std::to_string(q) + " are not coprime");
    LensSpace l;
    l.p = p;
    l.q = floor_mod(q, p);
    l.q_star = mod_inverse(l.q, p).value();
    l.p_star = static_cast<std::int64_t>((1 - static_cast<__int128>(l.q_star) * l.q) / p);
    return l;
}

enum class Branch { case_one, case_two, zero };

constexpr std::string_view to_string(Branch b) noexcept
{
    switch (b) {
    case Branch::case_one: return "CaseOne";
    case Branch::case_two: return "CaseTwo";
    case Branch::zero: return "Zero";
    }
    return "Unknown";
}

/// Sign conventions for the Case 2 root-of-unity bracket
///
///     B = e_r^{a 12 s(q,p)} e_{pc}^{b (r/c)' (q + q* - eta p* p)} e_{rc}^{c 2 eta (p/c)'}
///
/// as (a, b, c). Only `conjugated_proof` is a power of e_r in general and agrees
/// with the surgery oracle; the other two are kept for comparison.
enum class BracketConvention {
    conjugated_proof, ///< (-, +, -)
    theorem_literal,  ///< (-, -, +)
    proof_literal,    ///< (+, -, +)
};

constexpr std::string_view to_string(BracketConvention c) noexcept
{
    switch (c) {
    case BracketConvention::conjugated_proof: return "conjugated_proof";
    case BracketConvention::theorem_literal: return "theorem_literal";
    case BracketConvention::proof_literal: return "proof_literal";
    }
    return "unknown";
}

struct TauPrimeOptions {
    BracketConvention convention = BracketConvention::conjugated_proof;
    /// Replaces the canonical ((p/c)', (r/c)') by ((p/c)' + k r/c, (r/c)' - k p/c).
    std::int64_t bezout_shift = 0;
};

struct TauPrimeResult {
    Cyclotomic value;
    std::int64_t r = 0;
    std::int64_t c = 1;
    Branch branch = Branch::case_one;
    int eta = 0; ///< +1 or -1 for CaseTwo, 0 otherwise.
};

namespace detail {

inline void check_level(std::int64_t r)
{
    if (r == 1)
        throw Error(ErrorKind::order_one, "r must be greater than 1");
    if (r < 1 || r % 2 == 0)
        throw Error(ErrorKind::even_order, "r must be odd and greater than 1, got " + std::to_string(r));
}

struct BranchInfo {
    std::int64_t c;
    Branch branch;
    int eta;
};

inline BranchInfo classify(const LensSpace& l, std::int64_t r)
{
    const std::int64_t c = std::gcd(l.p, r);
    if (c == 1)
        return {c, Branch::case_one, 0};
    // c is odd and > 1, so it divides at most one of q* + 1 and q* - 1.
    if ((l.q_star + 1) % c == 0)
        return {c, Branch::case_two, 1};
    if ((l.q_star - 1) % c == 0)
        return {c, Branch::case_two, -1};
    return {c, Branch::zero, 0};
}

/// The quartic exponent (1 - r)/4 for r = 1 (mod 4), (1 + r)/4 for r = 3 (mod 4);
/// it is the inverse of 4 modulo r.
inline std::int64_t quarter_exponent(std::int64_t r)
{
    return floor_mod(r, 4) == 1 ? (1 - r) / 4 : (1 + r) / 4;
}

// (zeta_r^a - zeta_r^-a) / (zeta_r^b - zeta_r^-b)
inline Cyclotomic quantum_ratio(std::int64_t r, std::int64_t a, std::int64_t b)
{
    return (root_of_unity(r, a) - root_of_unity(r, -a)) / (root_of_unity(r, b) - root_of_unity(r, -b));
}

} // namespace detail

/// (3 s(q, p))^sqrt in Z/rZ: writes 3 s(q,p) = m / (4p) and returns m (4p)'.
inline Residue three_s_sqrt(const LensSpace& l, std::int64_t r)
{
    if (r <= 0 || std::gcd(4 * l.p, r) != 1)
        throw Error(ErrorKind::not_coprime,
                    "4p = " + std::to_string(4 * l.p) + " is not invertible modulo " + std::to_string(r));
    const Rational scaled = Rational(3) * dedekind_sum(l.q, l.p) * Rational(4 * l.p);
    if (!scaled.is_integer())
        throw Error(ErrorKind::integrality_failure, "12 p s(q,p) is not an integer");
    const Integer m = scaled.numerator();
    const std::int64_t m_mod = to_int64(Integer(m % Integer(static_cast<long>(r))));
    return Residue(m_mod, r) * mod_inverse(4 * l.p, r);
}

/// The Case 2 bracket B, computed in Q(zeta_{pr}) and returned without descent.
inline Cyclotomic case_two_bracket(const LensSpace& l, std::int64_t r, int eta, const TauPrimeOptions& opts = {})
{
    const std::int64_t c = std::gcd(l.p, r);
    const std::int64_t pc = l.p / c;
    const std::int64_t rc = r / c;
    auto [pc_inv, rc_inv] = bezout_pair(pc, rc);
    pc_inv += opts.bezout_shift * rc;
    rc_inv -= opts.bezout_shift * pc;

    int s12 = -1, s_pc = 1, s_rc = -1;
    switch (opts.convention) {
    case BracketConvention::conjugated_proof: break;
    case BracketConvention::theorem_literal: s12 = -1; s_pc = -1; s_rc = 1; break;
    case BracketConvention::proof_literal: s12 = 1; s_pc = -1; s_rc = 1; break;
    }

    const Rational twelve_s = Rational(12) * dedekind_sum(l.q, l.p);
    const std::int64_t pc_exp = rc_inv * (l.q + l.q_star - eta * l.p_star * l.p);
    const std::int64_t rc_exp = 2 * eta * pc_inv;
    return root_of_unity(r, Rational(s12) * twelve_s)
           * root_of_unity(l.p * c, s_pc * pc_exp)
           * root_of_unity(r * c, s_rc * rc_exp);
}

/// Exponent k with B = zeta_r^k, or nullopt if the bracket is not a power of zeta_r.
inline std::optional<std::int64_t> bracket_exponent(const Cyclotomic& bracket, std::int64_t r)
{
    if (bracket.order() % r != 0)
        return std::nullopt;
    Cyclotomic small;
    try {
        small = descend(bracket, r);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::not_in_subfield)
            return std::nullopt;
        throw;
    }
    if (small * conjugate(small) != Cyclotomic(Rational(1)))
        return std::nullopt;
    for (std::int64_t k = 0; k < r; ++k) {
        if (small == root_of_unity(r, k))
            return k;
    }
    return std::nullopt;
}

namespace detail {

inline std::int64_t require_bracket_exponent(const LensSpace& l, std::int64_t r, int eta, const TauPrimeOptions& opts)
{
    auto k = bracket_exponent(case_two_bracket(l, r, eta, opts), r);
    if (!k)
        throw Error(ErrorKind::integrality_failure,
                    "Case 2 bracket for L(" + std::to_string(l.p) + "," + std::to_string(l.q) + "), r = "
                        + std::to_string(r) + " is not a power of zeta_r (convention "
                        + std::string(to_string(opts.convention)) + ")");
    return *k;
}

inline int case_two_sign(std::int64_t r, std::int64_t c)
{
    return (((r - 1) / 2) * ((c - 1) / 2)) % 2 == 0 ? 1 : -1;
}

} // namespace detail

/// xi_r(L(p,q), e_r), an element of Q(zeta_r).
inline Cyclotomic xi_r(const LensSpace& l, std::int64_t r, const TauPrimeOptions& opts = {})
{
    detail::check_level(r);
    if (l.p == 1)
        return Cyclotomic(Rational(1), r);
    const auto info = detail::classify(l, r);
    switch (info.branch) {
    case Branch::case_one: {
        // e_r^{-12 s} e_p^{r'(q+q*)} lies in Q(zeta_r) although both factors need zeta_{pr}.
        const Rational twelve_s = Rational(12) * dedekind_sum(l.q, l.p);
        const std::int64_t r_inv = mod_inverse(r, l.p).value();
        const Cyclotomic phase = descend(
            root_of_unity(r, -twelve_s) * root_of_unity(l.p, mul_mod(r_inv, l.q + l.q_star, l.p)), r);
        const std::int64_t p_inv = mod_inverse(l.p, r).value();
        return Rational(jacobi_symbol(l.p, r)) * phase * detail::quantum_ratio(r, 2 * p_inv, 2);
    }
    case Branch::case_two: {
        const std::int64_t k = detail::require_bracket_exponent(l, r, info.eta, opts);
        const std::int64_t c = info.c;
        const int sign = detail::case_two_sign(r, c) * jacobi_symbol(l.p / c, r / c)
                         * jacobi_symbol(l.q, c) * info.eta;
        const Cyclotomic denom = root_of_unity(r, -2) - root_of_unity(r, 2);
        return Rational(sign) * root_of_unity(r, k) * gauss_sum(c).lift(r) / denom;
    }
    case Branch::zero:
        return Cyclotomic(Rational(0), r);
    }
    return {};
}

/// tau'_r(L(p,q)) by the three-branch closed formula.
inline TauPrimeResult tau_prime(const LensSpace& l, std::int64_t r, const TauPrimeOptions& opts = {})
{
    detail::check_level(r);
    TauPrimeResult out;
    out.r = r;
    if (l.p == 1) {
        out.value = Cyclotomic(Rational(1), r);
        return out;
    }
    const auto info = detail::classify(l, r);
    out.c = info.c;
    out.branch = info.branch;
    out.eta = info.eta;

    const std::int64_t two_inv = mod_inverse(2, r).value();
    switch (info.branch) {
    case Branch::case_one: {
        const std::int64_t phase = three_s_sqrt(l, r).value();
        const std::int64_t two_p_inv = mod_inverse(2 * l.p, r).value();
        out.value = Rational(jacobi_symbol(l.p, r)) * root_of_unity(r, -phase)
                    * detail::quantum_ratio(r, two_p_inv, two_inv);
        break;
    }
    case Branch::case_two: {
        const std::int64_t c = info.c;
        const std::int64_t quarter = detail::quarter_exponent(r);
        const std::int64_t k = detail::require_bracket_exponent(l, r, info.eta, opts);
        const int sign = detail::case_two_sign(r, c) * jacobi_symbol(l.p / c, r / c)
                         * jacobi_symbol(mul_mod(l.q, quarter, c), c) * info.eta;
        const Cyclotomic denom = root_of_unity(r, -two_inv) - root_of_unity(r, two_inv);
        out.value = Rational(sign) * root_of_unity(r, mul_mod(k, quarter, r)) * gauss_sum(c).lift(r) / denom;
        break;
    }
    case Branch::zero:
        out.value = Cyclotomic(Rational(0), r);
        break;
    }
    return out;
}

/// tau'_r as the Galois image of xi_r under zeta_r -> zeta_r^{(1 -+ r)/4}.
inline Cyclotomic tau_prime_via_galois(const LensSpace& l, std::int64_t r, const TauPrimeOptions& opts = {})
{
    detail::check_level(r);
    const Cyclotomic xi = xi_r(l, r, opts);
    return galois_apply(xi.order() == r ? xi : descend(xi, r), detail::quarter_exponent(r));
}

} // namespace lensinv
