#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lensinv/cyclotomic.hpp"

using namespace lensinv;

namespace {

Cyclotomic one(std::int64_t n = 1) { return Cyclotomic(Rational(1), n); }

Cyclotomic random_element(std::mt19937_64& rng, std::int64_t n)
{
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (std::int64_t i = 0; i < cyclotomic_degree(n); ++i)
        c.emplace_back(num(rng), den(rng));
    return Cyclotomic::from_coeffs(n, std::move(c));
}

int mobius(std::int64_t n)
{
    int mu = 1;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0)
                return 0;
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

} // namespace

TEST(CyclotomicPolynomial, KnownSmallCases)
{
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
    // Phi_105 is the first with a coefficient of absolute value 2.
    auto phi105 = cyclotomic_polynomial(105);
    EXPECT_EQ(phi105.size(), 49u);
    EXPECT_EQ(phi105[7], -2);
    EXPECT_EQ(cyclotomic_degree(300), 80);
}

TEST(RootOfUnity, Examples)
{
    EXPECT_EQ(root_of_unity(1, 0), one());
    const Cyclotomic i = root_of_unity(4, 1);
    EXPECT_EQ(i.order(), 4);
    EXPECT_EQ(i.coeffs(), (std::vector<Rational>{Rational(0), Rational(1)}));
    EXPECT_EQ(root_of_unity(3, 3), one());
    EXPECT_EQ(root_of_unity(7, -1), root_of_unity(7, 6));
    // e_6^{1/2} = zeta_12
    EXPECT_EQ(root_of_unity(6, Rational(1, 2)), root_of_unity(12, 1));
}

TEST(FieldOps, Examples)
{
    EXPECT_TRUE((root_of_unity(3, 1) + root_of_unity(3, 2) + one()).is_zero());
    const Cyclotomic z = root_of_unity(5, 1);
    const Cyclotomic ratio = (z.pow(2) - z.pow(-2)) / (z - z.pow(-1));
    EXPECT_EQ(ratio, z + z.pow(-1));
    EXPECT_EQ(root_of_unity(4, 1) * root_of_unity(4, 1), Cyclotomic(Rational(-1)));
}

TEST(FieldOps, DivisionByZero)
{
    try {
        (void)(one(5) / Cyclotomic(Rational(0), 5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
    }
}

TEST(FieldOps, InverseAndRingLaws)
{
    std::mt19937_64 rng(11);
    for (std::int64_t n : {3, 5, 7, 8, 9, 12, 15, 21, 25}) {
        for (int t = 0; t < 5; ++t) {
            const Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), one(n));
            }
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            if (!b.is_zero()) {
                EXPECT_EQ((a / b) * b, a);
            }
        }
    }
}

TEST(FieldOps, MixedOrdersLiftToLcm)
{
    const Cyclotomic s = root_of_unity(3, 1) * root_of_unity(5, 1);
    EXPECT_EQ(s.order(), 15);
    EXPECT_EQ(s, root_of_unity(15, 8));
    EXPECT_EQ(root_of_unity(15, 5), root_of_unity(3, 1));
    EXPECT_NE(root_of_unity(15, 1), root_of_unity(3, 1));
}

TEST(Galois, Examples)
{
    EXPECT_EQ(galois_apply(root_of_unity(5, 1), 2), root_of_unity(5, 2));
    const Cyclotomic q = Cyclotomic(Rational(3, 7), 9);
    EXPECT_EQ(galois_apply(q, 4), q);
    std::mt19937_64 rng(3);
    const Cyclotomic x = random_element(rng, 7);
    EXPECT_EQ(galois_apply(galois_apply(x, 2), 3), galois_apply(x, 6));
    EXPECT_THROW(galois_apply(root_of_unity(6, 1), 3), Error);
}

TEST(Galois, IsRingHomomorphism)
{
    std::mt19937_64 rng(5);
    for (std::int64_t n : {7, 9, 20}) {
        const Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
        for (std::int64_t k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1)
                continue;
            EXPECT_EQ(galois_apply(a * b, k), galois_apply(a, k) * galois_apply(b, k));
            EXPECT_EQ(galois_apply(a + b, k), galois_apply(a, k) + galois_apply(b, k));
        }
    }
}

TEST(Galois, OrbitSumIsMobius)
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        Cyclotomic sum(Rational(0), n);
        for (std::int64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1)
                sum = sum + galois_apply(root_of_unity(n, 1), k);
        EXPECT_EQ(sum, Cyclotomic(Rational(mobius(n)))) << n;
    }
}

TEST(Conjugate, Examples)
{
    EXPECT_EQ(conjugate(root_of_unity(8, 1)), root_of_unity(8, 7));
    EXPECT_EQ(conjugate(Cyclotomic(Rational(5, 3), 8)), Cyclotomic(Rational(5, 3), 8));
    std::mt19937_64 rng(13);
    const Cyclotomic x = random_element(rng, 12);
    EXPECT_EQ(conjugate(conjugate(x)), x);
    const auto z = to_complex(x);
    const auto zc = to_complex(conjugate(x));
    EXPECT_NEAR(std::abs(zc - std::conj(z)), 0.0, 1e-12);
}

TEST(ToComplex, Examples)
{
    EXPECT_NEAR(std::abs(to_complex(root_of_unity(4, 1)) - std::complex<double>(0, 1)), 0.0, 1e-12);
    const Cyclotomic g = one(3) + Rational(2) * root_of_unity(3, 1);
    EXPECT_NEAR(std::abs(to_complex(g) - std::complex<double>(0, std::sqrt(3.0))), 0.0, 1e-12);
    EXPECT_EQ(to_complex(Cyclotomic()), std::complex<double>(0, 0));
}

TEST(ToComplex, EmbeddingIsMultiplicative)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> order(1, 60);
    for (int t = 0; t < 40; ++t) {
        const std::int64_t n = order(rng), m = order(rng);
        const Cyclotomic a = random_element(rng, n), b = random_element(rng, m);
        const auto lhs = to_complex(a * b);
        const auto rhs = to_complex(a) * to_complex(b);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Descend, Examples)
{
    const Cyclotomic d = descend(root_of_unity(15, 5), 3);
    EXPECT_EQ(d.order(), 3);
    EXPECT_EQ(d.coeffs(), root_of_unity(3, 1).coeffs());
    EXPECT_EQ(descend(Cyclotomic(Rational(2, 9)), 1), Cyclotomic(Rational(2, 9)));
    try {
        descend(root_of_unity(15, 1), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_in_subfield);
    }
    EXPECT_THROW(descend(root_of_unity(15, 1), 4), Error);
}

TEST(Descend, LiftRoundTrip)
{
    std::mt19937_64 rng(19);
    for (std::int64_t n : {1, 3, 4, 5, 7, 9, 12}) {
        for (std::int64_t m : {2, 3, 5, 6}) {
            const Cyclotomic x = random_element(rng, n);
            const Cyclotomic lifted = x.lift(m * n);
            EXPECT_EQ(lifted.order(), m * n);
            const Cyclotomic back = descend(lifted, n);
            EXPECT_EQ(back.order(), n);
            EXPECT_EQ(back.coeffs(), x.coeffs());
        }
    }
}

TEST(GaussSum, Examples)
{
    EXPECT_EQ(gauss_sum(1), one());
    const Cyclotomic g3 = gauss_sum(3);
    EXPECT_EQ(g3.coeffs(), (std::vector<Rational>{Rational(1), Rational(2)}));
    EXPECT_EQ(gauss_sum(5) * gauss_sum(5), Cyclotomic(Rational(5)));
    try {
        gauss_sum(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::even_input);
    }
}

TEST(GaussSum, MatchesEpsilonSqrt)
{
    for (std::int64_t c = 1; c <= 45; c += 2) {
        const auto z = to_complex(gauss_sum(c));
        const auto expected = to_complex(epsilon(c)) * std::sqrt(static_cast<double>(c));
        EXPECT_NEAR(std::abs(z - expected), 0.0, 1e-9) << c;
    }
}

TEST(Epsilon, Examples)
{
    EXPECT_EQ(epsilon(5), one());
    EXPECT_EQ(epsilon(7), root_of_unity(4, 1));
    EXPECT_EQ(epsilon(1), one());
    EXPECT_EQ(epsilon(-1), root_of_unity(4, 1));
    EXPECT_THROW(epsilon(6), Error);
}

TEST(MaxOrder, RefusesLargeOrders)
{
    const auto saved = max_order();
    set_max_order(100);
    try {
        root_of_unity(101, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::order_too_large);
    }
    set_max_order(saved);
    EXPECT_EQ(max_order(), default_max_order);
}
