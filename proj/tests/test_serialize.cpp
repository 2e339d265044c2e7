#include <gtest/gtest.h>

#include "lensinv/lensinv.hpp"
#include "lensinv/serialize.hpp"

using namespace lensinv;

TEST(Serialize, RationalRoundTrip)
{
    for (const Rational& x : {Rational(0), Rational(-3, 4), Rational(7), Rational(1, 1000000007)}) {
        const Json j = to_json(x);
        EXPECT_TRUE(j.is_array());
        EXPECT_EQ(rational_from_json(Json::parse(j.dump())), x);
    }
    const Integer big("123456789012345678901234567890");
    const Rational huge(big, Integer(7));
    const Json j = to_json(huge);
    EXPECT_TRUE(j[0].is_string());
    EXPECT_EQ(rational_from_json(j), huge);
    EXPECT_THROW(rational_from_json(Json::array({1})), Error);
}

TEST(Serialize, CyclotomicRoundTrip)
{
    const Cyclotomic x = tau_prime(make_lens_space(7, 2), 9).value;
    const Json j = to_json(x);
    EXPECT_EQ(j.at("order"), 9);
    EXPECT_EQ(cyclotomic_from_json(Json::parse(j.dump())), x);
}

TEST(Serialize, TauPrimeResultFields)
{
    const Json two = to_json(tau_prime(make_lens_space(3, 1), 3));
    EXPECT_EQ(two.at("branch"), "CaseTwo");
    EXPECT_EQ(two.at("eta"), -1);
    const Json zero = to_json(tau_prime(make_lens_space(25, 7), 5));
    EXPECT_EQ(zero.at("branch"), "Zero");
    EXPECT_FALSE(zero.contains("eta"));
}

TEST(Serialize, VerifyReportIsDeterministic)
{
    const auto a = to_json(verify(make_lens_space(9, 2), 3)).dump();
    const auto b = to_json(verify(make_lens_space(9, 2), 3)).dump();
    EXPECT_EQ(a, b);
    const Json j = Json::parse(a);
    EXPECT_EQ(j.at("match"), "direct");
    EXPECT_TRUE(j.at("conventions").contains("conjugated_proof"));
}
