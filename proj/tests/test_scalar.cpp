#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "biprod/exactla/scalar.hpp"

using namespace biprod;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) { return Scalar::fraction(Q, n, d); }

std::string rat_str(const cpp_rational& r) {
    const cpp_int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

TEST(Scalar, RationalExamples) {
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
    EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), "5/6");
    EXPECT_EQ(q(2, 4).to_string(), "1/2");
    EXPECT_EQ(q(3, -6).to_string(), "-1/2");
    EXPECT_EQ(q(7, 3) / q(7, 3), Scalar::one(Q));
}

TEST(Scalar, PrimeFieldExamples) {
    const FieldSpec f5 = FieldSpec::prime(5);
    EXPECT_EQ((Scalar::from_int(f5, 3) * Scalar::from_int(f5, 4)).residue(), 2U);
    EXPECT_EQ(Scalar::from_int(f5, -1).residue(), 4U);
    for (long x = 1; x < 5; ++x) {
        const Scalar s = Scalar::from_int(f5, x);
        EXPECT_EQ(s / s, Scalar::one(f5));
        EXPECT_EQ(s * s.inverse(), Scalar::one(f5));
    }
}

TEST(Scalar, Errors) {
    const FieldSpec f7 = FieldSpec::prime(7);
    EXPECT_THROW(Scalar::one(Q) + Scalar::one(f7), FieldMismatch);
    EXPECT_THROW(Scalar::one(FieldSpec::prime(5)) * Scalar::one(f7), FieldMismatch);
    EXPECT_THROW(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
    EXPECT_THROW(Scalar::one(f7) / Scalar::from_int(f7, 14), DivisionByZero);
    EXPECT_THROW(Scalar::zero(Q).inverse(), DivisionByZero);
    EXPECT_FALSE(Scalar::one(Q) == Scalar::one(f7));
}

TEST(FieldSpec, Validation) {
    EXPECT_THROW(FieldSpec::prime(1), InvalidParameter);
    EXPECT_THROW(FieldSpec::prime(9), InvalidParameter);
    EXPECT_THROW(FieldSpec::prime(std::uint64_t{1} << 31), InvalidParameter);
    EXPECT_NO_THROW(FieldSpec::prime(2147483647));
    EXPECT_EQ(FieldSpec::prime(7).to_string(), "F7");
    EXPECT_EQ(Q.to_string(), "Q");
    EXPECT_EQ(Q.characteristic(), 0U);
}

TEST(Scalar, Parse) {
    EXPECT_EQ(Scalar::parse(Q, "-3/6"), q(-1, 2));
    EXPECT_EQ(Scalar::parse(Q, "+4"), q(4));
    EXPECT_EQ(Scalar::parse(Q, "123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    EXPECT_EQ(Scalar::parse(FieldSpec::prime(7), "-1").residue(), 6U);
    for (const char* bad : {"", "1/0", "1/", "/2", "x", "1.5", "1/-2", "1 /2", "--1"}) {
        EXPECT_THROW(Scalar::parse(Q, bad), InvalidParameter) << bad;
    }
    EXPECT_THROW(Scalar::parse(FieldSpec::prime(7), "1/2"), InvalidParameter);
}

// 1000 random cases per field against boost.multiprecision.
TEST(Scalar, RationalOracle) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L), den(1, 1'000'000L);
    for (int i = 0; i < 1000; ++i) {
        const long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        const Scalar a = q(an, ad), b = q(bn, bd);
        const cpp_rational ra = cpp_rational(cpp_int{an}, cpp_int{ad}), rb = cpp_rational(cpp_int{bn}, cpp_int{bd});
        EXPECT_EQ((a + b).to_string(), rat_str(ra + rb));
        EXPECT_EQ((a - b).to_string(), rat_str(ra - rb));
        EXPECT_EQ((a * b).to_string(), rat_str(ra * rb));
        if (bn != 0) {
            EXPECT_EQ((a / b).to_string(), rat_str(ra / rb));
        } else {
            EXPECT_THROW(a / b, DivisionByZero);
        }
    }
}

class PrimeOracle : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PrimeOracle, AgreesWithBigIntegerResidues) {
    const std::uint64_t p = GetParam();
    const FieldSpec f = FieldSpec::prime(p);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<long> dist(-4'000'000'000L, 4'000'000'000L);
    auto mod = [&](const cpp_int& x) {
        cpp_int r = x % p;
        if (r < 0) r += p;
        return r.convert_to<std::uint64_t>();
    };
    for (int i = 0; i < 1000; ++i) {
        const long x = dist(rng), y = dist(rng);
        const Scalar a = Scalar::from_int(f, x), b = Scalar::from_int(f, y);
        EXPECT_EQ(a.residue(), mod(x));
        EXPECT_EQ((a + b).residue(), mod(cpp_int(x) + y));
        EXPECT_EQ((a - b).residue(), mod(cpp_int(x) - y));
        EXPECT_EQ((a * b).residue(), mod(cpp_int(x) * y));
        if (b.is_zero()) {
            EXPECT_THROW(a / b, DivisionByZero);
        } else {
            // a/b = c  ⟺  c·b ≡ a
            const Scalar c = a / b;
            EXPECT_EQ(mod(cpp_int(c.residue()) * y), mod(x));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, PrimeOracle, ::testing::Values(2, 3, 5, 7, 101, 65537, 2147483647));
