#include <gtest/gtest.h>

#include "biprod/catalog.hpp"
#include "oracle.hpp"

using namespace biprod;

namespace {
const FieldSpec Q = FieldSpec::rationals();

void expect_oracle_agrees(const BialgebraData& b, const LinMap* s) {
    const CheckReport rep = check_cascade(b, s ? std::optional<LinMap>(*s) : std::nullopt);
    EXPECT_EQ(oracle::verdicts(rep), oracle::hopf_cascade(b, s));
}

std::size_t sw(unsigned a, unsigned b) { return a + 2U * b; }  // gᵃxᵇ in Sweedler's basis
}  // namespace

TEST(Algebra, GroupAlgebraPasses) {
    const HopfData h = catalog::group_algebra(2);
    EXPECT_TRUE(check_algebra(h.bialgebra.algebra).ok());
}

TEST(Algebra, GroupProductWithIdempotentG) {
    // g·g = g gives the monoid algebra of {1, g}: still associative and unital
    HopfData h = catalog::group_algebra(2);
    LinMap& m = h.bialgebra.algebra.mult;
    m.set(0, 3, Scalar::zero(Q));
    m.set(1, 3, Scalar::one(Q));
    EXPECT_TRUE(check_algebra(h.bialgebra.algebra).ok());
    EXPECT_EQ(oracle::verdicts(check_algebra(h.bialgebra.algebra)), oracle::algebra(oracle::Bi(h.bialgebra)));
    expect_oracle_agrees(h.bialgebra, nullptr);
}

TEST(Algebra, BrokenUnitFailsWithWitness) {
    HopfData h = catalog::group_algebra(2);
    h.bialgebra.algebra.mult.set(0, 1, Scalar::one(Q));  // 1·g = 1 + g
    const CheckReport rep = check_algebra(h.bialgebra.algebra);
    EXPECT_TRUE(rep.failed(AxiomId::ALG_UNIT_LEFT));
    for (const auto& r : rep.results) EXPECT_EQ(r.pass, !r.witness.has_value());
    const auto& res = *std::find_if(rep.results.begin(), rep.results.end(),
                                    [](const CheckResult& r) { return r.id == AxiomId::ALG_UNIT_LEFT; });
    EXPECT_EQ(res.witness->basis_names, (std::vector<std::string>{"g", "1"}));
    EXPECT_EQ(res.witness->lhs_entry, "1");
    EXPECT_EQ(res.witness->rhs_entry, "0");
    expect_oracle_agrees(h.bialgebra, nullptr);
}

TEST(Algebra, SweedlerAlgebraByBruteForce) {
    const HopfData h = catalog::sweedler();
    EXPECT_TRUE(check_algebra(h.bialgebra.algebra).ok());
    // x g = -g x, g² = 1, x² = 0 read off the table
    EXPECT_EQ(h.mult().at(sw(1, 1), sw(0, 1) * 4 + sw(1, 0)), Scalar::from_int(Q, -1));
    EXPECT_TRUE(h.mult().at(sw(0, 0), sw(1, 0) * 4 + sw(1, 0)).is_one());
    for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(h.mult().at(r, sw(0, 1) * 4 + sw(0, 1)).is_zero());
}

TEST(Coalgebra, Examples) {
    EXPECT_TRUE(check_coalgebra(catalog::group_algebra(2).bialgebra.coalgebra).ok());
    EXPECT_TRUE(check_coalgebra(catalog::sweedler().bialgebra.coalgebra).ok());

    BialgebraData b = catalog::superline(Q).b;
    b.coalgebra.comult.set(1, 1, Scalar::zero(Q));  // Δx = x⊗1
    const CheckReport rep = check_coalgebra(b.coalgebra);
    ASSERT_TRUE(rep.failed(AxiomId::COALG_COUNIT_LEFT));
    EXPECT_FALSE(rep.failed(AxiomId::COALG_COASSOC));
    // witness sits on input x
    const auto& res = *std::find_if(rep.results.begin(), rep.results.end(), [](const CheckResult& r) { return !r.pass; });
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_EQ(res.witness->basis_names.front(), "x");
    expect_oracle_agrees(b, nullptr);
}

TEST(Bialgebra, GroupAlgebrasUpToEight) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const HopfData h = catalog::group_algebra(n);
        EXPECT_TRUE(check_cascade(h).ok()) << n;
        expect_oracle_agrees(h.bialgebra, &h.antipode);
    }
}

TEST(Bialgebra, CounitZeroOnGFails) {
    HopfData h = catalog::group_algebra(2);
    h.bialgebra.coalgebra.counit.set(0, 1, Scalar::zero(Q));
    const CheckReport rep = check_bialgebra(h.bialgebra);
    EXPECT_TRUE(rep.failed(AxiomId::BIALG_COUNIT_MULT));
    expect_oracle_agrees(h.bialgebra, &h.antipode);
}

TEST(Hopf, Examples) {
    const HopfData kz2 = catalog::group_algebra(2);
    EXPECT_TRUE(check_hopf(kz2).ok());
    const HopfData sweedler = catalog::sweedler();
    EXPECT_TRUE(check_cascade(sweedler).ok());
    expect_oracle_agrees(sweedler.bialgebra, &sweedler.antipode);

    HopfData bad = sweedler;
    bad.antipode.set(sw(1, 1), sw(0, 1), Scalar::one(Q));  // S(x) = +gx
    const CheckReport rep = check_hopf(bad);
    ASSERT_FALSE(rep.ok());
    for (const auto& r : rep.results) {
        if (!r.pass) {
            EXPECT_EQ(r.witness->basis_names.front(), "x");
        }
    }
    expect_oracle_agrees(bad.bialgebra, &bad.antipode);
}

TEST(SolveAntipode, RecoversKnownAntipodes) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const HopfData h = catalog::group_algebra(n);
        const auto s = solve_antipode(h.bialgebra);
        ASSERT_TRUE(s.has_value()) << n;
        EXPECT_TRUE(maps_equal(*s, h.antipode)) << n;
    }
    const HopfData sweedler = catalog::sweedler();
    const auto s = solve_antipode(sweedler.bialgebra);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(maps_equal(*s, sweedler.antipode));
    EXPECT_EQ(s->at(sw(1, 1), sw(0, 1)), Scalar::from_int(Q, -1));  // S(x) = -gx
}

TEST(SolveAntipode, OverPrimeField) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const HopfData h = catalog::sweedler(f5);
    const auto s = solve_antipode(h.bialgebra);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(maps_equal(*s, h.antipode));
}

TEST(SolveAntipode, IdempotentMonoidHasNone) {
    const BialgebraData m = catalog::idempotent_monoid();
    EXPECT_TRUE(check_cascade(m, std::nullopt).ok());
    EXPECT_FALSE(solve_antipode(m).has_value());
}

TEST(Records, ConstructorsRejectBadSignatures) {
    const HopfData h = catalog::group_algebra(2);
    EXPECT_THROW(AlgebraData(Q, h.space(), h.comult(), h.unit()), SignatureMismatch);
    EXPECT_THROW(CoalgebraData(Q, h.space(), h.mult(), h.counit()), SignatureMismatch);
    EXPECT_THROW(HopfData(h.bialgebra, h.comult()), SignatureMismatch);
    const HopfData h5 = catalog::group_algebra(2, FieldSpec::prime(5));
    EXPECT_THROW(BialgebraData(h.bialgebra.algebra, h5.bialgebra.coalgebra), FieldMismatch);
}
