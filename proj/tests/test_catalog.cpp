#include <gtest/gtest.h>

#include <set>

#include "biprod/catalog.hpp"
#include "oracle.hpp"

using namespace biprod;

TEST(Catalog, PositivesPassTheirCascade) {
    for (const auto& e : catalog::positives()) {
        const CheckReport rep = catalog::check_payload(e.payload);
        EXPECT_TRUE(rep.ok()) << e.name;
        EXPECT_TRUE(e.expected_family.empty()) << e.name;
    }
}

TEST(Catalog, CounterexamplesFailTheirFamily) {
    const auto cx = catalog::counterexamples();
    EXPECT_EQ(cx.size(), 5U);
    for (const auto& e : cx) {
        const CheckReport rep = catalog::check_payload(e.payload);
        EXPECT_FALSE(rep.ok()) << e.name;
        EXPECT_TRUE(rep.family_failed(e.expected_family)) << e.name << " expected " << e.expected_family;
        for (const auto& r : rep.results) EXPECT_EQ(r.pass, !r.witness.has_value()) << e.name;
    }
}

TEST(Catalog, VerdictsAgreeWithOracle) {
    for (const auto& e : catalog::all_entries()) {
        const CheckReport rep = catalog::check_payload(e.payload);
        if (const auto* d = std::get_if<BraidedHopfData>(&e.payload)) {
            EXPECT_EQ(oracle::verdicts(rep), oracle::hypotheses(*d)) << e.name;
        } else if (const auto* h = std::get_if<HopfData>(&e.payload)) {
            EXPECT_EQ(oracle::verdicts(rep), oracle::hopf_cascade(h->bialgebra, &h->antipode)) << e.name;
        } else if (const auto* b = std::get_if<BialgebraData>(&e.payload)) {
            EXPECT_EQ(oracle::verdicts(rep), oracle::hopf_cascade(*b, nullptr)) << e.name;
        } else if (const auto* r = std::get_if<RMatrix>(&e.payload)) {
            oracle::Verdicts v = oracle::hopf_cascade(r->h(), nullptr);
            for (const auto& kv : oracle::quasitriangular(*r)) v.insert(kv);
            EXPECT_EQ(oracle::verdicts(rep), v) << e.name;
        }
    }
}

TEST(Catalog, NamesUniqueAndFindable) {
    std::set<std::string> names;
    for (const auto& e : catalog::all_entries()) {
        EXPECT_TRUE(names.insert(e.name).second) << e.name;
        ASSERT_TRUE(catalog::find(e.name).has_value()) << e.name;
        EXPECT_FALSE(e.description.empty()) << e.name;
    }
    EXPECT_FALSE(catalog::find("no-such-entry").has_value());
    for (const char* required : {"superline", "z2-rmatrix", "sweedler", "monoid", "kZ2", "eb-not-algebra-map"})
        EXPECT_TRUE(names.count(required)) << required;
}

TEST(Catalog, SuperlineData) {
    const BraidedHopfData d = catalog::superline();
    EXPECT_EQ(d.b.space().factors().front().basis, (std::vector<std::string>{"1", "x"}));
    EXPECT_EQ(d.h.space().factors().front().basis, (std::vector<std::string>{"1", "g"}));
    const CheckReport rep = check_theorem_hypotheses(d);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.hopf_ready, std::optional<bool>(true));
}

TEST(Catalog, BosonizeEntryMatchesDeclaredSuperline) {
    const auto e = catalog::find("superline-bosonize");
    ASSERT_TRUE(e.has_value());
    const auto& in = std::get<catalog::BosonizeInput>(e->payload);
    const BraidedHopfData derived = bosonized_bundle(in.module, in.r);
    EXPECT_TRUE(maps_equal(derived.rho(), catalog::superline().rho()));
    EXPECT_EQ(catalog::check_payload(e->payload).hopf_ready, std::optional<bool>(true));
}

TEST(Catalog, PrimeFieldCatalog) {
    for (std::uint64_t p : {3, 5}) {
        for (const auto& e : catalog::positives(FieldSpec::prime(p))) EXPECT_TRUE(catalog::check_payload(e.payload).ok()) << e.name;
        for (const auto& e : catalog::counterexamples(FieldSpec::prime(p)))
            EXPECT_TRUE(catalog::check_payload(e.payload).family_failed(e.expected_family)) << e.name;
    }
    // characteristic 2 drops the entries that need ½ or a sign
    const auto f2 = catalog::all_entries(FieldSpec::prime(2));
    for (const auto& e : f2) EXPECT_TRUE(catalog::check_payload(e.payload).ok()) << e.name;
    EXPECT_FALSE(catalog::find("superline", FieldSpec::prime(2)).has_value());
}

TEST(Catalog, ComoduleCoalgebraFixtureIsolatesThatSide) {
    const BraidedHopfData d = catalog::comodule_coalgebra_fixture(3, 1);
    const CheckReport rep = check_theorem_hypotheses(d);
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.family_failed("COMOD"));
    EXPECT_FALSE(rep.family_failed("EQ5"));
    EXPECT_FALSE(rep.family_failed("COALG"));
    EXPECT_TRUE(rep.family_failed("EQ4"));
    EXPECT_EQ(oracle::verdicts(rep), oracle::hypotheses(d));
}
