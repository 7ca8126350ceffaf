#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in structures with exactly specified constants: positive
 * fixtures that satisfy every hypothesis, and tagged counterexamples.
 */

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/errors.hpp"
#include "biprod/structures.hpp"
#include "biprod/ydcat.hpp"

namespace biprod::catalog {

/// Input of a bosonization: B with its action, plus an R-matrix on H.
struct BosonizeInput {
    ModuleBialgebraData module;
    RMatrix r;
};

using Payload = std::variant<BialgebraData, HopfData, BraidedHopfData, RMatrix, BosonizeInput>;

struct CatalogEntry {
    std::string name;
    Payload payload;
    std::string description;
    /// Axiom family the full cascade must report as failed; empty for positive entries.
    std::string expected_family;
};

namespace detail {

inline Scalar num(FieldSpec f, long v) { return Scalar::from_int(f, v); }

inline void need_odd_characteristic(FieldSpec f, const char* what) {
    if (f.characteristic() == 2) throw InvalidParameter(std::string(what) + " needs characteristic != 2");
}

/// Map with entries out[r][c] given by a callback returning (row, coeff) pairs per column.
inline LinMap table(FieldSpec f, const SpaceSig& dom, const SpaceSig& cod,
                    const std::function<std::vector<std::pair<std::size_t, Scalar>>(std::size_t)>& column) {
    LinMap m(f, dom, cod);
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        for (auto& [r, v] : column(c)) m.add_to(r, c, v);
    }
    return m;
}

inline LinMap basis_unit(FieldSpec f, const SpaceSig& v, std::size_t one_index = 0) {
    LinMap u(f, SpaceSig{}, v);
    u.set(one_index, 0, Scalar::one(f));
    return u;
}

inline std::vector<std::string> cyclic_names(std::size_t n) {
    std::vector<std::string> names{"1"};
    if (n > 1) names.emplace_back("g");
    for (std::size_t k = 2; k < n; ++k) names.push_back("g^" + std::to_string(k));
    return names;
}

/// B = span{1, x}, x² = 0, x primitive, S(x) = -x, as a bialgebra over f.
inline BialgebraData superline_b(FieldSpec f) {
    const SpaceSig b{Space("B", {"1", "x"})};
    LinMap m(f, b * b, b);
    m.set(0, 0, num(f, 1));  // 1·1
    m.set(1, 1, num(f, 1));  // 1·x
    m.set(1, 2, num(f, 1));  // x·1
    LinMap cm(f, b, b * b);
    cm.set(0, 0, num(f, 1));  // Δ1 = 1⊗1
    cm.set(2, 1, num(f, 1));  // Δx ∋ x⊗1
    cm.set(1, 1, num(f, 1));  // Δx ∋ 1⊗x
    LinMap cu(f, b, SpaceSig{});
    cu.set(0, 0, num(f, 1));
    return {AlgebraData(f, b, std::move(m), basis_unit(f, b)), CoalgebraData(f, b, std::move(cm), std::move(cu))};
}

inline LinMap superline_antipode(FieldSpec f) {
    const SpaceSig b{Space("B", {"1", "x"})};
    LinMap s(f, b, b);
    s.set(0, 0, num(f, 1));
    s.set(1, 1, num(f, -1));
    return s;
}

/// g·x = -x on span{1, x}.
inline LinMap sign_action(FieldSpec f, const SpaceSig& h, const SpaceSig& b, long sign_on_x = -1) {
    LinMap a(f, h * b, b);
    a.set(0, 0, num(f, 1));          // 1·1
    a.set(1, 1, num(f, 1));          // 1·x
    a.set(0, 2, num(f, 1));          // g·1
    a.set(1, 3, num(f, sign_on_x));  // g·x
    return a;
}

/// ρ(1) = 1⊗1, ρ(x) = h_index⊗x.
inline LinMap grouplike_coaction(FieldSpec f, const SpaceSig& h, const SpaceSig& b, std::size_t h_index) {
    LinMap c(f, b, h * b);
    c.set(0, 0, num(f, 1));
    c.set(h_index * 2 + 1, 1, num(f, 1));
    return c;
}

}  // namespace detail

/// k[ℤₙ] with basis 1, g, g², …; S(gⁱ) = gⁿ⁻ⁱ.
inline HopfData group_algebra(std::size_t n, FieldSpec f = FieldSpec::rationals(), const std::string& name = "H") {
    if (n < 1) throw InvalidParameter("group order must be >= 1");
    const SpaceSig v{Space(name, detail::cyclic_names(n))};
    const LinMap mult = detail::table(f, v * v, v, [&](std::size_t c) {
        return std::vector<std::pair<std::size_t, Scalar>>{{(c / n + c % n) % n, Scalar::one(f)}};
    });
    const LinMap comult = detail::table(f, v, v * v, [&](std::size_t c) {
        return std::vector<std::pair<std::size_t, Scalar>>{{c * n + c, Scalar::one(f)}};
    });
    LinMap counit(f, v, SpaceSig{});
    for (std::size_t i = 0; i < n; ++i) counit.set(0, i, Scalar::one(f));
    const LinMap antipode = detail::table(f, v, v, [&](std::size_t c) {
        return std::vector<std::pair<std::size_t, Scalar>>{{(n - c) % n, Scalar::one(f)}};
    });
    return {BialgebraData(AlgebraData(f, v, mult, detail::basis_unit(f, v)), CoalgebraData(f, v, comult, counit)),
            antipode};
}

/**
 * The super line over kℤ₂: B = span{1, x}, x² = 0, Δx = x⊗1 + 1⊗x,
 * S_B(x) = -x, g·x = -x, ρ(x) = g⊗x.
 */
inline BraidedHopfData superline(FieldSpec f = FieldSpec::rationals()) {
    detail::need_odd_characteristic(f, "superline");
    const HopfData h = group_algebra(2, f);
    const BialgebraData b = detail::superline_b(f);
    return {b,
            detail::superline_antipode(f),
            h.bialgebra,
            h.antipode,
            detail::sign_action(f, h.space(), b.space()),
            detail::grouplike_coaction(f, h.space(), b.space(), 1)};
}

/// The superline's B with its action only; the coaction comes from an R-matrix.
inline ModuleBialgebraData superline_module(FieldSpec f = FieldSpec::rationals(), long sign_on_x = -1) {
    detail::need_odd_characteristic(f, "superline");
    const HopfData h = group_algebra(2, f);
    const BialgebraData b = detail::superline_b(f);
    return {b, detail::superline_antipode(f), h.bialgebra, h.antipode,
            detail::sign_action(f, h.space(), b.space(), sign_on_x)};
}

/// R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) on kℤ₂; R⁻¹ = R.
inline RMatrix z2_rmatrix(FieldSpec f = FieldSpec::rationals()) {
    detail::need_odd_characteristic(f, "z2_rmatrix");
    const Scalar half = Scalar::one(f) / detail::num(f, 2);
    return {group_algebra(2, f).bialgebra, {half, half, half, -half}};
}

/// Sweedler's H₄: basis 1, g, x, gx; g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.
inline HopfData sweedler(FieldSpec f = FieldSpec::rationals()) {
    detail::need_odd_characteristic(f, "sweedler");
    const SpaceSig v{Space("H4", {"1", "g", "x", "gx"})};
    // basis index i ↔ gᵃxᵇ with a = i & 1, b = i >> 1
    auto idx = [](unsigned a, unsigned b) -> std::size_t { return (a & 1U) + 2U * b; };
    const LinMap mult = detail::table(f, v * v, v, [&](std::size_t c) {
        const unsigned i = static_cast<unsigned>(c / 4), j = static_cast<unsigned>(c % 4);
        const unsigned a1 = i & 1U, b1 = i >> 1U, a2 = j & 1U, b2 = j >> 1U;
        std::vector<std::pair<std::size_t, Scalar>> out;
        if (b1 + b2 >= 2) return out;
        const long sign = (b1 * a2) % 2 == 1 ? -1 : 1;  // x g = -g x
        out.emplace_back(idx(a1 + a2, b1 + b2), detail::num(f, sign));
        return out;
    });
    LinMap comult(f, v, v * v);
    comult.set(0 * 4 + 0, 0, detail::num(f, 1));  // Δ1 = 1⊗1
    comult.set(1 * 4 + 1, 1, detail::num(f, 1));  // Δg = g⊗g
    comult.set(2 * 4 + 0, 2, detail::num(f, 1));  // Δx ∋ x⊗1
    comult.set(1 * 4 + 2, 2, detail::num(f, 1));  // Δx ∋ g⊗x
    comult.set(3 * 4 + 1, 3, detail::num(f, 1));  // Δ(gx) ∋ gx⊗g
    comult.set(0 * 4 + 3, 3, detail::num(f, 1));  // Δ(gx) ∋ 1⊗gx
    LinMap counit(f, v, SpaceSig{});
    counit.set(0, 0, detail::num(f, 1));
    counit.set(0, 1, detail::num(f, 1));
    LinMap s(f, v, v);
    s.set(0, 0, detail::num(f, 1));
    s.set(1, 1, detail::num(f, 1));
    s.set(3, 2, detail::num(f, -1));  // S(x) = -gx
    s.set(2, 3, detail::num(f, 1));   // S(gx) = x
    return {BialgebraData(AlgebraData(f, v, mult, detail::basis_unit(f, v)), CoalgebraData(f, v, comult, counit)),
            std::move(s)};
}

/// Basis {1, t} with t² = t, Δt = t⊗t, ε(t) = 1: a bialgebra with no antipode.
inline BialgebraData idempotent_monoid(FieldSpec f = FieldSpec::rationals()) {
    const SpaceSig v{Space("M", {"1", "t"})};
    LinMap m(f, v * v, v);
    m.set(0, 0, detail::num(f, 1));
    m.set(1, 1, detail::num(f, 1));
    m.set(1, 2, detail::num(f, 1));
    m.set(1, 3, detail::num(f, 1));
    LinMap cm(f, v, v * v);
    cm.set(0, 0, detail::num(f, 1));
    cm.set(3, 1, detail::num(f, 1));
    LinMap cu(f, v, SpaceSig{});
    cu.set(0, 0, detail::num(f, 1));
    cu.set(0, 1, detail::num(f, 1));
    return {AlgebraData(f, v, std::move(m), detail::basis_unit(f, v)), CoalgebraData(f, v, std::move(cm), std::move(cu))};
}

/// Trivial action h·b = ε(h)b and trivial coaction ρ(b) = 1⊗b of H on an ordinary Hopf algebra B.
inline BraidedHopfData trivial_bundle(const HopfData& b, const HopfData& h) {
    const LinMap action = chain({Layer{h.counit(), b.id()}});
    const LinMap coaction = chain({Layer{h.unit(), b.id()}});
    return {b.bialgebra, b.antipode, h.bialgebra, h.antipode, action, coaction};
}

/// B = k (one-dimensional) over H with trivial structure.
inline BraidedHopfData unit_bundle(const HopfData& h) {
    const FieldSpec f = h.field();
    return trivial_bundle(group_algebra(1, f, "B"), h);
}

/**
 * Satisfies only the comodule-coalgebra side: B = span{1, x} with primitive x
 * and ρ(x) = g^power⊗x over kℤₙ, but x² = 1 so B is not a braided bialgebra.
 */
inline BraidedHopfData comodule_coalgebra_fixture(std::size_t n = 2, std::size_t power = 1, FieldSpec f = FieldSpec::rationals()) {
    const HopfData h = group_algebra(n, f);
    BialgebraData b = detail::superline_b(f);
    b.algebra.mult.set(0, 3, detail::num(f, 1));  // x·x = 1
    const LinMap action = chain({Layer{h.counit(), b.id()}});
    return {b, std::nullopt, h.bialgebra, h.antipode, action, detail::grouplike_coaction(f, h.space(), b.space(), power % n)};
}

/// Negative fixtures, each tagged with the axiom family its cascade must fail.
inline std::vector<CatalogEntry> counterexamples(FieldSpec f = FieldSpec::rationals()) {
    std::vector<CatalogEntry> out;
    {
        BraidedHopfData d = superline(f);
        d.b.coalgebra.counit.set(0, 1, Scalar::one(f));
        out.push_back({"eb-not-algebra-map", d, "superline with counit(x) = 1", "BR_COUNIT"});
    }
    {
        BraidedHopfData d = superline(f);
        d.coact.coaction = chain({Layer{d.h.unit(), d.b.id()}});
        out.push_back({"coaction-trivial", d, "superline with coaction rho(x) = 1 (x) x", "COND1"});
    }
    {
        BraidedHopfData d = superline(f);
        d.b.coalgebra.comult.set(1, 1, Scalar::zero(f));
        out.push_back({"delta-b-counit-broken", d, "superline with Delta(x) = x (x) 1", "COALG"});
    }
    {
        HopfData h = group_algebra(2, f);
        h.bialgebra.coalgebra.counit.set(0, 1, Scalar::zero(f));
        out.push_back({"kz2-eps-zero", h, "kZ2 with counit(g) = 0", "BIALG"});
    }
    {
        const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
        out.push_back({"rmatrix-one-g", RMatrix(group_algebra(2, f).bialgebra, {zero, one, zero, zero}),
                       "R = 1 (x) g on kZ2", "QT"});
    }
    return out;
}

inline std::vector<CatalogEntry> positives(FieldSpec f = FieldSpec::rationals()) {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= 8; ++n) {
        out.push_back({"kZ" + std::to_string(n), group_algebra(n, f), "group algebra of the cyclic group of order " +
                                                                            std::to_string(n), ""});
    }
    out.push_back({"monoid", idempotent_monoid(f), "bialgebra {1,t}, t^2 = t, t grouplike; no antipode", ""});
    if (f.characteristic() != 2) {
        out.push_back({"sweedler", sweedler(f), "Sweedler's four-dimensional Hopf algebra", ""});
        out.push_back({"superline", superline(f), "super line over kZ2", ""});
        out.push_back({"superline-bosonize", BosonizeInput{superline_module(f), z2_rmatrix(f)},
                       "super line with its action and the kZ2 R-matrix; coaction derived", ""});
        out.push_back({"z2-rmatrix", z2_rmatrix(f), "nontrivial R-matrix on kZ2", ""});
    }
    out.push_back({"unit-bundle", unit_bundle(group_algebra(2, f)), "B = k over kZ2", ""});
    out.push_back({"trivial-kz3-over-kz2",
                   trivial_bundle(group_algebra(3, f, "B"), group_algebra(2, f)),
                   "kZ3 with trivial kZ2 action and coaction", ""});
    return out;
}

inline std::vector<CatalogEntry> all_entries(FieldSpec f = FieldSpec::rationals()) {
    auto out = positives(f);
    if (f.characteristic() != 2) {
        for (auto& e : counterexamples(f)) out.push_back(std::move(e));
    }
    return out;
}

inline std::optional<CatalogEntry> find(const std::string& name, FieldSpec f = FieldSpec::rationals()) {
    for (auto& e : all_entries(f)) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

/// The maximal cascade a payload admits.
inline CheckReport check_payload(const Payload& p) {
    struct Visitor {
        CheckReport operator()(const BialgebraData& b) const { return check_cascade(b, std::nullopt); }
        CheckReport operator()(const HopfData& h) const { return check_cascade(h); }
        CheckReport operator()(const BraidedHopfData& d) const { return check_theorem_hypotheses(d); }
        CheckReport operator()(const RMatrix& r) const {
            CheckReport rep = check_cascade(r.h(), std::nullopt);
            rep.append(check_quasitriangular(r));
            return rep;
        }
        CheckReport operator()(const BosonizeInput& in) const {
            CheckReport rep = check_quasitriangular(in.r);
            rep.append(check_theorem_hypotheses(bosonized_bundle(in.module, in.r, true)));
            rep.sort_by_axiom();
            rep.hopf_ready = rep.ok() && in.module.b_antipode && in.module.h_antipode;
            return rep;
        }
    };
    return std::visit(Visitor{}, p);
}

}  // namespace biprod::catalog
