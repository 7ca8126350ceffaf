#pragma once

/**
 * @file ydcat.hpp
 * @brief H-actions and H-coactions on B, and executable checks for every
 * hypothesis of the biproduct theorem.
 *
 * Each side of each identity is a chain of layers built from the primitive
 * maps (m, Δ, η, ε of B and H, the action α, the coaction ρ and the flip τ)
 * in the wire order of the corresponding string diagram. Crossings are the
 * plain flip of vector spaces.
 *
 * The module law is the standard left one, (gh)·b = g·(h·b).
 */

#include <optional>
#include <string>
#include <utility>

#include "biprod/exactla/chain.hpp"
#include "biprod/report.hpp"
#include "biprod/structures.hpp"

namespace biprod {

/// α: H⊗B → B.
struct ActionData {
    SpaceSig h_space;
    SpaceSig b_space;
    LinMap action;

    ActionData(SpaceSig h, SpaceSig b, LinMap a) : h_space(std::move(h)), b_space(std::move(b)), action(std::move(a)) {
        detail::expect_sig(action, h_space * b_space, b_space, "action");
    }
};

/// ρ: B → H⊗B, ρ(b) = Σ b₋₁⊗b₀.
struct CoactionData {
    SpaceSig h_space;
    SpaceSig b_space;
    LinMap coaction;

    CoactionData(SpaceSig h, SpaceSig b, LinMap c)
        : h_space(std::move(h)), b_space(std::move(b)), coaction(std::move(c)) {
        detail::expect_sig(coaction, b_space, h_space * b_space, "coaction");
    }
};

/// Everything the biproduct theorem quantifies over.
struct BraidedHopfData {
    BialgebraData b;  ///< B's algebra and braided coalgebra
    std::optional<LinMap> b_antipode;
    BialgebraData h;
    std::optional<LinMap> h_antipode;
    ActionData act;
    CoactionData coact;

    BraidedHopfData(BialgebraData b_, std::optional<LinMap> sb, BialgebraData h_, std::optional<LinMap> sh, LinMap action,
                    LinMap coaction)
        : b(std::move(b_)), b_antipode(std::move(sb)), h(std::move(h_)), h_antipode(std::move(sh)),
          act(h.space(), b.space(), std::move(action)), coact(h.space(), b.space(), std::move(coaction)) {
        if (b.field() != h.field() || act.action.field() != b.field() || coact.coaction.field() != b.field()) {
            throw FieldMismatch();
        }
        if (b_antipode) detail::expect_sig(*b_antipode, b.space(), b.space(), "antipode of B");
        if (h_antipode) detail::expect_sig(*h_antipode, h.space(), h.space(), "antipode of H");
    }

    [[nodiscard]] const FieldSpec& field() const { return b.field(); }
    [[nodiscard]] const LinMap& alpha() const { return act.action; }
    [[nodiscard]] const LinMap& rho() const { return coact.coaction; }
    [[nodiscard]] std::string b_name() const { return subject_name(b.space()); }
    [[nodiscard]] std::string h_name() const { return subject_name(h.space()); }
};

namespace detail {
/// The primitive generators of one bundle, named as in the diagrams.
struct Gens {
    FieldSpec f;
    LinMap id_h, id_b, m_h, cm_h, u_h, cu_h, m_b, cm_b, u_b, cu_b, alpha, rho;
    LinMap tau_hb, tau_bh, tau_hh, tau_bb;

    explicit Gens(const BraidedHopfData& d)
        : f(d.field()), id_h(d.h.id()), id_b(d.b.id()), m_h(d.h.mult()), cm_h(d.h.comult()), u_h(d.h.unit()),
          cu_h(d.h.counit()), m_b(d.b.mult()), cm_b(d.b.comult()), u_b(d.b.unit()), cu_b(d.b.counit()),
          alpha(d.alpha()), rho(d.rho()), tau_hb(flip(f, d.h.space(), d.b.space())),
          tau_bh(flip(f, d.b.space(), d.h.space())), tau_hh(flip(f, d.h.space(), d.h.space())),
          tau_bb(flip(f, d.b.space(), d.b.space())) {}
};
}  // namespace detail

/// α∘(m_H⊗id) = α∘(id⊗α) and α∘(η_H⊗id) = id.
inline CheckReport check_module(const BialgebraData& h, const ActionData& a) {
    const LinMap id_b = LinMap::identity(h.field(), a.b_space);
    const auto subject = subject_name(a.b_space);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::MOD_ASSOC, subject, chain({Layer{h.mult(), id_b}, a.action}),
                         chain({Layer{h.id(), a.action}, a.action})));
    rep.add(compare_maps(AxiomId::MOD_UNIT, subject, chain({Layer{h.unit(), id_b}, a.action}), id_b));
    return rep;
}

/// (id⊗ρ)∘ρ = (Δ_H⊗id)∘ρ and (ε_H⊗id)∘ρ = id.
inline CheckReport check_comodule(const BialgebraData& h, const CoactionData& c) {
    const LinMap id_b = LinMap::identity(h.field(), c.b_space);
    const auto subject = subject_name(c.b_space);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::COMOD_COASSOC, subject, chain({c.coaction, Layer{h.id(), c.coaction}}),
                         chain({c.coaction, Layer{h.comult(), id_b}})));
    rep.add(compare_maps(AxiomId::COMOD_COUNIT, subject, chain({c.coaction, Layer{h.counit(), id_b}}), id_b));
    return rep;
}

/// h·(ab) = Σ(h₁·a)(h₂·b) and h·1 = ε(h)1.
inline CheckReport check_module_algebra(const BraidedHopfData& d) {
    const detail::Gens g(d);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::EQ2, d.b_name(), chain({Layer{g.id_h, g.m_b}, g.alpha}),
                         chain({Layer{g.cm_h, g.id_b, g.id_b}, Layer{g.id_h, g.tau_hb, g.id_b}, Layer{g.alpha, g.alpha},
                                g.m_b})));
    rep.add(compare_maps(AxiomId::EQ2_UNIT, d.b_name(), chain({Layer{g.id_h, g.u_b}, g.alpha}),
                         chain({g.cu_h, g.u_b})));
    return rep;
}

/// Δ(h·b) = Σ(h₁·b₁)⊗(h₂·b₂) and ε(h·b) = ε(h)ε(b).
inline CheckReport check_module_coalgebra(const BraidedHopfData& d) {
    const detail::Gens g(d);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::EQ3, d.b_name(), chain({g.alpha, g.cm_b}),
                         chain({Layer{g.cm_h, g.cm_b}, Layer{g.id_h, g.tau_hb, g.id_b}, Layer{g.alpha, g.alpha}})));
    rep.add(compare_maps(AxiomId::EQ3_COUNIT, d.b_name(), chain({g.alpha, g.cu_b}), chain({Layer{g.cu_h, g.cu_b}})));
    return rep;
}

/// ρ(ab) = Σ a₋₁b₋₁⊗a₀b₀ and ρ(1) = 1⊗1.
inline CheckReport check_comodule_algebra(const BraidedHopfData& d) {
    const detail::Gens g(d);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::EQ4, d.b_name(), chain({g.m_b, g.rho}),
                         chain({Layer{g.rho, g.rho}, Layer{g.id_h, g.tau_bh, g.id_b}, Layer{g.m_h, g.m_b}})));
    rep.add(compare_maps(AxiomId::EQ4_UNIT, d.b_name(), chain({g.u_b, g.rho}), chain({Layer{g.u_h, g.u_b}})));
    return rep;
}

/// Σ b₋₁⊗b₀₁⊗b₀₂ = Σ b₁₋₁b₂₋₁⊗b₁₀⊗b₂₀ and (id⊗ε)∘ρ = η∘ε.
inline CheckReport check_comodule_coalgebra(const BraidedHopfData& d) {
    const detail::Gens g(d);
    CheckReport rep;
    rep.add(compare_maps(
        AxiomId::EQ5, d.b_name(), chain({g.rho, Layer{g.id_h, g.cm_b}}),
        chain({g.cm_b, Layer{g.rho, g.rho}, Layer{g.id_h, g.tau_bh, g.id_b}, Layer{g.m_h, g.id_b, g.id_b}})));
    rep.add(compare_maps(AxiomId::EQ5_COUNIT, d.b_name(), chain({g.rho, Layer{g.id_h, g.cu_b}}),
                         chain({g.cu_b, g.u_h})));
    return rep;
}

/// Σ h₁b₋₁ ⊗ h₂·b₀ = Σ (h₁·b)₋₁h₂ ⊗ (h₁·b)₀ as maps H⊗B → H⊗B.
inline CheckReport check_yd_condition(const BraidedHopfData& d) {
    const detail::Gens g(d);
    const LinMap lhs = chain({Layer{g.cm_h, g.rho}, Layer{g.id_h, g.tau_hh, g.id_b}, Layer{g.m_h, g.alpha}});
    const LinMap rhs = chain({Layer{g.cm_h, g.id_b}, Layer{g.tau_hh, g.id_b}, Layer{g.id_h, g.alpha},
                              Layer{g.id_h, g.rho}, Layer{g.tau_hh, g.id_b}, Layer{g.m_h, g.id_b}});
    CheckReport rep;
    rep.add(compare_maps(AxiomId::YD, d.b_name(), lhs, rhs));
    return rep;
}

/// Δ_B(ab) = Σ a₁(a₂₋₁·b₁) ⊗ a₂₀b₂.
inline CheckReport check_condition1(const BraidedHopfData& d) {
    const detail::Gens g(d);
    const LinMap rhs =
        chain({Layer{g.cm_b, g.cm_b}, Layer{g.id_b, g.rho, g.id_b, g.id_b}, Layer{g.id_b, g.id_h, g.tau_bb, g.id_b},
               Layer{g.id_b, g.alpha, g.id_b, g.id_b}, Layer{g.m_b, g.m_b}});
    CheckReport rep;
    rep.add(compare_maps(AxiomId::COND1, d.b_name(), compose(g.cm_b, g.m_b), rhs));
    return rep;
}

/// ε_B multiplicative and unital; Δ_B(1) = 1⊗1.
inline CheckReport check_braided_counit_unit(const BraidedHopfData& d) {
    const detail::Gens g(d);
    CheckReport rep;
    rep.add(compare_maps(AxiomId::BR_COUNIT_MULT, d.b_name(), compose(g.cu_b, g.m_b), chain({Layer{g.cu_b, g.cu_b}})));
    rep.add(compare_maps(AxiomId::BR_COUNIT_UNIT, d.b_name(), compose(g.cu_b, g.u_b),
                         LinMap::identity(g.f, SpaceSig{})));
    rep.add(compare_maps(AxiomId::BR_COMULT_UNIT, d.b_name(), compose(g.cm_b, g.u_b), chain({Layer{g.u_b, g.u_b}})));
    return rep;
}

/// m_B∘(S_B⊗id)∘Δ_B = η_B∘ε_B = m_B∘(id⊗S_B)∘Δ_B. Empty report if S_B is absent.
inline CheckReport check_braided_antipode(const BraidedHopfData& d) {
    CheckReport rep;
    if (!d.b_antipode) return rep;
    const detail::Gens g(d);
    const LinMap& s = *d.b_antipode;
    const LinMap unit_counit = compose(g.u_b, g.cu_b);
    rep.add(compare_maps(AxiomId::BR_ANTIPODE_LEFT, d.b_name(), chain({g.cm_b, Layer{s, g.id_b}, g.m_b}),
                         unit_counit));
    rep.add(compare_maps(AxiomId::BR_ANTIPODE_RIGHT, d.b_name(), chain({g.cm_b, Layer{g.id_b, s}, g.m_b}),
                         unit_counit));
    return rep;
}

/**
 * Every hypothesis of the biproduct theorem, plus the plain algebra and
 * coalgebra checks on B and the Hopf cascade on H. Results are ordered by
 * the axiom enumeration; hopf_ready is set iff everything passes and both
 * antipodes are present.
 */
inline CheckReport check_theorem_hypotheses(const BraidedHopfData& d) {
    CheckReport rep = check_algebra(d.b.algebra);
    rep.append(check_coalgebra(d.b.coalgebra));
    rep.append(check_cascade(d.h, d.h_antipode));
    rep.append(check_module(d.h, d.act));
    rep.append(check_comodule(d.h, d.coact));
    rep.append(check_module_algebra(d));
    rep.append(check_module_coalgebra(d));
    rep.append(check_comodule_algebra(d));
    rep.append(check_comodule_coalgebra(d));
    rep.append(check_yd_condition(d));
    rep.append(check_condition1(d));
    rep.append(check_braided_counit_unit(d));
    rep.append(check_braided_antipode(d));
    rep.sort_by_axiom();
    rep.hopf_ready = rep.ok() && d.b_antipode.has_value() && d.h_antipode.has_value();
    return rep;
}

}  // namespace biprod
