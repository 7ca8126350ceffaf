#pragma once

/**
 * @file biproduct.hpp
 * @brief Smash product, smash coproduct, the biproduct B⋆H with its
 * antipode, and bosonization of an H-module bialgebra through an R-matrix.
 *
 * Conventions (basis bᵢ⋆hⱼ at flat index i·dim H + j):
 *
 *   (a⋆g)(b⋆h) = Σ a(g₁·b) ⋆ g₂h
 *   Δ(b⋆h)     = Σ b₁ ⋆ (b₂)₋₁h₁ ⊗ (b₂)₀ ⋆ h₂
 *   ε(b⋆h)     = ε(b)ε(h)
 *   S(b⋆h)     = (1 ⋆ S_H(b₋₁h)) (S_B(b₀) ⋆ 1)
 *
 * Products and coproducts are assembled by direct contraction of structure
 * constants, independently of the layered composites used by the checkers.
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprod/errors.hpp"
#include "biprod/exactla/chain.hpp"
#include "biprod/exactla/linsolve.hpp"
#include "biprod/report.hpp"
#include "biprod/structures.hpp"
#include "biprod/ydcat.hpp"

namespace biprod {

namespace detail {
inline void require(const CheckReport& rep, const std::string& what) {
    if (!rep.ok()) {
        std::string msg = what + " failed:";
        for (const auto& n : rep.failed_names()) msg += " " + n;
        throw HypothesisFailure(msg, rep.failed_names());
    }
}
}  // namespace detail

/// B#H on the signature B⊗H. Precondition: check_module and check_module_algebra pass.
inline AlgebraData smash_product(const BraidedHopfData& d, bool force = false) {
    if (!force) {
        CheckReport pre = check_module(d.h, d.act);
        pre.append(check_module_algebra(d));
        detail::require(pre, "smash product hypotheses");
    }
    const FieldSpec f = d.field();
    const std::size_t nb = d.b.space().dim(), nh = d.h.space().dim();
    const SpaceSig v = d.b.space() * d.h.space();
    const LinMap& cm_h = d.h.comult();
    const LinMap& m_h = d.h.mult();
    const LinMap& m_b = d.b.mult();
    const LinMap& alpha = d.alpha();

    LinMap mult(f, v * v, v);
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t g = 0; g < nh; ++g)
            for (std::size_t b = 0; b < nb; ++b)
                for (std::size_t h = 0; h < nh; ++h) {
                    const std::size_t col = ((a * nh + g) * nb + b) * nh + h;
                    for (std::size_t g1 = 0; g1 < nh; ++g1)
                        for (std::size_t g2 = 0; g2 < nh; ++g2) {
                            const Scalar& c1 = cm_h.at(g1 * nh + g2, g);
                            if (c1.is_zero()) continue;
                            for (std::size_t t = 0; t < nb; ++t) {
                                const Scalar& c2 = alpha.at(t, g1 * nb + b);
                                if (c2.is_zero()) continue;
                                const Scalar c12 = c1 * c2;
                                for (std::size_t u = 0; u < nb; ++u) {
                                    const Scalar& c3 = m_b.at(u, a * nb + t);
                                    if (c3.is_zero()) continue;
                                    const Scalar c123 = c12 * c3;
                                    for (std::size_t w = 0; w < nh; ++w) {
                                        const Scalar& c4 = m_h.at(w, g2 * nh + h);
                                        if (!c4.is_zero()) mult.add_to(u * nh + w, col, c123 * c4);
                                    }
                                }
                            }
                        }
                }
    LinMap unit(f, SpaceSig{}, v);
    for (std::size_t u = 0; u < nb; ++u)
        for (std::size_t w = 0; w < nh; ++w) unit.set(u * nh + w, 0, d.b.unit().at(u, 0) * d.h.unit().at(w, 0));
    return {f, v, std::move(mult), std::move(unit)};
}

/// B♯H on the signature B⊗H. Precondition: B is a coalgebra, check_comodule and check_comodule_coalgebra pass.
inline CoalgebraData smash_coproduct(const BraidedHopfData& d, bool force = false) {
    if (!force) {
        CheckReport pre = check_coalgebra(d.b.coalgebra);
        pre.append(check_comodule(d.h, d.coact));
        pre.append(check_comodule_coalgebra(d));
        detail::require(pre, "smash coproduct hypotheses");
    }
    const FieldSpec f = d.field();
    const std::size_t nb = d.b.space().dim(), nh = d.h.space().dim();
    const SpaceSig v = d.b.space() * d.h.space();
    const LinMap& cm_b = d.b.comult();
    const LinMap& cm_h = d.h.comult();
    const LinMap& m_h = d.h.mult();
    const LinMap& rho = d.rho();

    LinMap comult(f, v, v * v);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t h = 0; h < nh; ++h) {
            const std::size_t col = b * nh + h;
            for (std::size_t b1 = 0; b1 < nb; ++b1)
                for (std::size_t b2 = 0; b2 < nb; ++b2) {
                    const Scalar& c1 = cm_b.at(b1 * nb + b2, b);
                    if (c1.is_zero()) continue;
                    for (std::size_t k = 0; k < nh; ++k)
                        for (std::size_t b20 = 0; b20 < nb; ++b20) {
                            const Scalar& c2 = rho.at(k * nb + b20, b2);
                            if (c2.is_zero()) continue;
                            const Scalar c12 = c1 * c2;
                            for (std::size_t h1 = 0; h1 < nh; ++h1)
                                for (std::size_t h2 = 0; h2 < nh; ++h2) {
                                    const Scalar& c3 = cm_h.at(h1 * nh + h2, h);
                                    if (c3.is_zero()) continue;
                                    const Scalar c123 = c12 * c3;
                                    for (std::size_t w = 0; w < nh; ++w) {
                                        const Scalar& c4 = m_h.at(w, k * nh + h1);
                                        if (c4.is_zero()) continue;
                                        const std::size_t row = ((b1 * nh + w) * nb + b20) * nh + h2;
                                        comult.add_to(row, col, c123 * c4);
                                    }
                                }
                        }
                }
        }
    LinMap counit(f, v, SpaceSig{});
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t h = 0; h < nh; ++h) counit.set(0, b * nh + h, d.b.counit().at(0, b) * d.h.counit().at(0, h));
    return {f, v, std::move(comult), std::move(counit)};
}

/// The constructed B⋆H together with the post-construction cascade.
struct BiproductData {
    BialgebraData bialgebra;
    std::optional<LinMap> antipode;
    std::shared_ptr<const BraidedHopfData> source;
    CheckReport post_check;

    [[nodiscard]] std::size_t dim() const { return bialgebra.space().dim(); }
    [[nodiscard]] std::optional<HopfData> hopf() const {
        if (!antipode) return std::nullopt;
        return HopfData(bialgebra, *antipode);
    }
};

/// S(b⋆h) = (1⋆S_H(b₋₁h))(S_B(b₀)⋆1), evaluated with the smash multiplication.
inline LinMap biproduct_antipode(const BraidedHopfData& d, const AlgebraData& smash) {
    if (!d.b_antipode || !d.h_antipode) throw InvalidParameter("biproduct antipode needs both S_B and S_H");
    const FieldSpec f = d.field();
    const std::size_t nb = d.b.space().dim(), nh = d.h.space().dim();
    const SpaceSig v = smash.space;
    const LinMap& s_b = *d.b_antipode;
    const LinMap& s_h = *d.h_antipode;
    LinMap out(f, v, v);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t h = 0; h < nh; ++h) {
            Vec total(f, v);
            for (std::size_t k = 0; k < nh; ++k)
                for (std::size_t b0 = 0; b0 < nb; ++b0) {
                    const Scalar& c = d.rho().at(k * nb + b0, b);
                    if (c.is_zero()) continue;
                    // left = 1_B ⋆ S_H(k·h), right = S_B(b0) ⋆ 1_H
                    Vec left(f, v), right(f, v);
                    for (std::size_t w = 0; w < nh; ++w) {
                        const Scalar& kh = d.h.mult().at(w, k * nh + h);
                        if (kh.is_zero()) continue;
                        for (std::size_t s = 0; s < nh; ++s) {
                            const Scalar& sv = s_h.at(s, w);
                            if (sv.is_zero()) continue;
                            for (std::size_t u = 0; u < nb; ++u) {
                                const Scalar& one_b = d.b.unit().at(u, 0);
                                if (!one_b.is_zero()) left.coeffs[u * nh + s] += c * kh * sv * one_b;
                            }
                        }
                    }
                    for (std::size_t t = 0; t < nb; ++t) {
                        const Scalar& sb = s_b.at(t, b0);
                        if (sb.is_zero()) continue;
                        for (std::size_t w = 0; w < nh; ++w) {
                            const Scalar& one_h = d.h.unit().at(w, 0);
                            if (!one_h.is_zero()) right.coeffs[t * nh + w] += sb * one_h;
                        }
                    }
                    const Vec prod = apply(smash.mult, outer(left, right));
                    for (std::size_t i = 0; i < total.coeffs.size(); ++i) total.coeffs[i] += prod.coeffs[i];
                }
            out.set_column(b * nh + h, total.coeffs);
        }
    return out;
}

/**
 * Builds B⋆H. Unless forced, the theorem's hypotheses must pass and the
 * result must pass the bialgebra (and, with both antipodes, Hopf) cascade;
 * a post-check failure then means an internal bug and raises
 * StructuralInconsistency.
 */
inline BiproductData build_biproduct(const BraidedHopfData& d, bool force = false) {
    if (!force) detail::require(check_theorem_hypotheses(d), "biproduct hypotheses");
    AlgebraData alg = smash_product(d, true);
    CoalgebraData coalg = smash_coproduct(d, true);
    std::optional<LinMap> s;
    if (d.b_antipode && d.h_antipode) s = biproduct_antipode(d, alg);
    BiproductData out{BialgebraData(std::move(alg), std::move(coalg)), std::move(s),
                      std::make_shared<const BraidedHopfData>(d), {}};
    out.post_check = check_cascade(out.bialgebra, out.antipode);
    if (!force && !out.post_check.ok()) {
        throw StructuralInconsistency("biproduct failed " + out.post_check.failed_names().front() +
                                      " although its hypotheses hold");
    }
    return out;
}

/// (a⊗b)(c⊗d) = ac⊗bd on H⊗H, as a map [H,H,H,H] → [H,H].
inline LinMap tensor_square_mult(const BialgebraData& h) {
    const LinMap id = h.id();
    return chain({Layer{id, flip(h.field(), h.space(), h.space()), id}, Layer{h.mult(), h.mult()}});
}

/// An element R ∈ H⊗H together with its inverse.
class RMatrix {
public:
    /// Throws InvalidParameter if R is not invertible in H⊗H.
    RMatrix(BialgebraData h, std::vector<Scalar> element) : h_(std::move(h)), element_(std::move(element)) {
        const FieldSpec f = h_.field();
        const SpaceSig hh = h_.space() * h_.space();
        const std::size_t n2 = hh.dim();
        if (element_.size() != n2) throw InvalidParameter("R-matrix needs " + std::to_string(n2) + " coefficients");
        const LinMap mult2 = tensor_square_mult(h_);
        const LinMap left_mult = chain({Layer{element_map(f, hh, element_), LinMap::identity(f, hh)}, mult2});
        std::vector<Scalar> target = chain({Layer{h_.unit(), h_.unit()}}).column(0);
        Matrix sys(f, n2, n2);
        for (std::size_t r = 0; r < n2; ++r)
            for (std::size_t c = 0; c < n2; ++c) sys(r, c) = left_mult.at(r, c);
        auto sol = solve_linear(std::move(sys), target, f);
        if (!sol) throw InvalidParameter("R-matrix is not invertible");
        inverse_ = std::move(*sol);
        const LinMap right_check = chain({Layer{element_map(f, hh, inverse_), element_map(f, hh, element_)}, mult2});
        if (right_check.column(0) != target) throw InvalidParameter("R-matrix has no two-sided inverse");
    }

    [[nodiscard]] const BialgebraData& h() const noexcept { return h_; }
    [[nodiscard]] const std::vector<Scalar>& element() const noexcept { return element_; }
    [[nodiscard]] const std::vector<Scalar>& inverse() const noexcept { return inverse_; }

    [[nodiscard]] LinMap element_as_map() const { return element_map(h_.field(), h_.space() * h_.space(), element_); }
    [[nodiscard]] LinMap inverse_as_map() const { return element_map(h_.field(), h_.space() * h_.space(), inverse_); }

private:
    BialgebraData h_;
    std::vector<Scalar> element_;
    std::vector<Scalar> inverse_;
};

/**
 * Standard quasitriangularity: RΔ(h) = Δᵒᵖ(h)R, (Δ⊗id)R = R₁₃R₂₃,
 * (id⊗Δ)R = R₁₃R₁₂, (ε⊗id)R = 1 = (id⊗ε)R.
 */
inline CheckReport check_quasitriangular(const RMatrix& r) {
    const BialgebraData& h = r.h();
    const FieldSpec f = h.field();
    const SpaceSig& hs = h.space();
    const LinMap id = h.id();
    const LinMap rm = r.element_as_map();
    const LinMap mult2 = tensor_square_mult(h);
    const LinMap tau = flip(f, hs, hs);
    // x⊗y in H^3⊗H^3 ↦ xy: adjacent flips to a1 b1 a2 b2 a3 b3, then pairwise products
    auto triple_product = [&](const LinMap& x, const LinMap& y) {
        return chain({Layer{x, y}, Layer{id, id, tau, id, id}, Layer{id, tau, id, id, id}, Layer{id, id, id, tau, id},
                      Layer{h.mult(), h.mult(), h.mult()}});
    };
    const LinMap r12 = chain({rm, Layer{id, id, h.unit()}});
    const LinMap r13 = chain({rm, Layer{id, h.unit(), id}});
    const LinMap r23 = chain({rm, Layer{h.unit(), id, id}});
    const std::string subject = "R";

    CheckReport rep;
    rep.add(compare_maps(AxiomId::QT_INTERTWINE, subject, chain({Layer{rm, h.comult()}, mult2}),
                         chain({Layer{h.comult(), rm}, Layer{flip(f, hs, hs), id, id}, mult2})));
    rep.add(compare_maps(AxiomId::QT_COMULT_LEFT, subject, chain({rm, Layer{h.comult(), id}}),
                         triple_product(r13, r23)));
    rep.add(compare_maps(AxiomId::QT_COMULT_RIGHT, subject, chain({rm, Layer{id, h.comult()}}),
                         triple_product(r13, r12)));
    rep.add(compare_maps(AxiomId::QT_COUNIT_LEFT, subject, chain({rm, Layer{h.counit(), id}}), h.unit()));
    rep.add(compare_maps(AxiomId::QT_COUNIT_RIGHT, subject, chain({rm, Layer{id, h.counit()}}), h.unit()));
    return rep;
}

/// ρ(b) = R⁻¹(1⊗b) = Σ R⁻¹⁽¹⁾ ⊗ R⁻¹⁽²⁾·b.
inline CoactionData bosonize_coaction(const ActionData& act, const RMatrix& r, bool force = false) {
    const BialgebraData& h = r.h();
    if (!(act.h_space == h.space())) throw SignatureMismatch("action and R-matrix use different H");
    if (!force) {
        CheckReport pre = check_quasitriangular(r);
        pre.append(check_module(h, act));
        detail::require(pre, "bosonization hypotheses");
    }
    const FieldSpec f = h.field();
    const LinMap id_b = LinMap::identity(f, act.b_space);
    LinMap rho = chain({Layer{r.inverse_as_map(), id_b}, Layer{h.id(), act.action}});
    CoactionData out(h.space(), act.b_space, std::move(rho));
    if (!force && !check_comodule(h, out).ok()) {
        throw StructuralInconsistency("derived coaction is not a comodule structure");
    }
    return out;
}

/// B with its H-action, before a coaction is chosen.
struct ModuleBialgebraData {
    BialgebraData b;
    std::optional<LinMap> b_antipode;
    BialgebraData h;
    std::optional<LinMap> h_antipode;
    LinMap action;
};

inline BraidedHopfData bosonized_bundle(const ModuleBialgebraData& m, const RMatrix& r, bool force = false) {
    const ActionData act(m.h.space(), m.b.space(), m.action);
    CoactionData coact = bosonize_coaction(act, r, force);
    return {m.b, m.b_antipode, m.h, m.h_antipode, m.action, std::move(coact.coaction)};
}

/// Derives the coaction from R, then delegates to build_biproduct (hypotheses re-checked).
inline BiproductData bosonize(const ModuleBialgebraData& m, const RMatrix& r, bool force = false) {
    return build_biproduct(bosonized_bundle(m, r, force), force);
}

}  // namespace biprod
