#pragma once

/**
 * @file structures.hpp
 * @brief Structure-constant records for (co)algebras, bialgebras and Hopf
 * algebras, with exact axiom checkers and an antipode solver.
 *
 * Every axiom side is assembled from the record's own maps with compose,
 * tensor and flip; a failing axiom carries the first differing entry.
 */

#include <optional>
#include <string>
#include <utility>

#include "biprod/errors.hpp"
#include "biprod/exactla/chain.hpp"
#include "biprod/exactla/linmap.hpp"
#include "biprod/exactla/linsolve.hpp"
#include "biprod/report.hpp"

namespace biprod {

/// Display name of a (possibly composite) space: factor names joined by "⋆".
inline std::string subject_name(const SpaceSig& sig) {
    if (sig.is_ground()) return "k";
    std::string s = sig.factors().front().name;
    for (std::size_t i = 1; i < sig.size(); ++i) s += "⋆" + sig.factors()[i].name;
    return s;
}

namespace detail {
inline void expect_sig(const LinMap& f, const SpaceSig& dom, const SpaceSig& cod, const char* what) {
    if (!(f.dom() == dom) || !(f.cod() == cod)) {
        throw SignatureMismatch(std::string(what) + " must map " + dom.to_string() + " -> " + cod.to_string() +
                                ", got " + f.dom().to_string() + " -> " + f.cod().to_string());
    }
}
inline void expect_field(const LinMap& f, FieldSpec field) {
    if (f.field() != field) throw FieldMismatch();
}
}  // namespace detail

struct AlgebraData {
    FieldSpec field;
    SpaceSig space;
    LinMap mult;  ///< V⊗V → V
    LinMap unit;  ///< k → V

    AlgebraData(FieldSpec f, SpaceSig v, LinMap m, LinMap u)
        : field(f), space(std::move(v)), mult(std::move(m)), unit(std::move(u)) {
        detail::expect_field(mult, field);
        detail::expect_field(unit, field);
        detail::expect_sig(mult, space * space, space, "multiplication");
        detail::expect_sig(unit, SpaceSig{}, space, "unit");
    }

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
    [[nodiscard]] LinMap id() const { return LinMap::identity(field, space); }
};

struct CoalgebraData {
    FieldSpec field;
    SpaceSig space;
    LinMap comult;  ///< V → V⊗V
    LinMap counit;  ///< V → k

    CoalgebraData(FieldSpec f, SpaceSig v, LinMap d, LinMap e)
        : field(f), space(std::move(v)), comult(std::move(d)), counit(std::move(e)) {
        detail::expect_field(comult, field);
        detail::expect_field(counit, field);
        detail::expect_sig(comult, space, space * space, "comultiplication");
        detail::expect_sig(counit, space, SpaceSig{}, "counit");
    }

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
    [[nodiscard]] LinMap id() const { return LinMap::identity(field, space); }
};

struct BialgebraData {
    AlgebraData algebra;
    CoalgebraData coalgebra;

    BialgebraData(AlgebraData a, CoalgebraData c) : algebra(std::move(a)), coalgebra(std::move(c)) {
        if (algebra.field != coalgebra.field) throw FieldMismatch();
        if (!(algebra.space == coalgebra.space)) {
            throw SignatureMismatch("algebra and coalgebra live on different spaces");
        }
    }

    [[nodiscard]] const FieldSpec& field() const { return algebra.field; }
    [[nodiscard]] const SpaceSig& space() const { return algebra.space; }
    [[nodiscard]] const LinMap& mult() const { return algebra.mult; }
    [[nodiscard]] const LinMap& unit() const { return algebra.unit; }
    [[nodiscard]] const LinMap& comult() const { return coalgebra.comult; }
    [[nodiscard]] const LinMap& counit() const { return coalgebra.counit; }
    [[nodiscard]] LinMap id() const { return algebra.id(); }
};

struct HopfData {
    BialgebraData bialgebra;
    LinMap antipode;  ///< V → V

    HopfData(BialgebraData b, LinMap s) : bialgebra(std::move(b)), antipode(std::move(s)) {
        detail::expect_field(antipode, bialgebra.field());
        detail::expect_sig(antipode, bialgebra.space(), bialgebra.space(), "antipode");
    }

    [[nodiscard]] const FieldSpec& field() const { return bialgebra.field(); }
    [[nodiscard]] const SpaceSig& space() const { return bialgebra.space(); }
    [[nodiscard]] const LinMap& mult() const { return bialgebra.mult(); }
    [[nodiscard]] const LinMap& unit() const { return bialgebra.unit(); }
    [[nodiscard]] const LinMap& comult() const { return bialgebra.comult(); }
    [[nodiscard]] const LinMap& counit() const { return bialgebra.counit(); }
    [[nodiscard]] LinMap id() const { return bialgebra.id(); }
};

/// m∘(m⊗id) = m∘(id⊗m); m∘(η⊗id) = id = m∘(id⊗η).
inline CheckReport check_algebra(const AlgebraData& a) {
    const auto subject = subject_name(a.space);
    const LinMap id = a.id();
    CheckReport rep;
    rep.add(compare_maps(AxiomId::ALG_ASSOC, subject, chain({Layer{a.mult, id}, a.mult}),
                         chain({Layer{id, a.mult}, a.mult})));
    rep.add(compare_maps(AxiomId::ALG_UNIT_LEFT, subject, chain({Layer{a.unit, id}, a.mult}), id));
    rep.add(compare_maps(AxiomId::ALG_UNIT_RIGHT, subject, chain({Layer{id, a.unit}, a.mult}), id));
    return rep;
}

/// (Δ⊗id)∘Δ = (id⊗Δ)∘Δ; (ε⊗id)∘Δ = id = (id⊗ε)∘Δ.
inline CheckReport check_coalgebra(const CoalgebraData& c) {
    const auto subject = subject_name(c.space);
    const LinMap id = c.id();
    CheckReport rep;
    rep.add(compare_maps(AxiomId::COALG_COASSOC, subject, chain({c.comult, Layer{c.comult, id}}),
                         chain({c.comult, Layer{id, c.comult}})));
    rep.add(compare_maps(AxiomId::COALG_COUNIT_LEFT, subject, chain({c.comult, Layer{c.counit, id}}), id));
    rep.add(compare_maps(AxiomId::COALG_COUNIT_RIGHT, subject, chain({c.comult, Layer{id, c.counit}}), id));
    return rep;
}

/// Δ and ε are algebra maps. Does not re-run the algebra/coalgebra checks.
inline CheckReport check_bialgebra(const BialgebraData& b) {
    const auto subject = subject_name(b.space());
    const FieldSpec f = b.field();
    const LinMap id = b.id();
    CheckReport rep;
    rep.add(compare_maps(AxiomId::BIALG_COMULT_MULT, subject, compose(b.comult(), b.mult()),
                         chain({Layer{b.comult(), b.comult()}, Layer{id, flip(f, b.space(), b.space()), id},
                                Layer{b.mult(), b.mult()}})));
    rep.add(compare_maps(AxiomId::BIALG_COUNIT_MULT, subject, compose(b.counit(), b.mult()),
                         chain({Layer{b.counit(), b.counit()}})));
    rep.add(compare_maps(AxiomId::BIALG_COMULT_UNIT, subject, compose(b.comult(), b.unit()),
                         chain({Layer{b.unit(), b.unit()}})));
    rep.add(compare_maps(AxiomId::BIALG_COUNIT_UNIT, subject, compose(b.counit(), b.unit()),
                         LinMap::identity(f, SpaceSig{})));
    return rep;
}

/// m∘(S⊗id)∘Δ = η∘ε = m∘(id⊗S)∘Δ.
inline CheckReport check_hopf(const HopfData& h) {
    const auto subject = subject_name(h.space());
    const LinMap id = h.id();
    const LinMap unit_counit = compose(h.unit(), h.counit());
    CheckReport rep;
    rep.add(compare_maps(AxiomId::HOPF_ANTIPODE_LEFT, subject, chain({h.comult(), Layer{h.antipode, id}, h.mult()}),
                         unit_counit));
    rep.add(compare_maps(AxiomId::HOPF_ANTIPODE_RIGHT, subject,
                         chain({h.comult(), Layer{id, h.antipode}, h.mult()}), unit_counit));
    return rep;
}

/// Algebra, coalgebra, bialgebra and (if present) Hopf checks in sequence.
inline CheckReport check_cascade(const BialgebraData& b, const std::optional<LinMap>& antipode) {
    CheckReport rep = check_algebra(b.algebra);
    rep.append(check_coalgebra(b.coalgebra));
    rep.append(check_bialgebra(b));
    if (antipode) rep.append(check_hopf(HopfData(b, *antipode)));
    return rep;
}

inline CheckReport check_cascade(const HopfData& h) { return check_cascade(h.bialgebra, h.antipode); }

/**
 * Solves m∘(S⊗id)∘Δ = η∘ε for S by exact elimination.
 *
 * Returns nullopt when the system is inconsistent. A solution that fails the
 * right convolution identity raises StructuralInconsistency.
 */
inline std::optional<LinMap> solve_antipode(const BialgebraData& b) {
    const FieldSpec f = b.field();
    const std::size_t n = b.space().dim();
    const LinMap& mult = b.mult();
    const LinMap& comult = b.comult();
    const LinMap& unit = b.unit();
    const LinMap& counit = b.counit();

    // Unknown S(k, i) at column k·n+i; equation (r, c) at row r·n+c.
    Matrix sys(f, n * n, n * n);
    std::vector<Scalar> rhs(n * n, Scalar::zero(f));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& d = comult.at(i * n + j, c);
                if (d.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const Scalar& m = mult.at(r, k * n + j);
                        if (m.is_zero()) continue;
                        sys(r * n + c, k * n + i).add_product(d, m);
                    }
                }
            }
        }
        for (std::size_t r = 0; r < n; ++r) rhs[r * n + c] = counit.at(0, c) * unit.at(r, 0);
    }
    auto sol = solve_linear(std::move(sys), std::move(rhs), f);
    if (!sol) return std::nullopt;
    LinMap s(f, b.space(), b.space());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) s.set(k, i, (*sol)[k * n + i]);
    }
    const CheckReport verify = check_hopf(HopfData(b, s));
    if (!verify.ok()) {
        throw StructuralInconsistency("solved antipode fails " + verify.failed_names().front());
    }
    return s;
}

}  // namespace biprod
