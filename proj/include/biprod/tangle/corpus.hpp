#pragma once

/**
 * @file corpus.hpp
 * @brief Shipped diagram equations: the pictured axioms on B and H, the
 * composite definitions of m, Δ and S on B⋆H, and the first = last
 * equalities of the coassociativity, bialgebra and antipode figures.
 *
 * Composite equations compare a diagram built from primitive generators with
 * the constructor's map (m_BH, cm_BH, S_BH), so they need an environment
 * built with a BiproductData.
 */

#include <string>
#include <vector>

#include "biprod/tangle/eval.hpp"

namespace biprod::tangle {

/// Textual form of one corpus equation.
struct EquationText {
    std::string label, lhs, rhs;
};

namespace corpus_text {

/// (a⋆g)(b⋆h) = a(g₁·b) ⋆ g₂h on wires B H B H.
inline const std::string mult =
    "(id[B] * cm_H * id[B] * id[H]) ; (id[B] * id[H] * swap[H,B] * id[H]) ; (id[B] * act * id[H] * id[H]) ; "
    "(m_B * m_H)";

/// Δ(b⋆h) = b₁⋆(b₂)₋₁h₁ ⊗ (b₂)₀⋆h₂.
inline const std::string comult =
    "(cm_B * cm_H) ; (id[B] * coact * id[H] * id[H]) ; (id[B] * id[H] * swap[B,H] * id[H]) ; "
    "(id[B] * m_H * id[B] * id[H])";

/// S(b⋆h) = (1⋆S_H(b₋₁h))(S_B(b₀)⋆1).
inline const std::string antipode =
    "(coact * id[H]) ; (id[H] * swap[B,H]) ; (m_H * id[B]) ; (S_H * S_B) ; (cm_H * id[B]) ; "
    "(id[H] * swap[H,B]) ; (act * id[H])";

inline const std::string unit_counit = "(cu_B * cu_H) ; (u_B * u_H)";

inline std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace corpus_text

inline std::vector<EquationText> figure_corpus_text() {
    using namespace corpus_text;
    const std::string M = paren(mult), D = paren(comult), S = paren(antipode);
    const std::string yd_a = "(cm_H * coact) ; (id[H] * swap[H,H] * id[B]) ; (m_H * act)";
    const std::string yd_b =
        "(cm_H * id[B]) ; (swap[H,H] * id[B]) ; (id[H] * act) ; (id[H] * coact) ; (swap[H,H] * id[B]) ; "
        "(m_H * id[B])";
    const std::string yd_c =
        "(cm_H * id[B]) ; (id[H] * swap[H,B]) ; (act * id[H]) ; (coact * id[H]) ; (id[H] * swap[B,H]) ; "
        "(m_H * id[B])";
    // (B H B H)(B H B H) -> (B H)(B H)(B H)(B H) with the middle pairs exchanged
    const std::string middle =
        "(id[B] * id[H] * id[B] * swap[H,B] * id[H] * id[B] * id[H]) ; "
        "(id[B] * id[H] * swap[B,B] * id[H] * id[H] * id[B] * id[H]) ; "
        "(id[B] * id[H] * id[B] * id[B] * swap[H,H] * id[B] * id[H]) ; "
        "(id[B] * id[H] * id[B] * swap[B,H] * id[H] * id[B] * id[H])";
    return {
        {"module-algebra", "(id[H] * m_B) ; act",
         "(cm_H * id[B] * id[B]) ; (id[H] * swap[H,B] * id[B]) ; (act * act) ; m_B"},
        {"module-coalgebra", "act ; cm_B", "(cm_H * cm_B) ; (id[H] * swap[H,B] * id[B]) ; (act * act)"},
        {"comodule-algebra", "m_B ; coact", "(coact * coact) ; (id[H] * swap[B,H] * id[B]) ; (m_H * m_B)"},
        {"comodule-coalgebra", "coact ; (id[H] * cm_B)",
         "cm_B ; (coact * coact) ; (id[H] * swap[B,H] * id[B]) ; (m_H * id[B] * id[B])"},
        {"algebra-coalgebra", "m_H ; cm_H", "(cm_H * cm_H) ; (id[H] * swap[H,H] * id[H]) ; (m_H * m_H)"},
        {"braided-bialgebra", "m_B ; cm_B",
         "(cm_B * cm_B) ; (id[B] * coact * id[B] * id[B]) ; (id[B] * id[H] * swap[B,B] * id[B]) ; "
         "(id[B] * act * id[B] * id[B]) ; (m_B * m_B)"},
        {"yetter-drinfeld:a=b", yd_a, yd_b},
        {"yetter-drinfeld:b=c", yd_b, yd_c},
        {"composite:m", mult, "m_BH"},
        {"composite:cm", comult, "cm_BH"},
        {"composite:S", antipode, "S_BH"},
        {"fig1:coassoc", D + " ; (" + D + " * id[B] * id[H])", D + " ; (id[B] * id[H] * " + D + ")"},
        {"fig2:bialgebra", M + " ; " + D, "(" + D + " * " + D + ") ; " + middle + " ; (" + M + " * " + M + ")"},
        {"fig3:antipode-left", D + " ; (" + S + " * id[B] * id[H]) ; " + M, unit_counit},
        {"fig3:antipode-right", D + " ; (id[B] * id[H] * " + S + ") ; " + M, unit_counit},
    };
}

inline std::vector<Equation> parse_corpus(const std::vector<EquationText>& texts) {
    std::vector<Equation> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(equation(t.label, t.lhs, t.rhs));
    return out;
}

inline std::vector<Equation> figure_corpus() { return parse_corpus(figure_corpus_text()); }

/// Runs every equation; one TANGLE_EQ result per label.
inline CheckReport check_corpus(const std::vector<Equation>& eqs, const Env& env) {
    CheckReport rep;
    for (const auto& eq : eqs) rep.add(check_equation(eq, env));
    return rep;
}

}  // namespace biprod::tangle
