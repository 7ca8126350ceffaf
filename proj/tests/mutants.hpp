#pragma once

// Single-entry mutants of the super line bundle and the full check run on each.

#include <functional>
#include <string>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/catalog.hpp"

namespace mutants {

using namespace biprod;

struct Mutant {
    std::string label;  // map, entry, edit
    BraidedHopfData data;
};

inline std::vector<std::pair<std::string, std::function<LinMap&(BraidedHopfData&)>>> slots() {
    return {
        {"m_B", [](BraidedHopfData& d) -> LinMap& { return d.b.algebra.mult; }},
        {"u_B", [](BraidedHopfData& d) -> LinMap& { return d.b.algebra.unit; }},
        {"cm_B", [](BraidedHopfData& d) -> LinMap& { return d.b.coalgebra.comult; }},
        {"cu_B", [](BraidedHopfData& d) -> LinMap& { return d.b.coalgebra.counit; }},
        {"S_B", [](BraidedHopfData& d) -> LinMap& { return *d.b_antipode; }},
        {"m_H", [](BraidedHopfData& d) -> LinMap& { return d.h.algebra.mult; }},
        {"u_H", [](BraidedHopfData& d) -> LinMap& { return d.h.algebra.unit; }},
        {"cm_H", [](BraidedHopfData& d) -> LinMap& { return d.h.coalgebra.comult; }},
        {"cu_H", [](BraidedHopfData& d) -> LinMap& { return d.h.coalgebra.counit; }},
        {"S_H", [](BraidedHopfData& d) -> LinMap& { return *d.h_antipode; }},
        {"act", [](BraidedHopfData& d) -> LinMap& { return d.act.action; }},
        {"coact", [](BraidedHopfData& d) -> LinMap& { return d.coact.coaction; }},
    };
}

/// Each entry +1, and each nonzero entry zeroed.
inline std::vector<Mutant> superline_mutants(FieldSpec f = FieldSpec::rationals()) {
    const BraidedHopfData base = catalog::superline(f);
    std::vector<Mutant> out;
    for (const auto& [name, get] : slots()) {
        BraidedHopfData probe = base;
        const LinMap& m = get(probe);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const std::string at = name + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
                BraidedHopfData plus = base;
                get(plus).set(r, c, m.at(r, c) + Scalar::one(f));
                out.push_back({at + "+1", std::move(plus)});
                if (!m.at(r, c).is_zero()) {
                    BraidedHopfData zero = base;
                    get(zero).set(r, c, Scalar::zero(f));
                    out.push_back({at + "=0", std::move(zero)});
                }
            }
        }
    }
    return out;
}

/// Hypotheses, then the biproduct's bialgebra and Hopf checks when they pass.
inline bool survives(const BraidedHopfData& d) {
    const CheckReport pre = check_theorem_hypotheses(d);
    if (!pre.ok()) return false;
    const BiproductData bp = build_biproduct(d, true);
    return check_cascade(bp.bialgebra, bp.antipode).ok();
}

}  // namespace mutants
