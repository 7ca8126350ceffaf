#pragma once

/**
 * @file report.hpp
 * @brief Axiom identifiers and pass/fail reports with exact witnesses.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "biprod/exactla/linmap.hpp"

namespace biprod {

// Order here is the report order.
enum class AxiomId {
    ALG_ASSOC,
    ALG_UNIT_LEFT,
    ALG_UNIT_RIGHT,
    COALG_COASSOC,
    COALG_COUNIT_LEFT,
    COALG_COUNIT_RIGHT,
    BIALG_COMULT_MULT,
    BIALG_COUNIT_MULT,
    BIALG_COMULT_UNIT,
    BIALG_COUNIT_UNIT,
    HOPF_ANTIPODE_LEFT,
    HOPF_ANTIPODE_RIGHT,
    MOD_ASSOC,
    MOD_UNIT,
    COMOD_COASSOC,
    COMOD_COUNIT,
    EQ2,
    EQ2_UNIT,
    EQ3,
    EQ3_COUNIT,
    EQ4,
    EQ4_UNIT,
    EQ5,
    EQ5_COUNIT,
    YD,
    COND1,
    BR_COUNIT_MULT,
    BR_COUNIT_UNIT,
    BR_COMULT_UNIT,
    BR_ANTIPODE_LEFT,
    BR_ANTIPODE_RIGHT,
    QT_INTERTWINE,
    QT_COMULT_LEFT,
    QT_COMULT_RIGHT,
    QT_COUNIT_LEFT,
    QT_COUNIT_RIGHT,
    TANGLE_EQ,
};

struct AxiomInfo {
    AxiomId id;
    std::string_view name;
    std::string_view family;
};

inline constexpr std::array<AxiomInfo, 37> axiom_table{{
    {AxiomId::ALG_ASSOC, "ALG_ASSOC", "ALG"},
    {AxiomId::ALG_UNIT_LEFT, "ALG_UNIT_LEFT", "ALG"},
    {AxiomId::ALG_UNIT_RIGHT, "ALG_UNIT_RIGHT", "ALG"},
    {AxiomId::COALG_COASSOC, "COALG_COASSOC", "COALG"},
    {AxiomId::COALG_COUNIT_LEFT, "COALG_COUNIT_LEFT", "COALG"},
    {AxiomId::COALG_COUNIT_RIGHT, "COALG_COUNIT_RIGHT", "COALG"},
    {AxiomId::BIALG_COMULT_MULT, "BIALG_COMULT_MULT", "BIALG"},
    {AxiomId::BIALG_COUNIT_MULT, "BIALG_COUNIT_MULT", "BIALG"},
    {AxiomId::BIALG_COMULT_UNIT, "BIALG_COMULT_UNIT", "BIALG"},
    {AxiomId::BIALG_COUNIT_UNIT, "BIALG_COUNIT_UNIT", "BIALG"},
    {AxiomId::HOPF_ANTIPODE_LEFT, "HOPF_ANTIPODE_LEFT", "HOPF"},
    {AxiomId::HOPF_ANTIPODE_RIGHT, "HOPF_ANTIPODE_RIGHT", "HOPF"},
    {AxiomId::MOD_ASSOC, "MOD_ASSOC", "MOD"},
    {AxiomId::MOD_UNIT, "MOD_UNIT", "MOD"},
    {AxiomId::COMOD_COASSOC, "COMOD_COASSOC", "COMOD"},
    {AxiomId::COMOD_COUNIT, "COMOD_COUNIT", "COMOD"},
    {AxiomId::EQ2, "EQ2", "EQ2"},
    {AxiomId::EQ2_UNIT, "EQ2_UNIT", "EQ2"},
    {AxiomId::EQ3, "EQ3", "EQ3"},
    {AxiomId::EQ3_COUNIT, "EQ3_COUNIT", "EQ3"},
    {AxiomId::EQ4, "EQ4", "EQ4"},
    {AxiomId::EQ4_UNIT, "EQ4_UNIT", "EQ4"},
    {AxiomId::EQ5, "EQ5", "EQ5"},
    {AxiomId::EQ5_COUNIT, "EQ5_COUNIT", "EQ5"},
    {AxiomId::YD, "YD", "YD"},
    {AxiomId::COND1, "COND1", "COND1"},
    {AxiomId::BR_COUNIT_MULT, "BR_COUNIT_MULT", "BR_COUNIT"},
    {AxiomId::BR_COUNIT_UNIT, "BR_COUNIT_UNIT", "BR_COUNIT"},
    {AxiomId::BR_COMULT_UNIT, "BR_COMULT_UNIT", "BR_COUNIT"},
    {AxiomId::BR_ANTIPODE_LEFT, "BR_ANTIPODE_LEFT", "BR_ANTIPODE"},
    {AxiomId::BR_ANTIPODE_RIGHT, "BR_ANTIPODE_RIGHT", "BR_ANTIPODE"},
    {AxiomId::QT_INTERTWINE, "QT_INTERTWINE", "QT"},
    {AxiomId::QT_COMULT_LEFT, "QT_COMULT_LEFT", "QT"},
    {AxiomId::QT_COMULT_RIGHT, "QT_COMULT_RIGHT", "QT"},
    {AxiomId::QT_COUNIT_LEFT, "QT_COUNIT_LEFT", "QT"},
    {AxiomId::QT_COUNIT_RIGHT, "QT_COUNIT_RIGHT", "QT"},
    {AxiomId::TANGLE_EQ, "TANGLE_EQ", "TANGLE"},
}};

inline const AxiomInfo& axiom_info(AxiomId id) { return axiom_table[static_cast<std::size_t>(id)]; }
inline std::string_view axiom_name(AxiomId id) { return axiom_info(id).name; }
inline std::string_view axiom_family(AxiomId id) { return axiom_info(id).family; }

inline std::optional<AxiomId> axiom_from_name(std::string_view name) {
    for (const auto& a : axiom_table) {
        if (a.name == name) return a.id;
    }
    return std::nullopt;
}

/// First differing entry: input basis indices, then output basis indices.
struct Witness {
    std::vector<std::size_t> indices;
    std::vector<std::string> basis_names;
    std::string lhs_entry;
    std::string rhs_entry;
};

struct CheckResult {
    AxiomId id;
    std::string subject;  ///< which object the axiom is about, e.g. "H", "B", "B⋆H"
    bool pass = true;
    std::optional<Witness> witness;  ///< present iff !pass
    std::string label;               ///< free-form tag, used by tangle equations
};

struct CheckReport {
    std::vector<CheckResult> results;
    /// Set by the theorem-hypothesis checker only.
    std::optional<bool> hopf_ready;

    [[nodiscard]] bool ok() const {
        return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    }

    void add(CheckResult r) { results.push_back(std::move(r)); }

    void append(const CheckReport& other) {
        results.insert(results.end(), other.results.begin(), other.results.end());
    }

    [[nodiscard]] bool failed(AxiomId id) const {
        return std::any_of(results.begin(), results.end(), [&](const CheckResult& r) { return r.id == id && !r.pass; });
    }

    [[nodiscard]] bool family_failed(std::string_view family) const {
        return std::any_of(results.begin(), results.end(),
                           [&](const CheckResult& r) { return !r.pass && axiom_family(r.id) == family; });
    }

    [[nodiscard]] std::vector<std::string> failed_names() const {
        std::vector<std::string> out;
        for (const auto& r : results) {
            if (!r.pass) out.emplace_back(axiom_name(r.id));
        }
        return out;
    }

    /// Stable order: fixed axiom enumeration, then insertion order.
    void sort_by_axiom() {
        std::stable_sort(results.begin(), results.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    }
};

/**
 * Compares two maps exactly. On mismatch the witness is the first differing
 * entry, scanning input basis vectors in lexicographic order.
 */
inline CheckResult compare_maps(AxiomId id, std::string subject, const LinMap& lhs, const LinMap& rhs) {
    if (lhs.field() != rhs.field()) throw FieldMismatch();
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        throw SignatureMismatch(std::string(axiom_name(id)) + ": sides have shapes " + lhs.dom().to_string() + "->" +
                                lhs.cod().to_string() + " and " + rhs.dom().to_string() + "->" +
                                rhs.cod().to_string());
    }
    CheckResult res{id, std::move(subject), true, std::nullopt, {}};
    if (auto diff = first_difference(lhs, rhs)) {
        const auto [row, col] = *diff;
        Witness w;
        w.indices = lhs.dom().decode(col);
        w.basis_names = lhs.dom().basis_names(col);
        for (auto i : lhs.cod().decode(row)) w.indices.push_back(i);
        for (auto& n : lhs.cod().basis_names(row)) w.basis_names.push_back(std::move(n));
        w.lhs_entry = lhs.at(row, col).to_string();
        w.rhs_entry = rhs.at(row, col).to_string();
        res.pass = false;
        res.witness = std::move(w);
    }
    return res;
}

inline void write_text(std::ostream& os, const CheckReport& rep, bool with_witness) {
    for (const auto& r : rep.results) {
        os << (r.pass ? "PASS " : "FAIL ") << axiom_name(r.id);
        if (!r.subject.empty()) os << " [" << r.subject << "]";
        if (!r.label.empty()) os << " " << r.label;
        os << '\n';
        if (with_witness && r.witness) {
            const auto& w = *r.witness;
            os << "     at";
            for (std::size_t i = 0; i < w.indices.size(); ++i) {
                os << ' ' << w.indices[i] << '(' << w.basis_names[i] << ')';
            }
            os << ": lhs=" << w.lhs_entry << " rhs=" << w.rhs_entry << '\n';
        }
    }
    if (rep.hopf_ready) os << "hopf_ready: " << (*rep.hopf_ready ? "true" : "false") << '\n';
    os << (rep.ok() ? "ok" : "FAILED") << '\n';
}

}  // namespace biprod
