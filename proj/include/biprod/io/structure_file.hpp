#pragma once

/**
 * @file structure_file.hpp
 * @brief JSON structure files: import, export, and JSON check reports.
 *
 * Layout:
 *   field      {"kind":"Q"} | {"kind":"Fp","p":7}
 *   spaces     {"H": {"dim":2, "basis":["1","g"]}, ...}
 *   algebra    {"H": {"mult": [[i,j,k,"c"],...], "unit": [[k,"c"],...]}}
 *   coalgebra  {"H": {"comult": [[i,j,k,"c"],...], "counit": [[i,"c"],...]}}
 *   antipode   {"H": [[i,j,"c"],...]}                      S(e_i) ∋ c·e_j
 *   action     {"h":"H","b":"B","entries": [[h,b,k,"c"],...]}   h·b ∋ c·b_k
 *   coaction   {"h":"H","b":"B","entries": [[b,h,k,"c"],...]}   ρ(b) ∋ c·h⊗b_k
 *   rmatrix    {"h":"H","entries": [[i,j,"c"],...]}         R ∋ c·e_i⊗e_j
 *   equations  [{"label":..,"lhs":..,"rhs":..}, ...]       tangle corpus files
 *
 * Indices list inputs first, then outputs. Omitted entries are zero;
 * a repeated index tuple is an error.
 */

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "biprod/biproduct.hpp"
#include "biprod/catalog.hpp"
#include "biprod/errors.hpp"
#include "biprod/tangle/corpus.hpp"

namespace biprod::io {

using json = nlohmann::ordered_json;

/// Everything a structure file may declare, validated but not yet interpreted.
struct StructureFile {
    FieldSpec field;
    bool field_declared = false;
    std::map<std::string, Space> spaces;
    std::map<std::string, LinMap> mult, unit, comult, counit, antipode;
    struct Action {
        std::string h, b;
        LinMap map;
    };
    std::optional<Action> action, coaction;
    struct RSection {
        std::string h;
        std::vector<Scalar> element;
    };
    std::optional<RSection> rmatrix;
    std::vector<tangle::EquationText> equations;
};

/// One checkable object found in a file.
using Subject = std::variant<AlgebraData, CoalgebraData, catalog::Payload>;

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    throw FormatError(where + ": " + what);
}

inline const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing \"") + key + "\"");
    return obj.at(key);
}

inline FieldSpec parse_field(const json& j) {
    const std::string where = "field";
    if (!j.is_object()) bad(where, "expected an object");
    const json& kind = member(j, "kind", where);
    if (!kind.is_string()) bad(where, "kind must be a string");
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        const json& p = member(j, "p", where);
        if (!p.is_number_unsigned()) bad(where, "p must be a positive integer");
        try {
            return FieldSpec::prime(p.get<std::uint64_t>());
        } catch (const InvalidParameter& e) {
            bad(where, e.what());
        }
    }
    bad(where, "unknown kind " + kind.dump());
}

inline Scalar parse_coef(FieldSpec f, const json& c, const std::string& where) {
    std::string text;
    if (c.is_string()) {
        text = c.get<std::string>();
    } else if (c.is_number_integer()) {
        text = c.dump();
    } else {
        bad(where, "coefficient must be an integer or a \"p/q\" string, got " + c.dump());
    }
    try {
        return Scalar::parse(f, text);
    } catch (const InvalidParameter& e) {
        bad(where, e.what());
    }
}

/**
 * Reads sparse entries [i_1..i_n, coef] into m. `dims` gives the range of
 * each index; `place` maps an index tuple to (row, col).
 */
template <class Place>
void read_entries(LinMap& m, const json& arr, const std::vector<std::size_t>& dims, Place place,
                  const std::string& where) {
    if (!arr.is_array()) bad(where, "expected an array of entries");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < arr.size(); ++e) {
        const json& row = arr[e];
        const std::string at = where + "[" + std::to_string(e) + "]";
        if (!row.is_array() || row.size() != dims.size() + 1) {
            bad(at, "expected " + std::to_string(dims.size()) + " indices and a coefficient");
        }
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (!row[k].is_number_unsigned()) bad(at, "index must be a non-negative integer");
            const auto v = row[k].get<std::uint64_t>();
            if (v >= dims[k]) bad(at, "index " + std::to_string(v) + " out of range " + std::to_string(dims[k]));
            idx.push_back(static_cast<std::size_t>(v));
        }
        if (!seen.insert(idx).second) bad(at, "repeated entry");
        const auto [r, c] = place(idx);
        m.set(r, c, parse_coef(m.field(), row.back(), at));
    }
}

inline const Space& space_ref(const StructureFile& sf, const json& name, const std::string& where) {
    if (!name.is_string()) bad(where, "space name must be a string");
    auto it = sf.spaces.find(name.get<std::string>());
    if (it == sf.spaces.end()) bad(where, "unknown space " + name.dump());
    return it->second;
}

inline StructureFile::Action read_action(const StructureFile& sf, const json& j, const char* section, bool coaction) {
    const std::string where = section;
    const Space& h = space_ref(sf, member(j, "h", where), where + ".h");
    const Space& b = space_ref(sf, member(j, "b", where), where + ".b");
    const std::size_t nh = h.dim(), nb = b.dim();
    const SpaceSig hs{h}, bs{b};
    if (!coaction) {
        LinMap m(sf.field, hs * bs, bs);
        read_entries(m, member(j, "entries", where), {nh, nb, nb},
                     [&](const auto& i) { return std::pair{i[2], i[0] * nb + i[1]}; }, where + ".entries");
        return {h.name, b.name, std::move(m)};
    }
    LinMap m(sf.field, bs, hs * bs);
    read_entries(m, member(j, "entries", where), {nb, nh, nb},
                 [&](const auto& i) { return std::pair{i[1] * nb + i[2], i[0]}; }, where + ".entries");
    return {h.name, b.name, std::move(m)};
}

}  // namespace detail

/// Parses and validates a document. `cli_field` is used when the file has no field and rejected when it has one.
inline StructureFile parse_structure(const json& doc, std::optional<FieldSpec> cli_field = std::nullopt) {
    using detail::bad;
    using detail::member;
    if (!doc.is_object()) bad("document", "expected a JSON object");
    StructureFile sf;
    if (doc.contains("field")) {
        if (cli_field) bad("field", "file declares a field; --field may not override it");
        sf.field = detail::parse_field(doc.at("field"));
        sf.field_declared = true;
    } else {
        sf.field = cli_field.value_or(FieldSpec::rationals());
    }
    for (const auto& key : {"algebra", "coalgebra", "antipode", "action", "coaction", "rmatrix"}) {
        if (doc.contains(key) && !doc.contains("spaces")) bad(key, "needs a \"spaces\" section");
    }
    if (doc.contains("spaces")) {
        const json& sp = doc.at("spaces");
        if (!sp.is_object()) bad("spaces", "expected an object");
        for (const auto& [name, v] : sp.items()) {
            const std::string where = "spaces." + name;
            const json& dim = member(v, "dim", where);
            if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) bad(where, "dim must be positive");
            const auto n = static_cast<std::size_t>(dim.get<std::uint64_t>());
            if (!v.contains("basis")) {
                sf.spaces.emplace(name, Space(name, n));
                continue;
            }
            const json& basis = v.at("basis");
            if (!basis.is_array() || basis.size() != n) bad(where, "basis must list dim names");
            std::vector<std::string> names;
            for (const auto& b : basis) {
                if (!b.is_string()) bad(where, "basis names must be strings");
                names.push_back(b.get<std::string>());
            }
            sf.spaces.emplace(name, Space(name, std::move(names)));
        }
    }
    auto section = [&](const char* key) -> const json* {
        if (!doc.contains(key)) return nullptr;
        if (!doc.at(key).is_object()) bad(key, "expected an object");
        return &doc.at(key);
    };
    if (const json* alg = section("algebra")) {
        for (const auto& [name, v] : alg->items()) {
            const std::string where = std::string("algebra.") + name;
            const Space& s = detail::space_ref(sf, name, where);
            const std::size_t n = s.dim();
            const SpaceSig v1{s};
            LinMap m(sf.field, v1 * v1, v1), u(sf.field, SpaceSig{}, v1);
            detail::read_entries(m, member(v, "mult", where), {n, n, n},
                                 [&](const auto& i) { return std::pair{i[2], i[0] * n + i[1]}; }, where + ".mult");
            detail::read_entries(u, member(v, "unit", where), {n},
                                 [&](const auto& i) { return std::pair{i[0], std::size_t{0}}; }, where + ".unit");
            sf.mult.insert_or_assign(name, std::move(m));
            sf.unit.insert_or_assign(name, std::move(u));
        }
    }
    if (const json* co = section("coalgebra")) {
        for (const auto& [name, v] : co->items()) {
            const std::string where = std::string("coalgebra.") + name;
            const Space& s = detail::space_ref(sf, name, where);
            const std::size_t n = s.dim();
            const SpaceSig v1{s};
            LinMap d(sf.field, v1, v1 * v1), e(sf.field, v1, SpaceSig{});
            detail::read_entries(d, member(v, "comult", where), {n, n, n},
                                 [&](const auto& i) { return std::pair{i[1] * n + i[2], i[0]}; }, where + ".comult");
            detail::read_entries(e, member(v, "counit", where), {n},
                                 [&](const auto& i) { return std::pair{std::size_t{0}, i[0]}; }, where + ".counit");
            sf.comult.insert_or_assign(name, std::move(d));
            sf.counit.insert_or_assign(name, std::move(e));
        }
    }
    if (const json* an = section("antipode")) {
        for (const auto& [name, v] : an->items()) {
            const std::string where = std::string("antipode.") + name;
            const Space& s = detail::space_ref(sf, name, where);
            const std::size_t n = s.dim();
            LinMap m(sf.field, SpaceSig{s}, SpaceSig{s});
            detail::read_entries(m, v, {n, n}, [&](const auto& i) { return std::pair{i[1], i[0]}; }, where);
            sf.antipode.insert_or_assign(name, std::move(m));
        }
    }
    if (const json* a = section("action")) sf.action = detail::read_action(sf, *a, "action", false);
    if (const json* c = section("coaction")) sf.coaction = detail::read_action(sf, *c, "coaction", true);
    if (const json* r = section("rmatrix")) {
        const Space& h = detail::space_ref(sf, member(*r, "h", "rmatrix"), "rmatrix.h");
        const std::size_t n = h.dim();
        LinMap tmp(sf.field, SpaceSig{}, SpaceSig{h} * SpaceSig{h});
        detail::read_entries(tmp, member(*r, "entries", "rmatrix"), {n, n},
                             [&](const auto& i) { return std::pair{i[0] * n + i[1], std::size_t{0}}; },
                             "rmatrix.entries");
        sf.rmatrix = StructureFile::RSection{h.name, tmp.column(0)};
    }
    if (doc.contains("equations")) {
        const json& eqs = doc.at("equations");
        if (!eqs.is_array()) bad("equations", "expected an array");
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            const std::string where = "equations[" + std::to_string(k) + "]";
            tangle::EquationText t;
            for (auto [key, dst] : {std::pair{"label", &t.label}, {"lhs", &t.lhs}, {"rhs", &t.rhs}}) {
                const json& v = member(eqs[k], key, where);
                if (!v.is_string()) bad(where, std::string(key) + " must be a string");
                *dst = v.get<std::string>();
            }
            sf.equations.push_back(std::move(t));
        }
    }
    return sf;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline StructureFile load_structure(const std::string& path, std::optional<FieldSpec> cli_field = std::nullopt) {
    return parse_structure(read_json_file(path), cli_field);
}

// ---------------------------------------------------------------- interpretation

namespace detail {

inline bool has_algebra(const StructureFile& sf, const std::string& s) { return sf.mult.count(s) != 0; }
inline bool has_coalgebra(const StructureFile& sf, const std::string& s) { return sf.comult.count(s) != 0; }

inline BialgebraData bialgebra(const StructureFile& sf, const std::string& s, const char* role) {
    if (!has_algebra(sf, s) || !has_coalgebra(sf, s)) {
        bad(role, "space " + s + " needs both algebra and coalgebra sections");
    }
    const SpaceSig v{sf.spaces.at(s)};
    try {
        return {AlgebraData(sf.field, v, sf.mult.at(s), sf.unit.at(s)),
                CoalgebraData(sf.field, v, sf.comult.at(s), sf.counit.at(s))};
    } catch (const SignatureMismatch& e) {
        bad(role, e.what());
    }
}

inline std::optional<LinMap> antipode_of(const StructureFile& sf, const std::string& s) {
    auto it = sf.antipode.find(s);
    if (it == sf.antipode.end()) return std::nullopt;
    return it->second;
}

inline RMatrix rmatrix_of(const StructureFile& sf) {
    try {
        return {bialgebra(sf, sf.rmatrix->h, "rmatrix"), sf.rmatrix->element};
    } catch (const InvalidParameter& e) {
        bad("rmatrix", e.what());
    }
}

}  // namespace detail

/**
 * Interprets the file as the largest structures it describes: a braided
 * bundle (action + coaction), a bosonization input (action + rmatrix), an
 * R-matrix, or per-space (co)algebras, bialgebras and Hopf algebras.
 */
inline std::vector<Subject> interpret(const StructureFile& sf) {
    using detail::bad;
    std::vector<Subject> out;
    std::set<std::string> used;
    if (sf.action || sf.coaction) {
        if (!sf.action) bad("coaction", "a coaction needs an action section (or use rmatrix)");
        const auto& a = *sf.action;
        if (a.h == a.b) bad("action", "h and b must be different spaces");
        BialgebraData b = detail::bialgebra(sf, a.b, "action.b");
        BialgebraData h = detail::bialgebra(sf, a.h, "action.h");
        used = {a.h, a.b};
        if (sf.coaction) {
            if (sf.coaction->h != a.h || sf.coaction->b != a.b) bad("coaction", "must use the same h and b as action");
            out.emplace_back(catalog::Payload{BraidedHopfData(b, detail::antipode_of(sf, a.b), h,
                                                              detail::antipode_of(sf, a.h), a.map, sf.coaction->map)});
        } else if (sf.rmatrix) {
            if (sf.rmatrix->h != a.h) bad("rmatrix", "must use the action's h");
            out.emplace_back(catalog::Payload{catalog::BosonizeInput{
                ModuleBialgebraData{b, detail::antipode_of(sf, a.b), h, detail::antipode_of(sf, a.h), a.map},
                detail::rmatrix_of(sf)}});
        } else {
            bad("action", "needs a coaction or an rmatrix section");
        }
    } else if (sf.rmatrix) {
        out.emplace_back(catalog::Payload{detail::rmatrix_of(sf)});
        used.insert(sf.rmatrix->h);
    }
    for (const auto& [name, space] : sf.spaces) {
        if (used.count(name)) continue;
        const bool a = detail::has_algebra(sf, name), c = detail::has_coalgebra(sf, name);
        const SpaceSig v{space};
        if (a && c) {
            BialgebraData b = detail::bialgebra(sf, name, "space");
            if (auto s = detail::antipode_of(sf, name)) {
                out.emplace_back(catalog::Payload{HopfData(b, *s)});
            } else {
                out.emplace_back(catalog::Payload{b});
            }
        } else if (a) {
            out.emplace_back(AlgebraData(sf.field, v, sf.mult.at(name), sf.unit.at(name)));
        } else if (c) {
            out.emplace_back(CoalgebraData(sf.field, v, sf.comult.at(name), sf.counit.at(name)));
        } else if (sf.antipode.count(name)) {
            bad("antipode." + name, "antipode without algebra and coalgebra");
        }
    }
    if (out.empty()) bad("document", "no structure to check");
    return out;
}

inline CheckReport check_subject(const Subject& s) {
    if (const auto* a = std::get_if<AlgebraData>(&s)) return check_algebra(*a);
    if (const auto* c = std::get_if<CoalgebraData>(&s)) return check_coalgebra(*c);
    return catalog::check_payload(std::get<catalog::Payload>(s));
}

// ---------------------------------------------------------------- export

class Writer {
public:
    explicit Writer(FieldSpec f) {
        doc_["field"] = f.is_rational() ? json{{"kind", "Q"}} : json{{"kind", "Fp"}, {"p", f.modulus()}};
        doc_["spaces"] = json::object();
    }

    /// Registers a single-factor space (multi-factor signatures are flattened).
    std::string space(const SpaceSig& sig, const std::string& flat_name = {}) {
        const Space s = sig.size() == 1 && flat_name.empty() ? sig.factors().front()
                                                             : sig.flatten(flat_name.empty() ? "V" : flat_name, "⋆");
        json& sp = doc_["spaces"];
        if (sp.contains(s.name)) {
            if (sp[s.name]["basis"] != json(s.basis)) throw InvalidParameter("two different spaces named " + s.name);
        } else {
            sp[s.name] = {{"dim", s.dim()}, {"basis", s.basis}};
        }
        return s.name;
    }

    void algebra(const std::string& name, const LinMap& mult, const LinMap& unit) {
        const std::size_t n = unit.rows();
        doc_["algebra"][name] = {{"mult", entries(mult, [&](std::size_t r, std::size_t c) {
                                      return std::vector<std::size_t>{c / n, c % n, r};
                                  })},
                                 {"unit", entries(unit, [](std::size_t r, std::size_t) {
                                      return std::vector<std::size_t>{r};
                                  })}};
    }

    void coalgebra(const std::string& name, const LinMap& comult, const LinMap& counit) {
        const std::size_t n = counit.cols();
        doc_["coalgebra"][name] = {{"comult", entries(comult, [&](std::size_t r, std::size_t c) {
                                        return std::vector<std::size_t>{c, r / n, r % n};
                                    })},
                                   {"counit", entries(counit, [](std::size_t, std::size_t c) {
                                        return std::vector<std::size_t>{c};
                                    })}};
    }

    void antipode(const std::string& name, const LinMap& s) {
        doc_["antipode"][name] =
            entries(s, [](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r}; });
    }

    void bialgebra(const BialgebraData& b, const std::optional<LinMap>& s, const std::string& flat_name = {}) {
        const std::string name = space(b.space(), flat_name);
        algebra(name, b.mult(), b.unit());
        coalgebra(name, b.comult(), b.counit());
        if (s) antipode(name, *s);
    }

    void action(const std::string& h, const std::string& b, const LinMap& a) {
        const std::size_t nb = a.rows();
        doc_["action"] = {{"h", h}, {"b", b}, {"entries", entries(a, [&](std::size_t r, std::size_t c) {
                               return std::vector<std::size_t>{c / nb, c % nb, r};
                           })}};
    }

    void coaction(const std::string& h, const std::string& b, const LinMap& rho) {
        const std::size_t nb = rho.cols();
        doc_["coaction"] = {{"h", h}, {"b", b}, {"entries", entries(rho, [&](std::size_t r, std::size_t c) {
                                 return std::vector<std::size_t>{c, r / nb, r % nb};
                             })}};
    }

    void rmatrix(const std::string& h, const RMatrix& r) {
        const std::size_t n = r.h().space().dim();
        doc_["rmatrix"] = {{"h", h}, {"entries", entries(r.element_as_map(), [&](std::size_t row, std::size_t) {
                                 return std::vector<std::size_t>{row / n, row % n};
                             })}};
    }

    void equations(const std::vector<tangle::EquationText>& eqs) {
        json arr = json::array();
        for (const auto& e : eqs) arr.push_back({{"label", e.label}, {"lhs", e.lhs}, {"rhs", e.rhs}});
        doc_["equations"] = std::move(arr);
    }

    [[nodiscard]] const json& doc() const noexcept { return doc_; }

private:
    json doc_;

    /// Nonzero entries, input indices first, in column-major order.
    template <class Index>
    static json entries(const LinMap& m, Index index) {
        json arr = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r) {
                const Scalar& v = m.at(r, c);
                if (v.is_zero()) continue;
                json row = json::array();
                for (auto i : index(r, c)) row.push_back(i);
                row.push_back(v.to_string());
                arr.push_back(std::move(row));
            }
        return arr;
    }
};

namespace detail {
inline void write_bundle_parts(Writer& w, const BialgebraData& b, const std::optional<LinMap>& sb,
                               const BialgebraData& h, const std::optional<LinMap>& sh) {
    w.bialgebra(h, sh);
    w.bialgebra(b, sb);
}
}  // namespace detail

inline json export_payload(const catalog::Payload& p) {
    struct Visitor {
        json operator()(const BialgebraData& b) const {
            Writer w(b.field());
            w.bialgebra(b, std::nullopt);
            return w.doc();
        }
        json operator()(const HopfData& h) const {
            Writer w(h.field());
            w.bialgebra(h.bialgebra, h.antipode);
            return w.doc();
        }
        json operator()(const BraidedHopfData& d) const {
            Writer w(d.field());
            detail::write_bundle_parts(w, d.b, d.b_antipode, d.h, d.h_antipode);
            const std::string h = subject_name(d.h.space()), b = subject_name(d.b.space());
            w.action(h, b, d.alpha());
            w.coaction(h, b, d.rho());
            return w.doc();
        }
        json operator()(const RMatrix& r) const {
            Writer w(r.h().field());
            w.bialgebra(r.h(), std::nullopt);
            w.rmatrix(subject_name(r.h().space()), r);
            return w.doc();
        }
        json operator()(const catalog::BosonizeInput& in) const {
            const auto& m = in.module;
            Writer w(m.b.field());
            detail::write_bundle_parts(w, m.b, m.b_antipode, m.h, m.h_antipode);
            const std::string h = subject_name(m.h.space()), b = subject_name(m.b.space());
            w.action(h, b, m.action);
            w.rmatrix(h, in.r);
            return w.doc();
        }
    };
    return std::visit(Visitor{}, p);
}

/// The biproduct as one flattened space named B⋆H (e.g.) with basis labels "x⋆g".
inline json export_biproduct(const BiproductData& bp) {
    Writer w(bp.bialgebra.field());
    w.bialgebra(bp.bialgebra, bp.antipode, subject_name(bp.bialgebra.space()));
    return w.doc();
}

// ---------------------------------------------------------------- reports

inline json report_json(const CheckReport& rep) {
    json results = json::array();
    for (const auto& r : rep.results) {
        json e{{"axiom_id", std::string(axiom_name(r.id))},
               {"subject", r.subject},
               {"status", r.pass ? "pass" : "fail"}};
        if (!r.label.empty()) e["label"] = r.label;
        if (r.witness) {
            e["witness"] = {{"indices", r.witness->indices},
                            {"basis_names", r.witness->basis_names},
                            {"lhs_entry", r.witness->lhs_entry},
                            {"rhs_entry", r.witness->rhs_entry}};
        }
        results.push_back(std::move(e));
    }
    json out{{"results", std::move(results)}};
    if (rep.hopf_ready) out["hopf_ready"] = *rep.hopf_ready;
    out["ok"] = rep.ok();
    return out;
}

}  // namespace biprod::io
