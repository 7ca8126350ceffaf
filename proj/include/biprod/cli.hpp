#pragma once

/**
 * @file cli.hpp
 * @brief The `biprod` command line, callable in-process for tests.
 *
 * Exit codes: 0 every axiom passed, 1 some axiom failed, 2 the input never
 * reached checking (parse, validation or I/O error).
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biprod/biproduct.hpp"
#include "biprod/catalog.hpp"
#include "biprod/io/structure_file.hpp"
#include "biprod/tangle/corpus.hpp"

namespace biprod::cli {

enum Exit : int { kOk = 0, kAxiomFailed = 1, kInputError = 2 };

struct Options {
    std::string report = "text";
    bool witness = false;
    bool verify = false;
    bool force = false;
    std::string field;
    std::string output;
    std::string emit_coaction;
    std::string env_file;
    std::string catalog_name;
    std::string corpus_file;
    bool dump = false;
    std::vector<std::string> args;
};

namespace detail {

inline std::optional<FieldSpec> parse_field_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "Q") return FieldSpec::rationals();
    if (s.size() > 1 && s[0] == 'F' && s.find_first_not_of("0123456789", 1) == std::string::npos) {
        try {
            return FieldSpec::prime(std::stoull(s.substr(1)));
        } catch (const std::out_of_range&) {
        }
    }
    throw InvalidParameter("--field must be Q or F<prime>, got " + s);
}

inline void emit_report(std::ostream& os, const CheckReport& rep, const Options& o) {
    if (o.report == "json") {
        os << io::report_json(rep).dump(2) << '\n';
    } else {
        write_text(os, rep, o.witness);
    }
}

inline int verdict(const CheckReport& rep) { return rep.ok() ? kOk : kAxiomFailed; }

inline void write_json(const io::json& doc, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw FormatError("cannot write " + path);
    f << doc.dump(2) << '\n';
}

/// Expression text, or the contents of a file when the argument names one.
inline std::string text_or_file(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;
}

inline std::vector<io::Subject> load_subjects(const std::string& path, const Options& o) {
    return io::interpret(io::load_structure(path, parse_field_flag(o.field)));
}

template <class T>
const T* find_payload(const std::vector<io::Subject>& subjects) {
    for (const auto& s : subjects) {
        if (const auto* p = std::get_if<catalog::Payload>(&s)) {
            if (const auto* t = std::get_if<T>(p)) return t;
        }
    }
    return nullptr;
}

/// Hypothesis gate, construction, output and optional verification shared by biproduct and bosonize.
inline int finish_biproduct(const BraidedHopfData& d, CheckReport pre, const Options& o, std::ostream& out,
                            std::ostream& err) {
    std::ostream& rep_out = o.output.empty() ? err : out;
    pre.append(check_theorem_hypotheses(d));
    if (!o.force && !pre.ok()) {
        emit_report(rep_out, pre, o);
        err << "hypotheses failed: ";
        for (const auto& n : pre.failed_names()) err << n << ' ';
        err << "(use --force to build anyway)\n";
        return kAxiomFailed;
    }
    const BiproductData bp = build_biproduct(d, true);
    const io::json doc = io::export_biproduct(bp);
    write_json(doc, o.output, out);
    if (!o.verify) return kOk;
    // re-read what was written, so the check covers the file as well
    const auto back = io::interpret(io::parse_structure(doc));
    CheckReport rep;
    for (const auto& s : back) rep.append(io::check_subject(s));
    emit_report(rep_out, rep, o);
    return verdict(rep);
}

inline BraidedHopfData bundle_from_payload(const catalog::Payload& p, const std::string& what) {
    if (const auto* d = std::get_if<BraidedHopfData>(&p)) return *d;
    if (const auto* b = std::get_if<catalog::BosonizeInput>(&p)) return bosonized_bundle(b->module, b->r, true);
    throw InvalidParameter(what + " does not describe a B and H with action and coaction");
}

inline tangle::Env tangle_env(const Options& o) {
    std::optional<BraidedHopfData> d;
    if (!o.env_file.empty()) {
        if (!o.catalog_name.empty()) throw InvalidParameter("--env and --catalog are exclusive");
        for (const auto& s : load_subjects(o.env_file, o)) {
            if (const auto* p = std::get_if<catalog::Payload>(&s)) {
                if (std::holds_alternative<BraidedHopfData>(*p) ||
                    std::holds_alternative<catalog::BosonizeInput>(*p)) {
                    d = bundle_from_payload(*p, o.env_file);
                    break;
                }
            }
        }
        if (!d) throw InvalidParameter(o.env_file + " does not describe a B and H with action and coaction");
    } else {
        const std::string name = o.catalog_name.empty() ? "superline" : o.catalog_name;
        const auto entry = catalog::find(name, parse_field_flag(o.field).value_or(FieldSpec::rationals()));
        if (!entry) throw InvalidParameter("unknown catalog entry " + name);
        d = bundle_from_payload(entry->payload, name);
    }
    const BiproductData bp = build_biproduct(*d, true);
    return tangle::standard_env(*d, &bp);
}

inline void print_matrix(std::ostream& os, const LinMap& m, const Options& o) {
    if (o.report == "json") {
        io::json rows = io::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            io::json row = io::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
            rows.push_back(std::move(row));
        }
        os << io::json{{"dom", m.dom().to_string()}, {"cod", m.cod().to_string()}, {"rows", rows}}.dump(2) << '\n';
        return;
    }
    os << m.dom().to_string() << " -> " << m.cod().to_string() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c).to_string();
        os << '\n';
    }
}

inline int cmd_check(const Options& o, std::ostream& out) {
    CheckReport rep;
    std::optional<bool> ready;
    for (const auto& s : load_subjects(o.args.at(0), o)) {
        CheckReport r = io::check_subject(s);
        if (r.hopf_ready) ready = ready.value_or(true) && *r.hopf_ready;
        rep.append(r);
    }
    rep.hopf_ready = ready;
    emit_report(out, rep, o);
    return verdict(rep);
}

inline int cmd_biproduct(const Options& o, std::ostream& out, std::ostream& err) {
    const auto subjects = load_subjects(o.args.at(0), o);
    const auto* d = find_payload<BraidedHopfData>(subjects);
    if (!d) {
        throw FormatError(o.args.at(0) + ": needs action and coaction sections" +
                          (find_payload<catalog::BosonizeInput>(subjects) ? " (this file is a bosonize input)" : ""));
    }
    return finish_biproduct(*d, {}, o, out, err);
}

inline int cmd_bosonize(const Options& o, std::ostream& out, std::ostream& err) {
    const auto subjects = load_subjects(o.args.at(0), o);
    const auto* in = find_payload<catalog::BosonizeInput>(subjects);
    if (!in) throw FormatError(o.args.at(0) + ": needs action and rmatrix sections and no coaction");
    std::ostream& rep_out = o.output.empty() ? err : out;
    CheckReport pre = check_quasitriangular(in->r);
    pre.append(check_module(in->module.h, ActionData(in->module.h.space(), in->module.b.space(), in->module.action)));
    if (!o.force && !pre.ok()) {
        emit_report(rep_out, pre, o);
        err << "bosonization hypotheses failed: ";
        for (const auto& n : pre.failed_names()) err << n << ' ';
        err << '\n';
        return kAxiomFailed;
    }
    const BraidedHopfData d = bosonized_bundle(in->module, in->r, true);
    if (!o.emit_coaction.empty()) write_json(io::export_payload(d), o.emit_coaction, out);
    return finish_biproduct(d, pre, o, out, err);
}

inline int cmd_export(const Options& o, std::ostream& out) {
    const FieldSpec f = parse_field_flag(o.field).value_or(FieldSpec::rationals());
    const auto entry = catalog::find(o.args.at(0), f);
    if (!entry) throw InvalidParameter("unknown catalog entry " + o.args.at(0));
    write_json(io::export_payload(entry->payload), o.output, out);
    return kOk;
}

inline int cmd_list(std::ostream& out) {
    for (const auto& e : catalog::all_entries(FieldSpec::rationals())) {
        out << e.name << "  " << e.description;
        if (!e.expected_family.empty()) out << "  [fails " << e.expected_family << "]";
        out << '\n';
    }
    return kOk;
}

inline int cmd_tangle(const std::string& sub, const Options& o, std::ostream& out) {
    if (sub == "corpus" && o.dump) {
        io::json doc{{"equations", io::json::array()}};
        for (const auto& e : tangle::figure_corpus_text()) {
            doc["equations"].push_back({{"label", e.label}, {"lhs", e.lhs}, {"rhs", e.rhs}});
        }
        write_json(doc, o.output, out);
        return kOk;
    }
    const tangle::Env env = tangle_env(o);
    if (sub == "eval") {
        print_matrix(out, tangle::eval(tangle::parse(text_or_file(o.args.at(0))), env), o);
        return kOk;
    }
    CheckReport rep;
    if (sub == "eq") {
        rep.add(tangle::check_equation(
            tangle::equation("eq", text_or_file(o.args.at(0)), text_or_file(o.args.at(1))), env));
    } else {
        std::vector<tangle::EquationText> texts = tangle::figure_corpus_text();
        if (!o.corpus_file.empty()) texts = io::parse_structure(io::read_json_file(o.corpus_file)).equations;
        rep = tangle::check_corpus(tangle::parse_corpus(texts), env);
    }
    emit_report(out, rep, o);
    return verdict(rep);
}

}  // namespace detail

/// Runs the command line; never throws.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smash biproducts, Yetter-Drinfeld hypotheses and string diagrams over Q and F_p", "biprod"};
    app.require_subcommand(1);
    Options o;

    auto add_report = [&](CLI::App* c) {
        c->add_option("--report", o.report, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_flag("--witness", o.witness, "print the first differing entry of each failure");
        c->add_option("--field", o.field, "Q or F<prime>, for files that declare no field");
    };

    auto* check = app.add_subcommand("check", "run the full check cascade on a structure file");
    check->add_option("file", o.args, "structure file")->required()->expected(1);
    add_report(check);

    auto* bip = app.add_subcommand("biproduct", "build B⋆H from a file with action and coaction");
    auto* bos = app.add_subcommand("bosonize", "derive the coaction from an R-matrix, then build B⋆H");
    for (auto* c : {bip, bos}) {
        c->add_option("file", o.args, "structure file")->required()->expected(1);
        c->add_option("-o,--output", o.output, "output structure file (default stdout)");
        c->add_flag("--verify", o.verify, "re-check the written output");
        c->add_flag("--force", o.force, "build even when hypotheses fail");
        add_report(c);
    }
    bos->add_option("--emit-coaction", o.emit_coaction, "write the bundle with the derived coaction");

    auto* tan = app.add_subcommand("tangle", "string-diagram evaluation");
    tan->require_subcommand(1);
    auto* t_eval = tan->add_subcommand("eval", "print the matrix of a diagram");
    t_eval->add_option("expr", o.args, "diagram text or file")->required()->expected(1);
    auto* t_eq = tan->add_subcommand("eq", "decide equality of two diagrams");
    t_eq->add_option("sides", o.args, "lhs and rhs (text or files)")->required()->expected(2);
    auto* t_corpus = tan->add_subcommand("corpus", "check the shipped diagram equations");
    t_corpus->add_option("--file", o.corpus_file, "equations file instead of the shipped corpus");
    t_corpus->add_flag("--dump", o.dump, "write the shipped corpus as a file and exit");
    t_corpus->add_option("-o,--output", o.output, "output for --dump");
    for (auto* c : {t_eval, t_eq, t_corpus}) {
        c->add_option("--env", o.env_file, "structure file with B, H, action and coaction");
        c->add_option("--catalog", o.catalog_name, "catalog entry to use as environment (default superline)");
        add_report(c);
    }

    auto* exp = app.add_subcommand("export", "write a catalog entry as a structure file");
    exp->add_option("name", o.args, "catalog entry")->required()->expected(1);
    exp->add_option("-o,--output", o.output, "output file (default stdout)");
    exp->add_option("--field", o.field, "Q or F<prime>");

    app.add_subcommand("list", "list catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check->parsed()) return detail::cmd_check(o, out);
        if (bip->parsed()) return detail::cmd_biproduct(o, out, err);
        if (bos->parsed()) return detail::cmd_bosonize(o, out, err);
        if (exp->parsed()) return detail::cmd_export(o, out);
        if (app.got_subcommand("list")) return detail::cmd_list(out);
        for (auto* c : {t_eval, t_eq, t_corpus}) {
            if (c->parsed()) return detail::cmd_tangle(c->get_name(), o, out);
        }
    } catch (const HypothesisFailure& e) {
        err << "error: " << e.what() << '\n';
        return kAxiomFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace biprod::cli
