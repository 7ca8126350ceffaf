#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biprod/cli.hpp"

using namespace biprod;
using io::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "biprod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "biprod_cli_" + name; }

std::string write(const std::string& name, const json& doc) {
    const std::string p = tmp(name);
    std::ofstream(p) << doc.dump(2);
    return p;
}

std::string exported(const std::string& entry, const std::string& file) {
    const Outcome r = run({"export", entry});
    EXPECT_EQ(r.code, 0) << r.err;
    const std::string p = tmp(file);
    std::ofstream(p) << r.out;
    return p;
}

}  // namespace

TEST(Cli, CheckPassingAndFailing) {
    EXPECT_EQ(run({"check", exported("superline", "sl.json")}).code, 0);
    EXPECT_EQ(run({"check", exported("sweedler", "sw.json")}).code, 0);
    const Outcome bad = run({"check", exported("kz2-eps-zero", "eps.json"), "--report", "json", "--witness"});
    EXPECT_EQ(bad.code, 1);
    const json rep = json::parse(bad.out);
    EXPECT_FALSE(rep["ok"].get<bool>());
}

TEST(Cli, EveryCatalogEntryExitCode) {
    for (const auto& e : catalog::all_entries()) {
        if (std::holds_alternative<catalog::BosonizeInput>(e.payload)) continue;
        const Outcome r = run({"check", exported(e.name, "entry.json")});
        EXPECT_EQ(r.code, e.expected_family.empty() ? 0 : 1) << e.name;
    }
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({"check", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check", exported("superline", "sl.json"), "--report", "xml"}).code, 2);

    json doc = json::parse(run({"export", "kZ2"}).out);
    doc["algebra"]["kZ2"]["unit"][0][1] = "1/0";
    const Outcome zero = run({"check", write("div0.json", doc)});
    EXPECT_EQ(zero.code, 2);
    EXPECT_NE(zero.err.find("error:"), std::string::npos);
    EXPECT_EQ(run({"export", "no-such-entry"}).code, 2);
}

TEST(Cli, FieldFlag) {
    json doc = json::parse(run({"export", "sweedler"}).out);
    const std::string with_field = write("with_field.json", doc);
    EXPECT_EQ(run({"check", with_field, "--field", "F5"}).code, 2);
    doc.erase("field");
    const std::string bare = write("bare.json", doc);
    EXPECT_EQ(run({"check", bare}).code, 0);
    EXPECT_EQ(run({"check", bare, "--field", "F5"}).code, 0);
    EXPECT_EQ(run({"check", bare, "--field", "F6"}).code, 2);
    EXPECT_EQ(run({"check", bare, "--field", "R"}).code, 2);
    const json f3 = json::parse(run({"export", "superline", "--field", "F3"}).out);
    EXPECT_EQ(f3["field"]["p"], 3);
}

TEST(Cli, RMatrixQuasitriangularity) {
    EXPECT_EQ(run({"check", exported("z2-rmatrix", "r.json")}).code, 0);
    const Outcome bad = run({"check", exported("rmatrix-one-g", "r1g.json"), "--witness"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("QT_"), std::string::npos);
}

TEST(Cli, BiproductWritesCheckableOutput) {
    const std::string out = tmp("bp.json");
    const Outcome r = run({"biproduct", exported("superline", "sl.json"), "-o", out, "--verify"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"check", out}).code, 0);
    const json doc = io::read_json_file(out);
    EXPECT_EQ(doc["spaces"].begin().value()["dim"], 4);
}

TEST(Cli, BiproductGateAndForce) {
    const std::string bad = exported("coaction-trivial", "stc.json");
    const Outcome gated = run({"biproduct", bad});
    EXPECT_EQ(gated.code, 1);
    EXPECT_NE(gated.err.find("--force"), std::string::npos);
    const Outcome forced = run({"biproduct", bad, "--force", "--verify", "-o", tmp("forced.json")});
    EXPECT_EQ(forced.code, 1);
    EXPECT_EQ(run({"biproduct", exported("kZ2", "kz2.json")}).code, 2);
    EXPECT_EQ(run({"biproduct", exported("superline-bosonize", "bos.json")}).code, 2);
}

TEST(Cli, BosonizeMatchesBiproduct) {
    const std::string coact = tmp("coact.json"), a = tmp("bos_out.json"), b = tmp("bp_out.json");
    const Outcome r = run({"bosonize", exported("superline-bosonize", "bos.json"), "-o", a, "--emit-coaction", coact,
                       "--verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(run({"biproduct", coact, "-o", b}).code, 0);
    EXPECT_EQ(io::read_json_file(a), io::read_json_file(b));
    EXPECT_EQ(run({"bosonize", exported("superline", "sl.json")}).code, 2);
}

TEST(Cli, BosonizeRejectsNonQuasitriangular) {
    json doc = json::parse(run({"export", "superline-bosonize"}).out);
    const json bad_r = json::parse(run({"export", "rmatrix-one-g"}).out);
    doc["rmatrix"] = bad_r["rmatrix"];
    const Outcome r = run({"bosonize", write("bad_r.json", doc)});
    EXPECT_EQ(r.code, 1) << r.err;
}

TEST(Cli, TangleCommands) {
    const Outcome ev = run({"tangle", "eval", "act"});
    ASSERT_EQ(ev.code, 0) << ev.err;
    EXPECT_EQ(ev.out.substr(0, ev.out.find('\n')), "[H,B] -> [B]");
    EXPECT_EQ(run({"tangle", "eq", "m_H ; cm_H", "(cm_H * cm_H) ; (id[H] * swap[H,H] * id[H]) ; (m_H * m_H)"}).code,
              0);
    EXPECT_EQ(run({"tangle", "eq", "m_H", "swap[H,H] ; m_H"}).code, 0);
    EXPECT_EQ(run({"tangle", "eq", "act", "(id[H] * id[B]) ; act ; S_B"}).code, 1);
    EXPECT_EQ(run({"tangle", "eq", "m_H", "cm_H"}).code, 2);
    EXPECT_EQ(run({"tangle", "eval", "m_H ;"}).code, 2);
    EXPECT_EQ(run({"tangle", "eval", "nope"}).code, 2);
    EXPECT_EQ(run({"tangle", "corpus"}).code, 0);
    EXPECT_EQ(run({"tangle", "corpus", "--catalog", "trivial-kz3-over-kz2"}).code, 0);
    EXPECT_EQ(run({"tangle", "corpus", "--catalog", "kZ2"}).code, 2);
    EXPECT_EQ(run({"tangle", "corpus", "--catalog", "superline-bosonize"}).code, 0);
}

TEST(Cli, TangleCorpusFileAndEnv) {
    const std::string dump = tmp("corpus.json");
    ASSERT_EQ(run({"tangle", "corpus", "--dump", "-o", dump}).code, 0);
    json doc = io::read_json_file(dump);
    EXPECT_GE(doc["equations"].size(), 13U);
    EXPECT_EQ(run({"tangle", "corpus", "--file", dump, "--env", exported("superline", "sl.json")}).code, 0);
    doc["equations"][0]["rhs"] = "(id[H] * m_B) ; act ; S_B";
    EXPECT_EQ(run({"tangle", "corpus", "--file", write("bad_corpus.json", doc)}).code, 1);
    const std::string expr = tmp("expr.txt");
    std::ofstream(expr) << "cm_H ;\n (cu_H * id[H])";
    EXPECT_EQ(run({"tangle", "eq", expr, "id[H]"}).code, 0);
}

TEST(Cli, ListAndHelp) {
    const Outcome l = run({"list"});
    EXPECT_EQ(l.code, 0);
    EXPECT_NE(l.out.find("superline"), std::string::npos);
    EXPECT_NE(l.out.find("[fails QT]"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Executable) {
    const std::string sl = exported("superline", "exe_sl.json"), bad = exported("kz2-eps-zero", "exe_bad.json");
    const std::string exe = BIPROD_EXE;
    auto status = [](const std::string& cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status(exe + " check " + sl), 0);
    EXPECT_EQ(status(exe + " check " + bad), 1);
    EXPECT_EQ(status(exe + " check /nonexistent.json"), 2);
}
