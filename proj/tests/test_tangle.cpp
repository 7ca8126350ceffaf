#include <gtest/gtest.h>

#include <random>
#include <set>

#include "biprod/catalog.hpp"
#include "biprod/tangle/corpus.hpp"

using namespace biprod;
using namespace biprod::tangle;

namespace {
const FieldSpec Q = FieldSpec::rationals();

struct SuperlineEnv {
    BraidedHopfData d = catalog::superline();
    BiproductData bp = build_biproduct(d);
    Env env = standard_env(d, &bp);
};

const SuperlineEnv& sl() {
    static const SuperlineEnv s;
    return s;
}

// Materializes every node: the reading of the tree that eval must agree with.
LinMap reference(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Gen: return env.gen(e.name);
        case Expr::Kind::Id: return LinMap::identity(env.field(), env.object(e.name));
        case Expr::Kind::Swap: return flip(env.field(), env.object(e.name), env.object(e.other));
        case Expr::Kind::Tensor: {
            LinMap acc = reference(e.children.front(), env);
            for (std::size_t i = 1; i < e.children.size(); ++i) acc = tensor(acc, reference(e.children[i], env));
            return acc;
        }
        case Expr::Kind::Compose: {
            LinMap acc = reference(e.children.front(), env);
            for (std::size_t i = 1; i < e.children.size(); ++i) acc = compose(reference(e.children[i], env), acc);
            return acc;
        }
    }
    return {};
}

// Random well-typed trees over the superline generators.
class TreeGen {
public:
    explicit TreeGen(unsigned seed) : rng_(seed) {}

    Expr layer(const Wires& src, int depth) {
        std::vector<Expr> blocks;
        std::size_t i = 0;
        while (i < src.size()) {
            if (coin(6)) blocks.push_back(Expr::gen(pick({"u_H", "u_B"})));
            const std::string& w = src[i];
            const bool two = i + 1 < src.size() && coin(2);
            Expr b = Expr::id(w);
            if (two) {
                const std::string& v = src[i + 1];
                if (w == "H" && v == "B") b = coin(2) ? Expr::gen("act") : Expr::swap("H", "B");
                else if (w == "H" && v == "H") b = coin(2) ? Expr::gen("m_H") : Expr::swap("H", "H");
                else if (w == "B" && v == "B") b = coin(2) ? Expr::gen("m_B") : Expr::swap("B", "B");
                else b = Expr::swap(w, v);
                i += 2;
            } else {
                if (w == "H") b = Expr::gen(pick({"id", "cm_H", "S_H", "cu_H", "Δ_H"}));
                else b = Expr::gen(pick({"id", "cm_B", "coact", "S_B", "cu_B", "ρ"}));
                if (b.name == "id") b = Expr::id(w);
                i += 1;
            }
            if (depth > 0 && coin(4)) {
                Expr inner = b;
                b = Expr::compose({inner, layer(target(inner), depth - 1)});
            }
            blocks.push_back(std::move(b));
        }
        if (blocks.empty()) return Expr::gen("u_H");
        return blocks.size() == 1 ? blocks.front() : Expr::tensor(std::move(blocks));
    }

    Expr tree(int layers) {
        Wires src;
        const int n = 1 + static_cast<int>(rng_() % 3);
        for (int k = 0; k < n; ++k) src.push_back(coin(2) ? "H" : "B");
        std::vector<Expr> steps{layer(src, 1)};
        for (int k = 1; k < layers; ++k) {
            Wires t = target(steps.back());
            if (t.empty() || t.size() > 4) break;
            steps.push_back(layer(t, 1));
        }
        return steps.size() == 1 ? steps.front() : Expr::compose(std::move(steps));
    }

private:
    std::mt19937 rng_;
    bool coin(unsigned k) { return rng_() % k == 0; }
    std::string pick(std::initializer_list<const char*> xs) { return *(xs.begin() + rng_() % xs.size()); }
    Wires target(const Expr& e) const { return typecheck(e, sl().env).target; }
};
}  // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse("m_H"), Expr::gen("m_H"));
    EXPECT_EQ(parse("(Δ_H * id[B]) ; (id[H] * swap[H,B])"),
              Expr::compose({Expr::tensor({Expr::gen("Δ_H"), Expr::id("B")}),
                             Expr::tensor({Expr::id("H"), Expr::swap("H", "B")})}));
    EXPECT_EQ(parse("  a*b ;\n c "), Expr::compose({Expr::tensor({Expr::gen("a"), Expr::gen("b")}), Expr::gen("c")}));
    EXPECT_EQ(parse("((m_H))"), Expr::gen("m_H"));
    // ; binds looser than *
    EXPECT_EQ(parse("a ; b * c"), Expr::compose({Expr::gen("a"), Expr::tensor({Expr::gen("b"), Expr::gen("c")})}));
    EXPECT_EQ(parse("id"), Expr::gen("id"));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    try {
        parse("m_H ;");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line, 1U);
        EXPECT_EQ(e.column, 6U);
        EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
    }
    try {
        parse("Δ_H *\n  (m_H ; ]");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line, 2U);
        EXPECT_EQ(e.column, 10U);
        EXPECT_NE(std::string(e.what()).find("']'"), std::string::npos);
    }
    for (const char* bad : {"", "(", "a b", "swap[H]", "id[]", "a ;; b", "a * ", "swap[H,B", "1abc"})
        EXPECT_THROW(parse(bad), SyntaxError) << bad;
}

TEST(Typecheck, Examples) {
    const Env& env = sl().env;
    EXPECT_EQ(typecheck(parse("α"), env), (Typing{{"H", "B"}, {"B"}}));
    EXPECT_EQ(typecheck(parse("ρ"), env), (Typing{{"B"}, {"H", "B"}}));
    EXPECT_EQ(typecheck(parse("m_H ; Δ_H"), env), (Typing{{"H", "H"}, {"H", "H"}}));
    EXPECT_EQ(typecheck(parse("u_B * cu_H"), env), (Typing{{"H"}, {"B"}}));
    try {
        typecheck(parse("Δ_H ; m_B"), env);
        FAIL();
    } catch (const WireMismatch& e) {
        EXPECT_EQ(e.step, 1U);
        EXPECT_EQ(e.expected, (Wires{"H", "H"}));
        EXPECT_EQ(e.found, (Wires{"B", "B"}));
    }
    EXPECT_THROW(typecheck(parse("nope"), env), UnboundGenerator);
    EXPECT_THROW(typecheck(parse("id[X]"), env), UnboundGenerator);
}

TEST(Eval, Examples) {
    const Env& env = sl().env;
    EXPECT_TRUE(maps_equal(eval(parse("id[B]"), env), LinMap::identity(Q, env.object("B"))));
    EXPECT_TRUE(maps_equal(eval(parse("Δ_H ; (ε_H * id[H])"), env), LinMap::identity(Q, env.object("H"))));
    EXPECT_TRUE(maps_equal(eval(parse("swap[B,H] ; swap[H,B]"), env), eval(parse("id[B] * id[H]"), env)));
    // swap naturality
    EXPECT_TRUE(maps_equal(eval(parse("(S_H * S_B) ; swap[H,B]"), env), eval(parse("swap[H,B] ; (S_B * S_H)"), env)));
}

TEST(Eval, FunctorialOnRandomTrees) {
    const Env& env = sl().env;
    TreeGen gen(7);
    for (int k = 0; k < 60; ++k) {
        const Expr e = gen.tree(3);
        EXPECT_TRUE(maps_equal(eval(e, env), reference(e, env))) << print(e);
        if (e.kind == Expr::Kind::Compose) {
            const Expr a = e.children[0], b = Expr::compose({e.children.begin() + 1, e.children.end()});
            const Expr rest = e.children.size() == 2 ? e.children[1] : b;
            EXPECT_TRUE(maps_equal(eval(e, env), compose(eval(rest, env), eval(a, env)))) << print(e);
        }
        const Expr t = Expr::tensor({e, Expr::gen("cm_H")});
        EXPECT_TRUE(maps_equal(eval(t, env), tensor(eval(e, env), eval(Expr::gen("cm_H"), env)))) << print(e);
    }
}

TEST(Print, RoundTripRandomTreesAndCorpus) {
    TreeGen gen(11);
    for (int k = 0; k < 100; ++k) {
        const Expr e = gen.tree(4);
        EXPECT_EQ(parse(print(e)), e) << print(e);
    }
    for (const auto& eq : figure_corpus()) {
        EXPECT_EQ(parse(print(eq.lhs)), eq.lhs) << eq.label;
        EXPECT_EQ(parse(print(eq.rhs)), eq.rhs) << eq.label;
    }
    EXPECT_EQ(print(parse("(a * (b * c)) ; d")), "(a * (b * c)) ; d");
}

TEST(Corpus, ShapeAndLabels) {
    const auto eqs = figure_corpus();
    EXPECT_GE(eqs.size(), 13U);
    std::set<std::string> labels;
    for (const auto& eq : eqs) labels.insert(eq.label);
    EXPECT_EQ(labels.size(), eqs.size());
    for (const char* l : {"fig1:coassoc", "fig2:bialgebra", "fig3:antipode-left", "fig3:antipode-right", "composite:m",
                          "composite:cm", "composite:S", "yetter-drinfeld:a=b", "yetter-drinfeld:b=c"})
        EXPECT_TRUE(labels.count(l)) << l;
    const auto fig3 = std::find_if(eqs.begin(), eqs.end(), [](const Equation& e) { return e.label == "fig3:antipode-left"; });
    EXPECT_EQ(fig3->rhs, parse(corpus_text::unit_counit));
    const auto fig1 = std::find_if(eqs.begin(), eqs.end(), [](const Equation& e) { return e.label == "fig1:coassoc"; });
    EXPECT_TRUE(maps_equal(eval(fig1->lhs, sl().env), eval(parse("cm_BH ; (cm_BH * id[B] * id[H])"), sl().env)));
}

TEST(Corpus, HoldsOnEveryPassingCatalogEnv) {
    std::vector<BraidedHopfData> bundles;
    for (const auto& e : catalog::positives()) {
        if (const auto* d = std::get_if<BraidedHopfData>(&e.payload)) bundles.push_back(*d);
        if (const auto* b = std::get_if<catalog::BosonizeInput>(&e.payload))
            bundles.push_back(bosonized_bundle(b->module, b->r));
    }
    bundles.push_back(catalog::trivial_bundle(catalog::sweedler(), catalog::group_algebra(2)));
    ASSERT_GE(bundles.size(), 4U);
    const auto eqs = figure_corpus();
    for (const auto& d : bundles) {
        ASSERT_TRUE(check_theorem_hypotheses(d).ok());
        const BiproductData bp = build_biproduct(d);
        const CheckReport rep = check_corpus(eqs, standard_env(d, &bp));
        EXPECT_TRUE(rep.ok()) << d.b_name() << " over " << d.h_name();
        EXPECT_EQ(rep.results.size(), eqs.size());
    }
}

TEST(Corpus, CompositesMatchConstructors) {
    const Env& env = sl().env;
    const BiproductData& bp = sl().bp;
    const auto rel = [](const LinMap& m, const LinMap& like) { return m.relabeled(like.dom(), like.cod()); };
    const LinMap m = eval(parse(corpus_text::mult), env), cm = eval(parse(corpus_text::comult), env),
                 s = eval(parse(corpus_text::antipode), env);
    EXPECT_TRUE(maps_equal(rel(m, bp.bialgebra.mult()), smash_product(sl().d).mult));
    EXPECT_TRUE(maps_equal(rel(cm, bp.bialgebra.comult()), smash_coproduct(sl().d).comult));
    EXPECT_TRUE(maps_equal(rel(s, *bp.antipode), *bp.antipode));
}

TEST(Corpus, MisWiredYetterDrinfeldFails) {
    const Equation bad = equation("yd-no-swap", "(cm_H * coact) ; (m_H * act)",
                                  figure_corpus_text()[6].rhs);  // the a=b pair's right side
    const CheckResult r = check_equation(bad, sl().env);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.label, "yd-no-swap");
    EXPECT_EQ(r.witness->indices.size(), 4U);
}

TEST(Corpus, BrokenDataFailsPictures) {
    BraidedHopfData d = catalog::superline();
    d.coact.coaction = chain({Layer{d.h.unit(), d.b.id()}});
    const BiproductData bp = build_biproduct(d, true);
    const CheckReport rep = check_corpus(figure_corpus(), standard_env(d, &bp));
    EXPECT_FALSE(rep.ok());
    const auto failed = [&](const std::string& label) {
        return std::any_of(rep.results.begin(), rep.results.end(),
                           [&](const CheckResult& r) { return r.label == label && !r.pass; });
    };
    EXPECT_TRUE(failed("braided-bialgebra"));
    EXPECT_TRUE(failed("fig2:bialgebra"));
    EXPECT_FALSE(failed("composite:m"));
}

TEST(Corpus, SignatureMismatchBetweenSides) {
    EXPECT_THROW(check_equation(equation("bad", "m_H", "m_B"), sl().env), SignatureMismatch);
}

TEST(Env, BindValidatesDimensions) {
    Env env(Q);
    env.add_object("V", Space("V", 2));
    const HopfData h = catalog::group_algebra(3);
    EXPECT_THROW(env.bind("m", h.mult(), {"V", "V"}, {"V"}), SignatureMismatch);
    EXPECT_THROW(env.bind("m", h.mult(), {"W", "W"}, {"W"}), UnboundGenerator);
    EXPECT_THROW(env.bind("m", catalog::group_algebra(2, FieldSpec::prime(3)).mult(), {"V", "V"}, {"V"}),
                 FieldMismatch);
    env.bind("m", catalog::group_algebra(2).mult(), {"V", "V"}, {"V"});
    env.alias("μ", "m");
    EXPECT_TRUE(maps_equal(eval(parse("μ"), env), eval(parse("m"), env)));
}
