#pragma once

/**
 * @file eval.hpp
 * @brief Generator environments, wire typechecking, evaluation to LinMap and
 * equation checking.
 *
 * Evaluation flattens the tree into slot operations once, then pushes each
 * input basis vector through them as a sparse vector, so wide composites
 * never materialize Kronecker products with identities.
 */

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/exactla/chain.hpp"
#include "biprod/report.hpp"
#include "biprod/tangle/ast.hpp"
#include "biprod/ydcat.hpp"

namespace biprod::tangle {

using Wires = std::vector<std::string>;

class Env {
public:
    explicit Env(FieldSpec f) : field_(f) {}

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }

    /// Registers an object; its Space is renamed to `name`.
    void add_object(const std::string& name, const Space& s) { objects_.insert_or_assign(name, Space(name, s.basis)); }

    /**
     * Binds a generator. The map is relabeled onto the named objects, which
     * must already exist and match its dimensions.
     */
    void bind(const std::string& name, const LinMap& m, const Wires& src, const Wires& tgt) {
        if (m.field() != field_) throw FieldMismatch();
        generators_.insert_or_assign(name, m.relabeled(sig(src), sig(tgt)));
    }

    /// Makes `alias` resolve to the same map as `name`.
    void alias(const std::string& alias, const std::string& name) { generators_.insert_or_assign(alias, gen(name)); }

    [[nodiscard]] bool has(const std::string& name) const { return generators_.count(name) != 0; }

    [[nodiscard]] const LinMap& gen(const std::string& name) const {
        auto it = generators_.find(name);
        if (it == generators_.end()) throw UnboundGenerator(name);
        return it->second;
    }

    [[nodiscard]] const Space& object(const std::string& name) const {
        auto it = objects_.find(name);
        if (it == objects_.end()) throw UnboundGenerator(name);
        return it->second;
    }

    [[nodiscard]] SpaceSig sig(const Wires& w) const {
        std::vector<Space> f;
        f.reserve(w.size());
        for (const auto& n : w) f.push_back(object(n));
        return SpaceSig(std::move(f));
    }

    [[nodiscard]] std::vector<std::string> generator_names() const {
        std::vector<std::string> out;
        for (const auto& kv : generators_) out.push_back(kv.first);
        return out;
    }

private:
    FieldSpec field_;
    std::map<std::string, Space> objects_;
    std::map<std::string, LinMap> generators_;
};

inline Wires wires_of(const SpaceSig& s) {
    Wires w;
    for (const auto& f : s.factors()) w.push_back(f.name);
    return w;
}

struct Typing {
    Wires source, target;
    friend bool operator==(const Typing&, const Typing&) = default;
};

inline Typing typecheck(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Gen: {
            const LinMap& m = env.gen(e.name);
            return {wires_of(m.dom()), wires_of(m.cod())};
        }
        case Expr::Kind::Id:
            (void)env.object(e.name);
            return {{e.name}, {e.name}};
        case Expr::Kind::Swap:
            (void)env.object(e.name);
            (void)env.object(e.other);
            return {{e.name, e.other}, {e.other, e.name}};
        case Expr::Kind::Tensor: {
            Typing t;
            for (const auto& c : e.children) {
                Typing ct = typecheck(c, env);
                t.source.insert(t.source.end(), ct.source.begin(), ct.source.end());
                t.target.insert(t.target.end(), ct.target.begin(), ct.target.end());
            }
            return t;
        }
        case Expr::Kind::Compose: {
            Typing t = typecheck(e.children.front(), env);
            for (std::size_t k = 1; k < e.children.size(); ++k) {
                Typing ct = typecheck(e.children[k], env);
                if (ct.source != t.target) throw WireMismatch(k, t.target, ct.source);
                t.target = std::move(ct.target);
            }
            return t;
        }
    }
    return {};
}

namespace detail {

/// One primitive map applied at a wire offset.
struct SlotOp {
    LinMap map;
    std::size_t first;
};

/// Flattens e into slot operations in application order.
inline void compile(const Expr& e, const Env& env, std::size_t first, std::vector<SlotOp>& ops) {
    switch (e.kind) {
        case Expr::Kind::Gen: ops.push_back({env.gen(e.name), first}); return;
        case Expr::Kind::Id: return;
        case Expr::Kind::Swap:
            ops.push_back({flip(env.field(), SpaceSig{env.object(e.name)}, SpaceSig{env.object(e.other)}), first});
            return;
        case Expr::Kind::Tensor: {
            std::size_t wire = first;
            for (const auto& c : e.children) {
                compile(c, env, wire, ops);
                wire += typecheck(c, env).target.size();
            }
            return;
        }
        case Expr::Kind::Compose:
            for (const auto& c : e.children) compile(c, env, first, ops);
            return;
    }
}

using biprod::detail::apply_sparse;
using biprod::detail::SparseVec;
using biprod::detail::wire_dims;

inline SparseVec apply_op(const SlotOp& op, const SparseVec& v) { return apply_sparse(op.map, v, op.first); }

}  // namespace detail

inline LinMap eval(const Expr& e, const Env& env) {
    const Typing t = typecheck(e, env);
    const SpaceSig dom = env.sig(t.source), cod = env.sig(t.target);
    std::vector<detail::SlotOp> ops;
    detail::compile(e, env, 0, ops);
    const std::vector<std::size_t> dims = detail::wire_dims(dom);
    LinMap out(env.field(), dom, cod);
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        detail::SparseVec v{dims, {}};
        v.terms.emplace(c, Scalar::one(env.field()));
        for (const auto& op : ops) v = detail::apply_op(op, v);
        for (const auto& [r, x] : v.terms) out.set(r, c, x);
    }
    return out;
}

struct Equation {
    std::string label;
    Expr lhs, rhs;
};

inline Equation equation(std::string label, std::string_view lhs, std::string_view rhs) {
    return {std::move(label), parse(lhs), parse(rhs)};
}

/// Evaluates both sides; a failure carries the first differing entry with decoded basis names.
inline CheckResult check_equation(const Equation& eq, const Env& env) {
    const Typing l = typecheck(eq.lhs, env), r = typecheck(eq.rhs, env);
    if (l != r) {
        throw SignatureMismatch(eq.label + ": sides typed " + WireMismatch::wires(l.source) + "->" +
                                WireMismatch::wires(l.target) + " and " + WireMismatch::wires(r.source) + "->" +
                                WireMismatch::wires(r.target));
    }
    CheckResult res = compare_maps(AxiomId::TANGLE_EQ, "diagram", eval(eq.lhs, env), eval(eq.rhs, env));
    res.label = eq.label;
    return res;
}

/**
 * The standard environment of a bundle: objects B and H, generators
 * m_B m_H cm_B cm_H u_B u_H cu_B cu_H act coact S_B S_H, and, when given,
 * the biproduct's m_BH cm_BH u_BH cu_BH S_BH on wires [B,H].
 * Greek aliases (Δ_H, α, ρ, ...) are bound too.
 */
inline Env standard_env(const BraidedHopfData& d, const BiproductData* bp = nullptr) {
    Env env(d.field());
    env.add_object("B", d.b.space().flatten("B", "⊗"));
    env.add_object("H", d.h.space().flatten("H", "⊗"));
    env.bind("m_B", d.b.mult(), {"B", "B"}, {"B"});
    env.bind("m_H", d.h.mult(), {"H", "H"}, {"H"});
    env.bind("cm_B", d.b.comult(), {"B"}, {"B", "B"});
    env.bind("cm_H", d.h.comult(), {"H"}, {"H", "H"});
    env.bind("u_B", d.b.unit(), {}, {"B"});
    env.bind("u_H", d.h.unit(), {}, {"H"});
    env.bind("cu_B", d.b.counit(), {"B"}, {});
    env.bind("cu_H", d.h.counit(), {"H"}, {});
    env.bind("act", d.alpha(), {"H", "B"}, {"B"});
    env.bind("coact", d.rho(), {"B"}, {"H", "B"});
    if (d.b_antipode) env.bind("S_B", *d.b_antipode, {"B"}, {"B"});
    if (d.h_antipode) env.bind("S_H", *d.h_antipode, {"H"}, {"H"});
    if (bp) {
        env.bind("m_BH", bp->bialgebra.mult(), {"B", "H", "B", "H"}, {"B", "H"});
        env.bind("cm_BH", bp->bialgebra.comult(), {"B", "H"}, {"B", "H", "B", "H"});
        env.bind("u_BH", bp->bialgebra.unit(), {}, {"B", "H"});
        env.bind("cu_BH", bp->bialgebra.counit(), {"B", "H"}, {});
        if (bp->antipode) env.bind("S_BH", *bp->antipode, {"B", "H"}, {"B", "H"});
    }
    const std::pair<const char*, const char*> greek[] = {{"Δ_B", "cm_B"}, {"Δ_H", "cm_H"}, {"η_B", "u_B"},
                                                         {"η_H", "u_H"},  {"ε_B", "cu_B"}, {"ε_H", "cu_H"},
                                                         {"α", "act"},    {"ρ", "coact"}};
    for (const auto& [a, n] : greek) env.alias(a, n);
    return env;
}

}  // namespace biprod::tangle
