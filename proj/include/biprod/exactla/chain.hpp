#pragma once

/**
 * @file chain.hpp
 * @brief Composite maps built from layers of juxtaposed primitive maps.
 *
 * A Layer is a horizontal juxtaposition f₁⊗…⊗fₖ kept unmaterialized; a
 * chain of layers read top to bottom is evaluated by pushing each input basis
 * vector through, one block at a time. The result equals the product of the
 * Kronecker products but never builds the (possibly large) intermediate
 * permutation and identity matrices.
 */

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <vector>

#include "biprod/exactla/linmap.hpp"

namespace biprod {

/// A vector in a tensor space.
struct Vec {
    SpaceSig sig;
    std::vector<Scalar> coeffs;

    Vec() = default;
    Vec(FieldSpec field, SpaceSig s) : sig(std::move(s)), coeffs(sig.dim(), Scalar::zero(field)) {}

    static Vec basis(FieldSpec field, const SpaceSig& s, std::size_t i) {
        Vec v(field, s);
        v.coeffs[i] = Scalar::one(field);
        return v;
    }
};

/**
 * Applies f to the factors [first, first + f.dom().size()) of v.
 *
 * Out-of-slot factors pass through unchanged. Zero coefficients of v and
 * zero entries of f are skipped.
 */
inline Vec apply_on_slot(const LinMap& f, const Vec& v, std::size_t first) {
    const std::size_t nf = f.dom().size();
    if (first + nf > v.sig.size() || !(v.sig.slice(first, first + nf) == f.dom())) {
        throw SignatureMismatch("apply: " + f.dom().to_string() + " does not fit at wire " + std::to_string(first) +
                                " of " + v.sig.to_string());
    }
    const std::size_t left = v.sig.dim(0, first);
    const std::size_t right = v.sig.dim(first + nf, v.sig.size());
    const std::size_t din = f.cols(), dout = f.rows();
    SpaceSig out_sig = v.sig.slice(0, first) * f.cod() * v.sig.slice(first + nf, v.sig.size());
    Vec out(f.field(), std::move(out_sig));
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t j = 0; j < din; ++j) {
            for (std::size_t r = 0; r < right; ++r) {
                const Scalar& x = v.coeffs[(l * din + j) * right + r];
                if (x.is_zero()) continue;
                for (std::size_t i = 0; i < dout; ++i) {
                    const Scalar& a = f.at(i, j);
                    if (a.is_zero()) continue;
                    out.coeffs[(l * dout + i) * right + r].add_product(a, x);
                }
            }
        }
    }
    return out;
}

inline Vec apply(const LinMap& f, const Vec& v) { return apply_on_slot(f, v, 0); }

namespace detail {

/// Sparse vector over a tensor space given by its per-wire dimensions.
struct SparseVec {
    std::vector<std::size_t> dims;
    std::map<std::size_t, Scalar> terms;
};

inline std::size_t span(const std::vector<std::size_t>& dims, std::size_t a, std::size_t b) {
    std::size_t n = 1;
    for (std::size_t i = a; i < b; ++i) n *= dims[i];
    return n;
}

/// f on wires [first, first + f.dom().size()); signatures are the caller's problem.
inline SparseVec apply_sparse(const LinMap& f, const SparseVec& v, std::size_t first) {
    const std::size_t nd = f.dom().size();
    const std::size_t right = span(v.dims, first + nd, v.dims.size());
    const std::size_t din = f.cols(), dout = f.rows();
    SparseVec out;
    out.dims.assign(v.dims.begin(), v.dims.begin() + static_cast<std::ptrdiff_t>(first));
    for (const auto& s : f.cod().factors()) out.dims.push_back(s.dim());
    out.dims.insert(out.dims.end(), v.dims.begin() + static_cast<std::ptrdiff_t>(first + nd), v.dims.end());
    for (const auto& [idx, x] : v.terms) {
        const std::size_t r = idx % right, j = (idx / right) % din, l = idx / right / din;
        for (std::size_t i = 0; i < dout; ++i) {
            const Scalar& a = f.at(i, j);
            if (a.is_zero()) continue;
            auto [it, fresh] = out.terms.try_emplace((l * dout + i) * right + r, a * x);
            if (!fresh) it->second.add_product(a, x);
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
    return out;
}

inline std::vector<std::size_t> wire_dims(const SpaceSig& s) {
    std::vector<std::size_t> d;
    for (const auto& f : s.factors()) d.push_back(f.dim());
    return d;
}

}  // namespace detail

/// Horizontal juxtaposition of blocks, left to right.
class Layer {
public:
    Layer(std::initializer_list<LinMap> blocks) : blocks_(blocks) {}
    explicit Layer(std::vector<LinMap> blocks) : blocks_(std::move(blocks)) {}
    Layer(const LinMap& single) : blocks_{single} {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] const std::vector<LinMap>& blocks() const noexcept { return blocks_; }

    [[nodiscard]] SpaceSig dom() const {
        SpaceSig s;
        for (const auto& b : blocks_) s = s * b.dom();
        return s;
    }

    [[nodiscard]] SpaceSig cod() const {
        SpaceSig s;
        for (const auto& b : blocks_) s = s * b.cod();
        return s;
    }

    [[nodiscard]] Vec apply(const Vec& v) const {
        Vec cur = v;
        std::size_t wire = 0;
        for (const auto& b : blocks_) {
            cur = apply_on_slot(b, cur, wire);
            wire += b.cod().size();
        }
        return cur;
    }

private:
    std::vector<LinMap> blocks_;
};

/// Evaluates layers read top to bottom: result = Lₙ∘…∘L₁.
inline LinMap chain(const std::vector<Layer>& top_to_bottom) {
    if (top_to_bottom.empty()) throw SignatureMismatch("chain needs at least one layer");
    const FieldSpec field = top_to_bottom.front().blocks().front().field();
    const SpaceSig dom = top_to_bottom.front().dom();
    SpaceSig expected = dom;
    for (std::size_t k = 0; k < top_to_bottom.size(); ++k) {
        const SpaceSig d = top_to_bottom[k].dom();
        if (!(d == expected)) {
            throw SignatureMismatch("chain step " + std::to_string(k) + ": expected " + expected.to_string() +
                                    ", found " + d.to_string());
        }
        expected = top_to_bottom[k].cod();
    }
    LinMap out(field, dom, expected);
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        detail::SparseVec v{detail::wire_dims(dom), {}};
        v.terms.emplace(c, Scalar::one(field));
        for (const auto& layer : top_to_bottom) {
            std::size_t wire = 0;
            for (const auto& b : layer.blocks()) {
                v = detail::apply_sparse(b, v, wire);
                wire += b.cod().size();
            }
        }
        for (const auto& [r, x] : v.terms) out.set(r, c, x);
    }
    return out;
}

/// x⊗y in the concatenated signature.
inline Vec outer(const Vec& x, const Vec& y) {
    const FieldSpec field = x.coeffs.front().field();
    Vec out(field, x.sig * y.sig);
    const std::size_t ny = y.coeffs.size();
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < ny; ++j) {
            if (!y.coeffs[j].is_zero()) out.coeffs[i * ny + j] = x.coeffs[i] * y.coeffs[j];
        }
    }
    return out;
}

/// Map k → V picking out a vector.
inline LinMap element_map(FieldSpec field, const SpaceSig& sig, const std::vector<Scalar>& coeffs) {
    LinMap m(field, SpaceSig{}, sig);
    for (std::size_t i = 0; i < sig.dim(); ++i) m.set(i, 0, coeffs.at(i));
    return m;
}

inline LinMap element_map(FieldSpec field, const Vec& v) { return element_map(field, v.sig, v.coeffs); }

}  // namespace biprod
