#pragma once

/**
 * @file linmap.hpp
 * @brief Named tensor spaces and exact dense linear maps between them.
 *
 * Index convention (global): a basis vector of V₁⊗…⊗Vₖ sits at the flat
 * index obtained row-major over the factor order, so v_i⊗w_j in V⊗W is at
 * i·dim(W)+j. Structure constants, Kronecker products and flips all use it.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprod/errors.hpp"
#include "biprod/exactla/scalar.hpp"

namespace biprod {

/// A named finite-dimensional space with named basis vectors.
struct Space {
    std::string name;
    std::vector<std::string> basis;

    Space() = default;
    Space(std::string n, std::vector<std::string> b) : name(std::move(n)), basis(std::move(b)) {
        if (basis.empty()) throw InvalidParameter("space " + name + " must have positive dimension");
    }
    /// Basis names default to e0, e1, ...
    Space(std::string n, std::size_t dim) : name(std::move(n)) {
        if (dim == 0) throw InvalidParameter("space " + name + " must have positive dimension");
        for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }

    /// Spaces match by name and dimension; basis labels are cosmetic.
    friend bool operator==(const Space& a, const Space& b) { return a.name == b.name && a.dim() == b.dim(); }
};

/// Ordered tensor product of spaces; the empty signature is the ground field.
class SpaceSig {
public:
    SpaceSig() = default;
    SpaceSig(std::initializer_list<Space> fs) : factors_(fs) {}
    explicit SpaceSig(std::vector<Space> fs) : factors_(std::move(fs)) {}

    [[nodiscard]] const std::vector<Space>& factors() const noexcept { return factors_; }
    [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }
    [[nodiscard]] bool is_ground() const noexcept { return factors_.empty(); }

    [[nodiscard]] std::size_t dim() const noexcept {
        std::size_t d = 1;
        for (const auto& f : factors_) d *= f.dim();
        return d;
    }

    /// Product of the dims of factors [first, last).
    [[nodiscard]] std::size_t dim(std::size_t first, std::size_t last) const noexcept {
        std::size_t d = 1;
        for (std::size_t i = first; i < last; ++i) d *= factors_[i].dim();
        return d;
    }

    [[nodiscard]] SpaceSig slice(std::size_t first, std::size_t last) const {
        return SpaceSig(std::vector<Space>(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                           factors_.begin() + static_cast<std::ptrdiff_t>(last)));
    }

    /// Per-factor indices of a flat index.
    [[nodiscard]] std::vector<std::size_t> decode(std::size_t flat) const {
        std::vector<std::size_t> idx(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            idx[k] = flat % factors_[k].dim();
            flat /= factors_[k].dim();
        }
        return idx;
    }

    [[nodiscard]] std::size_t encode(const std::vector<std::size_t>& idx) const {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) flat = flat * factors_[k].dim() + idx[k];
        return flat;
    }

    [[nodiscard]] std::vector<std::string> basis_names(std::size_t flat) const {
        std::vector<std::string> names;
        const auto idx = decode(flat);
        for (std::size_t k = 0; k < idx.size(); ++k) names.push_back(factors_[k].basis[idx[k]]);
        return names;
    }

    /// Single space whose basis is the product basis, labels joined by sep.
    [[nodiscard]] Space flatten(std::string name, const std::string& sep) const {
        std::vector<std::string> basis;
        for (std::size_t i = 0; i < dim(); ++i) {
            const auto parts = basis_names(i);
            std::string label = parts.empty() ? std::string("1") : parts.front();
            for (std::size_t k = 1; k < parts.size(); ++k) label += sep + parts[k];
            basis.push_back(std::move(label));
        }
        return {std::move(name), std::move(basis)};
    }

    [[nodiscard]] std::string to_string() const {
        if (factors_.empty()) return "[]";
        std::string s = "[";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ",";
            s += factors_[i].name;
        }
        return s + "]";
    }

    friend SpaceSig operator*(const SpaceSig& a, const SpaceSig& b) {
        std::vector<Space> fs = a.factors_;
        fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
        return SpaceSig(std::move(fs));
    }

    friend bool operator==(const SpaceSig&, const SpaceSig&) = default;

private:
    std::vector<Space> factors_;
};

/// Dense exact matrix from dom to cod; entry (r, c) is row r of cod, column c of dom.
class LinMap {
public:
    LinMap() = default;

    /// Zero map.
    LinMap(FieldSpec field, SpaceSig dom, SpaceSig cod)
        : field_(field), dom_(std::move(dom)), cod_(std::move(cod)),
          entries_(dom_.dim() * cod_.dim(), Scalar::zero(field)) {}

    static LinMap identity(FieldSpec field, const SpaceSig& sig) {
        LinMap m(field, sig, sig);
        for (std::size_t i = 0; i < sig.dim(); ++i) m.set(i, i, Scalar::one(field));
        return m;
    }

    static LinMap identity(FieldSpec field, const Space& s) { return identity(field, SpaceSig{s}); }

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
    [[nodiscard]] const SpaceSig& dom() const noexcept { return dom_; }
    [[nodiscard]] const SpaceSig& cod() const noexcept { return cod_; }
    [[nodiscard]] std::size_t rows() const noexcept { return cod_.dim(); }
    [[nodiscard]] std::size_t cols() const noexcept { return dom_.dim(); }

    [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

    void set(std::size_t r, std::size_t c, Scalar v) {
        if (v.field() != field_) throw FieldMismatch();
        entries_[r * cols() + c] = std::move(v);
    }

    void add_to(std::size_t r, std::size_t c, const Scalar& v) { entries_[r * cols() + c] += v; }

    [[nodiscard]] std::vector<Scalar> column(std::size_t c) const {
        std::vector<Scalar> col;
        col.reserve(rows());
        for (std::size_t r = 0; r < rows(); ++r) col.push_back(at(r, c));
        return col;
    }

    void set_column(std::size_t c, const std::vector<Scalar>& col) {
        for (std::size_t r = 0; r < rows(); ++r) set(r, c, col[r]);
    }

    /// Same entries, relabeled signatures of equal total dimension.
    [[nodiscard]] LinMap relabeled(SpaceSig dom, SpaceSig cod) const {
        if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim()) {
            throw SignatureMismatch("relabel changes dimension: " + dom_.to_string() + "->" + cod_.to_string());
        }
        LinMap m = *this;
        m.dom_ = std::move(dom);
        m.cod_ = std::move(cod);
        return m;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    LinMap& operator+=(const LinMap& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }

    LinMap& operator-=(const LinMap& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }

    LinMap& operator*=(const Scalar& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
    friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
    friend LinMap operator*(LinMap a, const Scalar& s) { return a *= s; }

private:
    void check_same_shape(const LinMap& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (dom_.dim() != o.dom_.dim() || cod_.dim() != o.cod_.dim()) {
            throw SignatureMismatch("shape mismatch in map arithmetic");
        }
    }

    FieldSpec field_{};
    SpaceSig dom_;
    SpaceSig cod_;
    std::vector<Scalar> entries_;
};

/// f∘g. Requires g.cod == f.dom factor for factor.
inline LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    if (!(g.cod() == f.dom())) {
        throw SignatureMismatch("compose: " + g.cod().to_string() + " does not match " + f.dom().to_string());
    }
    LinMap out(f.field(), g.dom(), f.cod());
    for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            const Scalar& gk = g.at(k, c);
            if (gk.is_zero()) continue;
            for (std::size_t r = 0; r < f.rows(); ++r) {
                const Scalar& fk = f.at(r, k);
                if (fk.is_zero()) continue;
                out.add_to(r, c, fk * gk);
            }
        }
    }
    return out;
}

/// Kronecker product f⊗g; signatures concatenate.
inline LinMap tensor(const LinMap& f, const LinMap& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    LinMap out(f.field(), f.dom() * g.dom(), f.cod() * g.cod());
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& a = f.at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k) {
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& b = g.at(k, l);
                    if (b.is_zero()) continue;
                    out.set(i * g.rows() + k, j * g.cols() + l, a * b);
                }
            }
        }
    }
    return out;
}

/// The symmetry a⊗b ↦ b⊗a from A⊗B to B⊗A.
inline LinMap flip(FieldSpec field, const SpaceSig& a, const SpaceSig& b) {
    LinMap out(field, a * b, b * a);
    const std::size_t da = a.dim(), db = b.dim();
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) out.set(j * da + i, i * db + j, Scalar::one(field));
    }
    return out;
}

inline LinMap flip(FieldSpec field, const Space& a, const Space& b) { return flip(field, SpaceSig{a}, SpaceSig{b}); }

/// Wire permutation: output factor k is input factor perm[k].
inline LinMap permutation(FieldSpec field, const SpaceSig& dom, const std::vector<std::size_t>& perm) {
    if (perm.size() != dom.size()) throw SignatureMismatch("permutation length differs from signature length");
    std::vector<Space> out_factors;
    for (auto p : perm) out_factors.push_back(dom.factors().at(p));
    SpaceSig cod(std::move(out_factors));
    LinMap out(field, dom, cod);
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        const auto in = dom.decode(c);
        std::vector<std::size_t> o(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) o[k] = in[perm[k]];
        out.set(cod.encode(o), c, Scalar::one(field));
    }
    return out;
}

/// First differing entry in column-major lexicographic order (input basis first).
inline std::optional<std::pair<std::size_t, std::size_t>> first_difference(const LinMap& f, const LinMap& g) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
        for (std::size_t r = 0; r < f.rows(); ++r) {
            if (!(f.at(r, c) == g.at(r, c))) return std::pair{r, c};
        }
    }
    return std::nullopt;
}

/// Same field, same total dims, every entry exactly equal.
inline bool maps_equal(const LinMap& f, const LinMap& g) {
    if (f.field() != g.field()) return false;
    if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
    return !first_difference(f, g).has_value();
}

}  // namespace biprod
