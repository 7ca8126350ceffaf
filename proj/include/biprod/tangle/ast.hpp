#pragma once

/**
 * @file ast.hpp
 * @brief String-diagram syntax trees, the parser and the printer.
 *
 * Grammar:
 *   expr := seq
 *   seq  := par (";" par)*        vertical composition, top first
 *   par  := atom ("*" atom)*      horizontal juxtaposition
 *   atom := IDENT | "id" "[" IDENT "]" | "swap" "[" IDENT "," IDENT "]" | "(" expr ")"
 *
 * IDENT is [A-Za-z_][A-Za-z0-9_]*; bytes >= 0x80 also count as letters so
 * names such as Δ_H or α can be bound.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "biprod/errors.hpp"

namespace biprod::tangle {

struct Expr {
    enum class Kind { Gen, Id, Swap, Tensor, Compose };

    Kind kind = Kind::Gen;
    std::string name;  ///< generator name (Gen) or object (Id, Swap first)
    std::string other;  ///< second object of a Swap
    std::vector<Expr> children;  ///< Tensor left to right, Compose top to bottom

    static Expr gen(std::string n) { return {Kind::Gen, std::move(n), {}, {}}; }
    static Expr id(std::string obj) { return {Kind::Id, std::move(obj), {}, {}}; }
    static Expr swap(std::string a, std::string b) { return {Kind::Swap, std::move(a), std::move(b), {}}; }
    static Expr tensor(std::vector<Expr> c) { return {Kind::Tensor, {}, {}, std::move(c)}; }
    static Expr compose(std::vector<Expr> c) { return {Kind::Compose, {}, {}, std::move(c)}; }

    [[nodiscard]] bool is_atom() const { return kind == Kind::Gen || kind == Kind::Id || kind == Kind::Swap; }

    friend bool operator==(const Expr&, const Expr&) = default;
};

/// Canonical text. Every non-atomic operand is parenthesized, so parse(print(e)) == e.
inline std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Gen: return e.name;
        case Expr::Kind::Id: return "id[" + e.name + "]";
        case Expr::Kind::Swap: return "swap[" + e.name + "," + e.other + "]";
        case Expr::Kind::Tensor:
        case Expr::Kind::Compose: {
            const char* sep = e.kind == Expr::Kind::Tensor ? " * " : " ; ";
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) s += sep;
                const Expr& c = e.children[i];
                s += c.is_atom() ? print(c) : "(" + print(c) + ")";
            }
            return s;
        }
    }
    return {};
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : src_(text) {}

    Expr parse_all() {
        Expr e = seq();
        skip_ws();
        if (pos_ < src_.size()) fail({"';'", "'*'", "end of input"});
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    static bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
    static bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            const auto c = static_cast<unsigned char>(src_[i]);
            if (c == '\n') {
                ++line;
                col = 1;
            } else if ((c & 0xC0U) != 0x80U) {
                ++col;  // count code points, not continuation bytes
            }
        }
        std::string found = "end of input";
        if (pos_ < src_.size()) {
            std::size_t n = 1;
            while (pos_ + n < src_.size() && (static_cast<unsigned char>(src_[pos_ + n]) & 0xC0U) == 0x80U) ++n;
            found = "'" + std::string(src_.substr(pos_, n)) + "'";
        }
        throw SyntaxError(line, col, std::move(expected), found);
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= src_.size() || !ident_start(static_cast<unsigned char>(src_[pos_]))) fail({"identifier"});
        const std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    Expr seq() {
        std::vector<Expr> parts{par()};
        while (accept(';')) parts.push_back(par());
        return parts.size() == 1 ? std::move(parts.front()) : Expr::compose(std::move(parts));
    }

    Expr par() {
        std::vector<Expr> parts{atom()};
        while (accept('*')) parts.push_back(atom());
        return parts.size() == 1 ? std::move(parts.front()) : Expr::tensor(std::move(parts));
    }

    Expr atom() {
        skip_ws();
        if (accept('(')) {
            Expr inner = seq();
            expect(')');
            return inner;
        }
        if (pos_ >= src_.size() || !ident_start(static_cast<unsigned char>(src_[pos_]))) {
            fail({"identifier", "'id['", "'swap['", "'('"});
        }
        std::string name = ident();
        if (name == "id" && accept('[')) {
            std::string obj = ident();
            expect(']');
            return Expr::id(std::move(obj));
        }
        if (name == "swap" && accept('[')) {
            std::string a = ident();
            expect(',');
            std::string b = ident();
            expect(']');
            return Expr::swap(std::move(a), std::move(b));
        }
        return Expr::gen(std::move(name));
    }
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace biprod::tangle
