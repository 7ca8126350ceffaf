#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every biprod module.
 *
 * Checkers never throw for a failed axiom; failures are report content.
 * Exceptions are reserved for malformed input and broken preconditions.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace biprod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands live in different fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct SignatureMismatch : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// A constructor's precondition check failed and no force flag was given.
struct HypothesisFailure : Error {
    std::vector<std::string> failed_axioms;
    HypothesisFailure(std::string what, std::vector<std::string> failed)
        : Error(std::move(what)), failed_axioms(std::move(failed)) {}
};

/// A constructed object failed a post-check its hypotheses guarantee.
struct StructuralInconsistency : Error {
    using Error::Error;
};

/// Structure-file parse or validation error.
struct FormatError : Error {
    using Error::Error;
};

/// Tangle text does not match the grammar.
struct SyntaxError : Error {
    std::size_t line, column;
    std::vector<std::string> expected;
    SyntaxError(std::size_t l, std::size_t c, std::vector<std::string> exp, const std::string& found)
        : Error(format(l, c, exp, found)), line(l), column(c), expected(std::move(exp)) {}

private:
    static std::string format(std::size_t l, std::size_t c, const std::vector<std::string>& exp,
                              const std::string& found) {
        std::string s = "syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? " or " : "") + exp[i];
        return s + ", found " + found;
    }
};

struct UnboundGenerator : Error {
    std::string name;
    explicit UnboundGenerator(std::string n) : Error("unbound generator '" + n + "'"), name(std::move(n)) {}
};

/// Wires at the top of composition step `step` do not match the wires above it.
struct WireMismatch : Error {
    std::size_t step;
    std::vector<std::string> expected, found;
    WireMismatch(std::size_t s, std::vector<std::string> e, std::vector<std::string> f)
        : Error(format(s, e, f)), step(s), expected(std::move(e)), found(std::move(f)) {}

    static std::string wires(const std::vector<std::string>& w) {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i];
        return s + "]";
    }

private:
    static std::string format(std::size_t s, const std::vector<std::string>& e, const std::vector<std::string>& f) {
        return "wire mismatch at step " + std::to_string(s) + ": expected " + wires(e) + ", found " + wires(f);
    }
};

}  // namespace biprod
