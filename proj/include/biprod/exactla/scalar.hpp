#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars over the rationals or a prime field 𝔽ₚ.
 *
 * Rationals are GMP fractions kept in canonical form (reduced, positive
 * denominator). Prime-field residues live in [0, p) with p < 2³¹, so every
 * product of two residues fits in 64 bits.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "biprod/errors.hpp"

namespace biprod {

class FieldSpec {
public:
    enum class Kind : std::uint8_t { Rationals, PrimeField };

    static constexpr std::uint64_t max_prime_bound = std::uint64_t{1} << 31;

    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }

    /// Throws InvalidParameter unless p is a prime below 2³¹.
    static FieldSpec prime(std::uint64_t p) {
        if (p >= max_prime_bound) {
            throw InvalidParameter("prime field modulus must be < 2^31, got " + std::to_string(p));
        }
        if (!is_prime(p)) {
            throw InvalidParameter("prime field modulus is not prime: " + std::to_string(p));
        }
        FieldSpec f;
        f.kind_ = Kind::PrimeField;
        f.p_ = static_cast<std::uint32_t>(p);
        return f;
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
    [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return is_rational() ? 0 : p_; }

    [[nodiscard]] std::string to_string() const {
        return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    static constexpr bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) return false;
        }
        return true;
    }

private:
    Kind kind_ = Kind::Rationals;
    std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

class Scalar {
public:
    /// Zero of ℚ.
    Scalar() = default;

    static Scalar zero(FieldSpec f) { return Scalar(f); }

    static Scalar one(FieldSpec f) { return from_int(f, 1); }

    static Scalar from_int(FieldSpec f, long v) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = v;
        } else {
            const auto p = static_cast<long>(f.modulus());
            long r = v % p;
            if (r < 0) r += p;
            s.r_ = static_cast<std::uint32_t>(r);
        }
        return s;
    }

    static Scalar from_mpz(FieldSpec f, const mpz_class& v) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = v;
        } else {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.modulus());
            s.r_ = static_cast<std::uint32_t>(r.get_ui());
        }
        return s;
    }

    static Scalar fraction(FieldSpec f, const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        return from_mpz(f, num) / from_mpz(f, den);
    }

    /// Parses "n" or "n/d" over ℚ and "n" over 𝔽ₚ (reduced mod p).
    static Scalar parse(FieldSpec f, std::string_view text) {
        auto bad = [&](const char* why) {
            return InvalidParameter("bad coefficient \"" + std::string(text) + "\" over " + f.to_string() + ": " + why);
        };
        const auto slash = text.find('/');
        const std::string_view num_txt = text.substr(0, slash);
        if (!is_integer_literal(num_txt)) throw bad("not an integer");
        if (slash == std::string_view::npos) {
            return from_mpz(f, mpz_class(std::string(strip_plus(num_txt))));
        }
        if (!f.is_rational()) throw bad("fractions are only accepted over Q");
        const std::string_view den_txt = text.substr(slash + 1);
        if (den_txt.empty() || den_txt.front() == '-' || den_txt.front() == '+' || !is_integer_literal(den_txt)) {
            throw bad("denominator must be a positive integer");
        }
        mpz_class den(std::string{den_txt});
        if (den == 0) throw bad("zero denominator");
        return fraction(f, mpz_class(std::string(strip_plus(num_txt))), den);
    }

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }

    [[nodiscard]] bool is_zero() const noexcept {
        return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
    }

    [[nodiscard]] bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    /// Rational value; only meaningful over ℚ.
    [[nodiscard]] const mpq_class& rational() const noexcept { return q_; }
    /// Residue in [0, p); only meaningful over 𝔽ₚ.
    [[nodiscard]] std::uint32_t residue() const noexcept { return r_; }

    Scalar& operator+=(const Scalar& o) {
        same_field(o);
        if (field_.is_rational()) {
            q_ += o.q_;
        } else {
            const std::uint64_t s = std::uint64_t{r_} + o.r_;
            r_ = static_cast<std::uint32_t>(s % field_.modulus());
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        same_field(o);
        if (field_.is_rational()) {
            q_ -= o.q_;
        } else {
            const std::uint64_t p = field_.modulus();
            r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + p - o.r_) % p);
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        same_field(o);
        if (field_.is_rational()) {
            q_ *= o.q_;
        } else {
            r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * o.r_) % field_.modulus());
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        same_field(o);
        if (o.is_zero()) throw DivisionByZero();
        if (field_.is_rational()) {
            q_ /= o.q_;
        } else {
            r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * o.inverse_residue()) % field_.modulus());
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar operator-() const {
        Scalar s(field_);
        return s -= *this;
    }

    [[nodiscard]] Scalar inverse() const { return one(field_) / *this; }

    /// Adds a*b into this without materializing the product.
    void add_product(const Scalar& a, const Scalar& b) {
        if (field_.is_rational() && a.field_.is_rational() && b.field_.is_rational()) {
            thread_local mpq_class tmp;
            mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
            mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
            return;
        }
        *this += a * b;
    }

    /// Exact value equality; scalars of different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_) return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    /// "n", "n/d" over ℚ; canonical residue over 𝔽ₚ.
    [[nodiscard]] std::string to_string() const {
        return field_.is_rational() ? q_.get_str() : std::to_string(r_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    explicit Scalar(FieldSpec f) : field_(f) {}

    void same_field(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    [[nodiscard]] std::uint64_t inverse_residue() const {
        // Fermat: r^(p-2) mod p
        const std::uint64_t p = field_.modulus();
        std::uint64_t base = r_, e = p - 2, acc = 1;
        while (e > 0) {
            if (e & 1U) acc = acc * base % p;
            base = base * base % p;
            e >>= 1U;
        }
        return acc;
    }

    static std::string_view strip_plus(std::string_view s) {
        return (!s.empty() && s.front() == '+') ? s.substr(1) : s;
    }

    static bool is_integer_literal(std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    }

    FieldSpec field_{};
    mpq_class q_{};
    std::uint32_t r_ = 0;
};

}  // namespace biprod
