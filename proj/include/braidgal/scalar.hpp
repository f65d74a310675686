#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "braidgal/errors.hpp"

namespace braidgal {

/// Coefficient field for a session: the rationals, or a prime field F_p.
/// All arithmetic in the library is exact; there is no floating point
/// anywhere.
class Field {
  public:
    enum class Kind { Rational, Prime };

    static Field rational() { return Field(Kind::Rational, 0); }
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool is_rational() const { return kind_ == Kind::Rational; }

    /// 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field &o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field &o) const { return !(*this == o); }

    std::string describe() const;

  private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact scalar: an arbitrary-precision rational or a residue mod p.
/// Rationals are kept in lowest terms with positive denominator (GMP
/// canonical form); residues are kept in [0, p). Zero has a dedicated
/// field-agnostic representation so that large mostly-zero matrices cost no
/// bignum allocations.
class Scalar {
  public:
    Scalar() : v_(std::monostate{}) {}

    static Scalar rational(mpq_class q);
    static Scalar mod_p(std::uint64_t v, std::uint64_t p) { return Scalar(Fp{v % p, p}); }

    /// The canonical image of n in the given field.
    static Scalar of(const Field &f, long n);
    /// Parse "a/b" or "a" over the rationals, a decimal residue over F_p.
    static Scalar parse(const Field &f, const std::string &text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar &o) const;
    Scalar inverse() const; // throws NotInvertible on 0
    Scalar &operator+=(const Scalar &o);

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// Canonical text form; parse() round-trips it bit-exactly.
    std::string str() const;

  private:
    struct Fp {
        std::uint64_t v;
        std::uint64_t p;
    };
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(Fp f) : v_(f) {}

    bool is_neutral_zero() const { return std::holds_alternative<std::monostate>(v_); }
    bool is_rat() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class &rat() const { return std::get<mpq_class>(v_); }
    const Fp &fp() const { return std::get<Fp>(v_); }
    bool same_field(const Scalar &o) const;

    std::variant<std::monostate, mpq_class, Fp> v_;
};

} // namespace braidgal
