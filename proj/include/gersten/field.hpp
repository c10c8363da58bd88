#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gersten {

/* Error kinds: Input = malformed data (CLI exit 2), Math = a precondition of
 * an operation failed on mathematically valid data (CLI exit 1). */
struct Error : std::runtime_error {
    enum class Kind { Input, Math, Internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error input_error(const std::string& m) { return Error(Error::Kind::Input, m); }
inline Error math_error(const std::string& m) { return Error(Error::Kind::Math, m); }
inline Error internal_error(const std::string& m) { return Error(Error::Kind::Internal, m); }

/* Ground field: the rationals (p == 0) or a prime field F_p. */
struct FieldSpec {
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p; }
    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;

    std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
};

bool is_prime_u64(std::uint64_t n);

/* Exact field element. Rationals are reduced fractions with positive
 * denominator (GMP canonical form); F_p values are residues in 0..p-1. */
class Scalar {
public:
    Scalar() : f_(FieldSpec::rationals()), q_(0), r_(0) {}
    static Scalar zero(FieldSpec f) { return from_int(f, 0); }
    static Scalar one(FieldSpec f) { return from_int(f, 1); }
    static Scalar from_int(FieldSpec f, long long n);
    static Scalar from_mpq(FieldSpec f, const mpq_class& v);
    /* Accepts "a", "-a", "a/b" (rationals); integers for F_p (any sign). */
    static Scalar parse(FieldSpec f, const std::string& text);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* Canonical text form; parse(field, str()) round-trips. */
    std::string str() const;

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    FieldSpec f_;
    mpq_class q_;
    std::uint64_t r_;

    void check_same(const Scalar& o) const;
};

/* (-1)^k as a Scalar; in characteristic 2 this is always 1. */
inline Scalar sign_pow(FieldSpec f, long long k) {
    return (k % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

} // namespace gersten
