#pragma once

// Exact scalar fields: the rationals, prime fields GF(p) with p odd, and
// quadratic extensions K(sqrt d) of either.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "prelie/error.hpp"

namespace prelie {

enum class FieldKind { rational, prime, quadratic };

/// Plain description of a field. A quadratic extension records its base by
/// modulus (0 for the rationals) together with the adjoined non-square d.
struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    std::int64_t p = 0;
    mpq_class d;

    static FieldDescriptor rational();
    static FieldDescriptor prime(std::int64_t p);
    static FieldDescriptor quadratic(const FieldDescriptor& base, const mpq_class& d);

    FieldDescriptor base() const;

    friend bool operator==(const FieldDescriptor& x, const FieldDescriptor& y) {
        return x.kind == y.kind && x.p == y.p && x.d == y.d;
    }
};

/// GF(2) is only legal when a caller asks for it explicitly; everything but
/// the simplicity check assumes characteristic different from two.
enum class Char2 { reject, allow };

class Scalar;

namespace detail {
struct FieldData;
}

/// Lightweight handle to an interned field. Handles compare equal exactly
/// when they describe the same field, and stay valid for the whole process.
class Field {
public:
    Field() = default;

    FieldKind kind() const;
    const FieldDescriptor& descriptor() const;
    std::int64_t characteristic() const;
    bool is_finite() const;
    /// Number of elements; throws InfiniteFieldError over the rationals.
    std::uint64_t order() const;
    /// The base field of a quadratic extension, or the field itself.
    Field base() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(std::int64_t v) const;
    Scalar from_rational(const mpq_class& v) const;
    /// a + b*r where r = sqrt(d); b must be zero outside quadratic extensions.
    Scalar make(const mpq_class& a, const mpq_class& b = 0) const;
    /// The adjoined square root r = sqrt(d) of a quadratic extension.
    Scalar root() const;

    /// Parses a scalar literal: "a/b" over Q, a decimal residue over GF(p),
    /// "a+b*r" over a quadratic extension.
    Scalar parse(std::string_view literal) const;

    /// Element with the given position in the canonical enumeration order.
    Scalar element(std::uint64_t index) const;
    std::uint64_t index_of(const Scalar& s) const;

    /// Short human-readable name, e.g. "Q", "GF(5)", "Q(sqrt(-1))".
    std::string name() const;

    bool is_null() const { return data_ == nullptr; }
    const detail::FieldData* data() const { return data_; }

    friend bool operator==(Field x, Field y) { return x.data_ == y.data_; }

private:
    friend class Scalar;
    friend Field make_field(const FieldDescriptor&, Char2);
    explicit Field(const detail::FieldData* d) : data_(d) {}
    const detail::FieldData* data_ = nullptr;
};

/// Validates the descriptor and returns the interned field. Rejects p = 2
/// (unless allowed), composite p, and quadratic extensions whose d already
/// has a square root in the base (the root is named in the message).
Field make_field(const FieldDescriptor& spec, Char2 char2 = Char2::reject);

/// Shorthand used by the CLI and tests: "q", "qi", "gf5", "gf9",
/// "gf3(sqrt2)", "q(sqrt-1)". "gf2" is accepted only with Char2::allow.
Field parse_field_name(std::string_view name, Char2 char2 = Char2::reject);

/// An exact field element. Canonical representation: reduced fractions with
/// positive denominators, least nonnegative residues, and base-field
/// canonical components, so equality is structural.
class Scalar {
public:
    Scalar() = default;

    Field field() const { return Field(f_); }
    /// Components of a + b*sqrt(d); b is zero outside quadratic extensions.
    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.f_ == y.f_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const;

private:
    friend class Field;
    Scalar(const detail::FieldData* f, mpq_class a, mpq_class b);
    void check_same_field(const Scalar& o) const;

    const detail::FieldData* f_ = nullptr;
    mpq_class a_;
    mpq_class b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square root of a inside its field, if any. When both r and -r exist the
/// canonical one is returned: the smaller residue in GF(p); in an extension
/// the root with nonnegative-canonical first component.
std::optional<Scalar> sqrt_in_field(const Field& field, const Scalar& a);

/// All elements of a finite field in canonical order (length p or p^2).
/// The first p entries of an extension enumerate its prime subfield.
std::vector<Scalar> enumerate_field(const Field& field);

bool is_prime(std::int64_t p);

} // namespace prelie
