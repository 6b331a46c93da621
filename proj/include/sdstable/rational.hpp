#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sdstable/errors.hpp"

namespace sdstable {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Every comparison made through this type is exact; the
/// library never touches floating point on a correctness path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(long num, long den);

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rational from_string(std::string_view text);

    /// base^exponent as an exact rational; exponent may be negative.
    static Rational power_of(long base, long exponent);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;

    /// Nearest integer; an exact half rounds toward zero.
    Rational round_nearest_ties_toward_zero() const;

    /// Rounds to the nearest multiple of base^(-digits), ties toward zero.
    Rational round_to_scale(long base, long digits) const;

    /// The integer value as a long. Requires is_integer() and long range.
    long to_long() const;

    std::string str() const;      // always "p/q", e.g. "3/1", "-7/8"
    std::string num_str() const;
    std::string den_str() const;

    /// Exact decimal expansion when the denominator divides a power of 10
    /// (e.g. "0.125", "-1.0"); falls back to str() otherwise.
    std::string decimal_str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sdstable
