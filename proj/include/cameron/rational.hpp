#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalar arithmetic and combinatorial primitives.
 *
 * Rational wraps a GMP rational that is canonicalized after every operation:
 * the denominator is positive and coprime to the numerator, zero is 0/1.
 * Nothing in this library ever rounds.
 */

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cameron {

/// Arbitrary precision integer. Also used as the nonnegative "BigNat".
using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit on purpose, integers are rationals
    Rational(const BigInt& value) : q_(value) {}  // NOLINT
    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p", "p/q", "-p/q" (surrounding blanks ignored).
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return q_.get_num(); }
    const BigInt& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return sgn(q_); }

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error when rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational pow(unsigned exponent) const;

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n!, memoized. The table is shared between threads.
const BigInt& factorial(unsigned n);

/// Binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(unsigned n, long k);

/// (t_1 + ... + t_m)! / (t_1! ... t_m!).
BigInt multinomial(std::span<const unsigned> parts);

/// x (x+1) ... (x+n-1); 1 when n == 0.
Rational rising_factorial(const Rational& x, unsigned n);

/// (-1)^n as a small integer.
constexpr int sign_power(unsigned long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace cameron
