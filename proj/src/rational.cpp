#include "cameron/rational.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>

namespace cameron {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::pow(unsigned exponent) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), exponent);
    // gcd(p^e, q^e) == 1 and q^e > 0 already
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

struct FactorialTable {
    std::shared_mutex mutex;
    std::deque<BigInt> values{BigInt(1)};
};

FactorialTable& factorial_table() {
    static FactorialTable table;
    return table;
}

}  // namespace

const BigInt& factorial(unsigned n) {
    auto& table = factorial_table();
    {
        std::shared_lock lock(table.mutex);
        if (n < table.values.size()) return table.values[n];
    }
    std::unique_lock lock(table.mutex);
    // deque::push_back keeps references to existing elements valid
    while (table.values.size() <= n) {
        const auto k = table.values.size();
        table.values.push_back(table.values.back() * static_cast<unsigned long>(k));
    }
    return table.values[n];
}

BigInt binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(std::span<const unsigned> parts) {
    unsigned total = 0;
    for (unsigned t : parts) total += t;
    BigInt r = factorial(total);
    for (unsigned t : parts) {
        if (t > 1) r /= factorial(t);
    }
    return r;
}

Rational rising_factorial(const Rational& x, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
    return r;
}

}  // namespace cameron
