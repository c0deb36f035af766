#include "cameron/operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cameron {

CoefficientSequence restricted_transform(const CoefficientSequence& x, std::size_t n_max) {
    if (x.first_index() != 1) throw std::invalid_argument("restricted seed must start at x_1");
    if (x.empty()) throw std::invalid_argument("restricted seed needs m >= 1 entries");
    const std::size_t m = x.size();
    const auto xs = x.values();

    std::vector<Rational> z(n_max + 1);
    z[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc;
        const std::size_t top = std::min(n, m);
        for (std::size_t k = 1; k <= top; ++k) {
            if (!xs[k - 1].is_zero()) acc += xs[k - 1] * z[n - k];
        }
        z[n] = std::move(acc);
    }
    return {0, std::move(z)};
}

CoefficientSequence associated_transform(const CoefficientSequence& x, std::size_t n_max) {
    const std::size_t m = x.first_index();
    if (m == 0) throw std::invalid_argument("associated seed must start at x_m with m >= 1");

    std::vector<Rational> z(n_max + 1);
    z[0] = 1;
    for (std::size_t n = m; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t k = 0; k + m <= n; ++k) {
            const Rational xk = x.get_or_zero(m + k);
            if (!xk.is_zero()) acc += xk * z[n - m - k];
        }
        z[n] = std::move(acc);
    }
    return {0, std::move(z)};
}

CoefficientSequence associated_transform_direct(const CoefficientSequence& x, std::size_t n_max) {
    const std::size_t m = x.first_index();
    if (m == 0) throw std::invalid_argument("associated seed must start at x_m with m >= 1");

    std::vector<Rational> z(n_max + 1);
    z[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc = n >= m ? x.get_or_zero(n) : Rational(0);
        for (std::size_t k = 0; n >= 2 * m && k <= n - 2 * m; ++k) {
            const Rational xk = x.get_or_zero(m + k);
            if (!xk.is_zero()) acc += xk * z[n - m - k];
        }
        z[n] = std::move(acc);
    }
    return {0, std::move(z)};
}

CoefficientSequence series_reciprocal(std::span<const Rational> d, std::size_t n_max) {
    if (d.empty() || d[0] != Rational(1)) throw std::invalid_argument("series reciprocal needs d_0 = 1");

    std::vector<Rational> r(n_max + 1);
    r[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc;
        const std::size_t top = std::min(n, d.size() - 1);
        for (std::size_t k = 1; k <= top; ++k) {
            if (!d[k].is_zero()) acc -= d[k] * r[n - k];
        }
        r[n] = std::move(acc);
    }
    return {0, std::move(r)};
}

std::vector<Rational> cameron_denominator(const CoefficientSequence& x, std::size_t n_max) {
    std::vector<Rational> d(n_max + 1);
    d[0] = 1;
    for (std::size_t n = std::max<std::size_t>(x.first_index(), 1); n < x.end_index() && n <= n_max; ++n) {
        d[n] = -x.at(n);
    }
    return d;
}

namespace {

BigInt int_pow(long base, std::size_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), e);
    return r;
}

}  // namespace

Rational geometric_closed_form(const GeometricParams& p, std::size_t n) {
    if (n < p.m) {
        throw std::invalid_argument("closed form needs n >= m (n = " + std::to_string(n) +
                                    ", m = " + std::to_string(p.m) + ")");
    }
    BigInt total = 0;
    for (std::size_t k = 1; k <= n / p.m; ++k) {
        const std::size_t rest = n - k * p.m;
        total += binomial(static_cast<unsigned>(rest + k - 1), static_cast<long>(k - 1)) * int_pow(p.a, rest) *
                 int_pow(p.b, k);
    }
    return Rational(total);
}

Rational ones_closed_form(unsigned m, std::size_t n) { return geometric_closed_form(GeometricParams(1, 1, m), n); }

Rational geometric_initial_window(const GeometricParams& p, std::size_t n) {
    const std::size_t m = p.m;
    if (n < m || n > 4 * m - 1) throw std::out_of_range("initial window covers m <= n <= 4m-1 only");
    BigInt z = int_pow(p.a, n - m) * p.b;
    if (n >= 2 * m) z += BigInt(static_cast<unsigned long>(n - 2 * m + 1)) * int_pow(p.a, n - 2 * m) * int_pow(p.b, 2);
    if (n >= 3 * m) z += binomial(static_cast<unsigned>(n - 3 * m + 2), 2) * int_pow(p.a, n - 3 * m) * int_pow(p.b, 3);
    return Rational(z);
}

std::vector<Rational> arithmetic_initial_values(const ArithmeticParams& p) {
    const Rational a(p.a);
    const Rational b(p.b);
    if (p.m == 1) return {Rational(1), b, a + b * (b + Rational(1))};
    std::vector<Rational> z(p.m + 1);
    z[0] = 1;
    z[p.m] = b;
    return z;
}

namespace {

std::size_t arithmetic_start(const ArithmeticParams& p) { return p.m >= 3 ? p.m + 1 : 3; }

}  // namespace

Rational arithmetic_recurrence_step(const ArithmeticParams& p, std::span<const Rational> history, std::size_t n) {
    const std::size_t start = arithmetic_start(p);
    if (n < start) {
        throw std::invalid_argument("arithmetic recurrence starts at n = " + std::to_string(start));
    }
    if (history.size() < n) throw std::invalid_argument("history must hold z_0..z_{n-1}");

    const Rational a(p.a);
    const Rational b(p.b);
    const auto z = [&](std::size_t i) -> const Rational& { return history[i]; };
    if (p.m >= 3) {
        return Rational(2) * z(n - 1) - z(n - 2) + b * z(n - p.m) + (a - b) * z(n - p.m - 1);
    }
    if (p.m == 2) {
        return Rational(2) * z(n - 1) + (b - Rational(1)) * z(n - 2) + (a - b) * z(n - 3);
    }
    return (b + Rational(2)) * z(n - 1) + (a - b - Rational(1)) * z(n - 2);
}

CoefficientSequence arithmetic_sequence(const ArithmeticParams& p, std::size_t n_max) {
    std::vector<Rational> z = arithmetic_initial_values(p);
    for (std::size_t n = z.size(); n <= n_max; ++n) {
        z.push_back(arithmetic_recurrence_step(p, z, n));
    }
    z.resize(n_max + 1);
    return {0, std::move(z)};
}

}  // namespace cameron
