#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cameron/operator.hpp"
#include "oracles.hpp"

using namespace cameron;

namespace {

std::vector<Rational> fib(std::size_t count) {  // F_0, F_1, ...
    std::vector<Rational> f{0, 1};
    while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

}  // namespace

TEST_CASE("restricted transform") {
    const auto z = restricted_transform(CoefficientSequence::seed({1, 1}), 6);
    const std::vector<Rational> expect{1, 1, 2, 3, 5, 8, 13};
    CHECK(std::vector<Rational>(z.values().begin(), z.values().end()) == expect);
    CHECK(restricted_transform(CoefficientSequence::seed({1, 1, 1}), 4).at(4) == Rational(7));

    const Rational c(BigInt(-2), BigInt(3));
    const auto g = restricted_transform(CoefficientSequence::seed({c}), 9);
    for (std::size_t n = 0; n <= 9; ++n) CHECK(g.at(n) == c.pow(static_cast<unsigned>(n)));

    std::vector<Rational> plus_one;
    for (int n = 1; n <= 8; ++n) plus_one.push_back(n + 1);
    const auto a = restricted_transform(CoefficientSequence::seed(plus_one), 8);
    CHECK(a.at(1) == Rational(2));
    CHECK(a.at(2) == Rational(7));
    CHECK(a.at(3) == Rational(24));
    CHECK(a.at(4) == Rational(82));

    CHECK_THROWS_AS(restricted_transform(CoefficientSequence::seed({}), 3), std::invalid_argument);
    CHECK_THROWS_AS(restricted_transform(CoefficientSequence(2, {1}), 3), std::invalid_argument);
}

TEST_CASE("associated transform") {
    const auto f = fib(10);
    const auto z = associated_transform(materialize_seed(OnesRule{}, OperatorMode::associated(2), 7), 7);
    const std::vector<Rational> expect{1, 0, 1, 1, 2, 3, 5, 8};
    CHECK(std::vector<Rational>(z.values().begin(), z.values().end()) == expect);

    const auto p = associated_transform(materialize_seed(OnesRule{}, OperatorMode::associated(1), 12), 12);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(p.at(n) == Rational(1L << (n - 1)));

    const auto zero = associated_transform(CoefficientSequence(3, {0, 0, 0}), 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(zero.at(n).is_zero());

    const auto geo = associated_transform(materialize_seed(GeometricRule{2, 3}, OperatorMode::associated(2), 4), 4);
    CHECK(geo.at(4) == Rational(21));

    const auto far = associated_transform(CoefficientSequence(9, {5}), 4);
    CHECK(far.at(4).is_zero());
}

TEST_CASE("both associated forms and the power-series oracle agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-4, 4);
    for (unsigned m = 1; m <= 5; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> v;
            for (int i = 0; i < 16; ++i) v.emplace_back(d(rng));
            const CoefficientSequence x(m, v);
            const std::size_t n = 16;
            const auto a = associated_transform(x, n);
            const auto b = associated_transform_direct(x, n);
            std::vector<Rational> p(n + 1);
            for (std::size_t i = m; i <= n; ++i) p[i] = x.get_or_zero(i);
            const auto ref = oracle::geometric_sum(p, n);
            for (std::size_t i = 0; i <= n; ++i) {
                CHECK(a.at(i) == ref[i]);
                CHECK(b.at(i) == ref[i]);
            }
            const auto r = restricted_transform(CoefficientSequence(1, {v.begin(), v.begin() + m}), n);
            std::vector<Rational> q(v.begin(), v.begin() + m);
            q.insert(q.begin(), Rational(0));
            const auto rref = oracle::geometric_sum(q, n);
            for (std::size_t i = 0; i <= n; ++i) CHECK(r.at(i) == rref[i]);
        }
    }
}

TEST_CASE("series reciprocal") {
    const std::vector<Rational> d{1, -1, -1};
    const auto r = series_reciprocal(d, 10);
    const auto f = fib(12);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(r.at(n) == f[n + 1]);

    const auto id = series_reciprocal(std::vector<Rational>{1}, 5);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(id.at(n).is_zero());

    std::vector<Rational> e;
    for (unsigned n = 0; n <= 6; ++n) e.emplace_back(BigInt(1), factorial(n + 1));
    const auto b = series_reciprocal(e, 6);
    CHECK(b.at(1) == Rational(BigInt(-1), BigInt(2)));
    CHECK(b.at(2) * Rational(2) == Rational(BigInt(1), BigInt(6)));
    CHECK(b.at(3).is_zero());

    CHECK_THROWS_AS(series_reciprocal(std::vector<Rational>{2, 1}, 3), std::invalid_argument);
}

TEST_CASE("denominator series") {
    const auto r = cameron_denominator(CoefficientSequence::seed({2, 3}), 4);
    CHECK(r == std::vector<Rational>{1, -2, -3, 0, 0});
    const auto a = cameron_denominator(CoefficientSequence(2, {5, 7}), 4);
    CHECK(a == std::vector<Rational>{1, 0, -5, -7, 0});
}

TEST_CASE("geometric closed forms") {
    CHECK(geometric_closed_form(GeometricParams(1, 1, 2), 6) == Rational(5));
    CHECK(geometric_closed_form(GeometricParams(2, 3, 2), 4) == Rational(21));
    CHECK(geometric_closed_form(GeometricParams(5, 7, 3), 3) == Rational(7));
    CHECK_THROWS_AS(geometric_closed_form(GeometricParams(1, 1, 3), 2), std::invalid_argument);
    CHECK(ones_closed_form(1, 5) == Rational(16));
    CHECK(ones_closed_form(2, 7) == Rational(8));
    for (unsigned m = 1; m <= 6; ++m) CHECK(ones_closed_form(m, m) == Rational(1));

    for (long a : {-3L, -1L, 2L}) {
        for (long b : {-2L, 1L, 3L}) {
            for (unsigned m = 1; m <= 4; ++m) {
                const GeometricParams p(a, b, m);
                for (std::size_t n = m; n <= 4 * m - 1; ++n) CHECK(geometric_initial_window(p, n) == geometric_closed_form(p, n));
                CHECK_THROWS_AS(geometric_initial_window(p, 4 * m), std::out_of_range);
            }
        }
    }
}

TEST_CASE("arithmetic recurrences") {
    const ArithmeticParams p(1, 2, 1);
    const auto z = arithmetic_sequence(p, 5);
    CHECK(z.at(1) == Rational(2));
    CHECK(z.at(2) == Rational(7));
    CHECK(z.at(3) == Rational(24));
    CHECK(z.at(4) == Rational(82));

    for (unsigned m = 1; m <= 6; ++m) {
        for (long a : {-3L, 1L, 2L}) {
            for (long b : {-1L, 3L}) {
                const ArithmeticParams q(a, b, m);
                const auto ref = associated_transform(materialize_seed(ArithmeticRule{a, b}, OperatorMode::associated(m), 30), 30);
                const auto got = arithmetic_sequence(q, 30);
                for (std::size_t n = 0; n <= 30; ++n) CHECK(got.at(n) == ref.at(n));
            }
        }
    }
    const auto init = arithmetic_initial_values(ArithmeticParams(1, 2, 4));
    CHECK(init.size() == 5);
    CHECK_THROWS_AS(arithmetic_recurrence_step(ArithmeticParams(1, 2, 4), init, 3), std::invalid_argument);
}
