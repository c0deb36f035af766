#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cameron/combinatorics.hpp"
#include "cameron/operator.hpp"
#include "oracles.hpp"

using namespace cameron;

namespace {

Rational brute_cell(const CoefficientSequence& w, PartRange range, std::size_t s, std::size_t k) {
    Rational total;
    oracle::compositions(s, [&](std::size_t p) { return range.contains(p); },
                         [&](const std::vector<std::size_t>& parts) {
                             if (parts.size() != k) return;
                             Rational prod(1);
                             for (auto p : parts) prod *= w.get_or_zero(p);
                             total += prod;
                         });
    return total;
}

CoefficientSequence random_weights(std::mt19937_64& rng, std::size_t first, std::size_t count, long spread, bool fractions) {
    std::uniform_int_distribution<long> d(-spread, spread);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < count; ++i) v.emplace_back(BigInt(d(rng)), BigInt(fractions ? den(rng) : 1));
    return {first, v};
}

}  // namespace

TEST_CASE("composition stream") {
    CHECK(count_compositions(4, {1, 3}) == 7);
    CHECK(count_compositions(4, {4, 4}) == 1);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(count_compositions(n, {1, unbounded}) == (std::size_t{1} << (n - 1)));
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t n = k * m; n <= 14; ++n) {
                CHECK(count_compositions(n, {m, unbounded}, k) ==
                      binomial(static_cast<unsigned>(n - k * m + k - 1), static_cast<long>(k - 1)).get_ui());
            }
        }
    }
    CompositionStream s(4, {1, 3});
    std::vector<std::vector<std::size_t>> seen;
    while (s.next()) seen.emplace_back(s.parts().begin(), s.parts().end());
    CHECK(seen.front() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(seen.back() == std::vector<std::size_t>{3, 1});
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    CompositionStream weak(3, {0, 2}, 3);
    std::size_t count = 0;
    while (weak.next()) ++count;
    CHECK(count == 7);  // tuples of {0,1,2} summing to 3 with three entries
    CHECK_THROWS_AS(CompositionStream(3, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CompositionStream(3, {3, 2}), std::invalid_argument);
}

TEST_CASE("composition table against enumeration") {
    std::mt19937_64 rng(5);
    for (PartRange range : {PartRange{1, 3}, PartRange{2, unbounded}, PartRange{1, unbounded}, PartRange{3, 4}}) {
        const auto w = random_weights(rng, 1, 12, 4, true);
        const auto table = composition_table(w, range, 11, Execution::serial);
        for (std::size_t s = 0; s <= 11; ++s) {
            for (std::size_t k = 0; k <= s; ++k) {
                const Rational expect = s == 0 ? Rational(k == 0 ? 1 : 0) : brute_cell(w, range, s, k);
                CHECK(table.cell(s, k) == expect);
            }
        }
    }
}

TEST_CASE("serial and parallel walks agree, on both integer paths") {
    std::mt19937_64 rng(9);
    // Small entries stay on the 128-bit path; 10^12-sized entries force the GMP fallback.
    for (long spread : {5L, 1000000000000L}) {
        const auto w = random_weights(rng, 1, 18, spread, spread < 10);
        const auto a = composition_table(w, {1, unbounded}, 18, Execution::serial);
        const auto b = composition_table(w, {1, unbounded}, 18, Execution::parallel);
        for (std::size_t s = 0; s <= 18; ++s) {
            CHECK(a.total(s) == b.total(s));
            CHECK(a.alternating(s) == b.alternating(s));
        }
        std::vector<Rational> p(w.values().begin(), w.values().end());
        p.insert(p.begin(), Rational(0));
        const auto ref = oracle::geometric_sum(p, 18);
        for (std::size_t s = 1; s <= 18; ++s) CHECK(a.total(s) == ref[s]);
    }
}

TEST_CASE("composition and Trudi sums") {
    const auto fib = CoefficientSequence::seed({1, 1});
    CHECK(composition_sum_restricted(fib, 2, 6) == Rational(13));
    CHECK(composition_sum_restricted(CoefficientSequence::seed({1, 1, 1}), 3, 4) == Rational(7));
    CHECK(trudi_restricted(fib, 2, 5) == Rational(8));
    CHECK(trudi_restricted(fib, 2, 6) == Rational(13));
    const Rational q(BigInt(3), BigInt(2));
    CHECK(composition_sum_restricted(CoefficientSequence::seed({q}), 1, 7) == q.pow(7));
    CHECK(trudi_restricted(CoefficientSequence::seed({q}), 1, 7) == q.pow(7));

    const auto ones2 = materialize_seed(OnesRule{}, OperatorMode::associated(2), 10);
    CHECK(composition_sum_associated(ones2, 7) == Rational(8));
    CHECK(trudi_associated(ones2, 6) == Rational(5));
    CHECK(composition_sum_associated(ones2, 1).is_zero());
    CHECK(trudi_associated(ones2, 1).is_zero());
    CHECK(trudi_associated(CoefficientSequence(5, {Rational(-4)}), 5) == Rational(-4));
    const auto geo = materialize_seed(GeometricRule{2, 3}, OperatorMode::associated(2), 4);
    CHECK(composition_sum_associated(geo, 4) == Rational(21));

    const auto arith = materialize_seed(ArithmeticRule{1, 1}, OperatorMode::associated(3), 7);
    CHECK(trudi_associated(arith, 7) == associated_transform(arith, 7).at(7));
}

TEST_CASE("exponent vectors") {
    std::size_t count = 0;
    for_each_exponent_vector(6, {1, unbounded}, [&](std::span<const unsigned> t) {
        CHECK(t.size() == 7);
        std::size_t weight = 0;
        for (std::size_t j = 0; j < t.size(); ++j) weight += j * t[j];
        CHECK(weight == 6);
        ++count;
    });
    CHECK(count == 11);  // partitions of 6
    count = 0;
    for_each_exponent_vector(6, {2, 3}, [&](std::span<const unsigned>) { ++count; });
    CHECK(count == 2);  // 2+2+2, 3+3
}

TEST_CASE("inversion sums") {
    const auto trib = restricted_transform(CoefficientSequence::seed({1, 1, 1}), 8);
    const std::vector<Rational> expect{1, 1, 1, 0, 0, 0, 0, 0};
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(inversion_sum(trib, n) == expect[n - 1]);
        CHECK(inversion_sum_multinomial(trib, n) == expect[n - 1]);
    }
    const Rational q(-3);
    const auto geo = restricted_transform(CoefficientSequence::seed({q}), 6);
    CHECK(inversion_sum(geo, 1) == q);
    for (std::size_t n = 2; n <= 6; ++n) CHECK(inversion_sum(geo, n).is_zero());

    const auto col = inversion_column(trib, 8, Execution::parallel);
    CHECK(col == expect);
}

TEST_CASE("weak compositions against tuple enumeration") {
    std::mt19937_64 rng(21);
    const auto w = random_weights(rng, 1, 9, 3, true);
    for (PartRange positive : {PartRange{1, unbounded}, PartRange{2, 4}}) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto weak = weak_composition_sums(w, n, positive);
            for (std::size_t k = 1; k <= n; ++k) {
                Rational expect;
                oracle::tuples(n, k, [&](std::size_t p) { return p == 0 || positive.contains(p); },
                               [&](const std::vector<std::size_t>& parts) {
                                   Rational prod(1);
                                   for (auto p : parts) prod *= p == 0 ? Rational(1) : w.get_or_zero(p);
                                   expect += prod;
                               });
                CHECK(weak[k] == expect);
            }
        }
    }
}

TEST_CASE("binomial expansion of a reciprocal") {
    std::vector<Rational> neg_one{1, -1};
    neg_one.resize(10);
    for (std::size_t n = 1; n <= 9; ++n) CHECK(binomial_expansion_sum(CoefficientSequence(0, neg_one), n) == Rational(1));

    std::vector<Rational> e;
    for (unsigned n = 0; n <= 10; ++n) e.emplace_back(BigInt(1), factorial(n + 1));
    const CoefficientSequence ex(0, e);
    CHECK(binomial_expansion_sum(ex, 1) == Rational(BigInt(-1), BigInt(2)));
    const auto r = series_reciprocal(e, 10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(binomial_expansion_sum(ex, n) == r.at(n));

    const CoefficientSequence x(0, {1, 5});
    CHECK(binomial_expansion_sum(x, 1) == Rational(-5));
}

TEST_CASE("composition column for both modes") {
    std::mt19937_64 rng(4);
    for (unsigned m = 1; m <= 4; ++m) {
        const auto r = random_weights(rng, 1, m, 5, false);
        const auto zr = restricted_transform(r, 16);
        const auto colr = composition_column(r, OperatorMode::restricted(m), 16);
        const auto a = random_weights(rng, m, 16, 5, false);
        const auto za = associated_transform(a, 16);
        const auto cola = composition_column(a, OperatorMode::associated(m), 16, Execution::serial);
        for (std::size_t n = 1; n <= 16; ++n) {
            CHECK(colr[n - 1] == zr.at(n));
            CHECK(cola[n - 1] == za.at(n));
        }
    }
}
