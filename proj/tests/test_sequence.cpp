#include <doctest.h>

#include <stdexcept>

#include "cameron/sequence.hpp"

using namespace cameron;

TEST_CASE("coefficient sequence bounds") {
    const auto x = CoefficientSequence::seed({2, 3});
    CHECK(x.first_index() == 1);
    CHECK(x.end_index() == 3);
    CHECK(x.at(2) == Rational(3));
    CHECK_THROWS_AS(x.at(0), std::out_of_range);
    CHECK_THROWS_AS(x.at(3), std::out_of_range);
    CHECK(x.get_or_zero(7).is_zero());
    CHECK_THROWS_AS(CoefficientSequence(0, {2, 1}), std::invalid_argument);
    CHECK(CoefficientSequence().at(0) == Rational(1));
}

TEST_CASE("operator mode") {
    CHECK_THROWS_AS(OperatorMode::restricted(0), std::invalid_argument);
    const auto r = OperatorMode::restricted(3);
    const auto a = OperatorMode::associated(3);
    CHECK(r.to_string() == "restricted(3)");
    CHECK(a.to_string() == "associated(3)");
    CHECK(r.in_support(1));
    CHECK_FALSE(r.in_support(4));
    CHECK_FALSE(a.in_support(2));
    CHECK(a.in_support(40));
    CHECK_FALSE(a.in_support(0));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GeometricParams(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GeometricParams(1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ArithmeticParams(1, 1, 0), std::invalid_argument);
    CHECK_NOTHROW(ArithmeticParams(-3, 2, 5));
}

TEST_CASE("materialize seeds") {
    const auto g = materialize_seed(GeometricRule{2, 3}, OperatorMode::associated(2), 5);
    CHECK(g.first_index() == 2);
    CHECK(g.end_index() == 6);
    CHECK(g.at(2) == Rational(3));
    CHECK(g.at(5) == Rational(24));

    const auto ar = materialize_seed(ArithmeticRule{1, 2}, OperatorMode::associated(3), 6);
    CHECK(ar.at(3) == Rational(2));
    CHECK(ar.at(6) == Rational(5));

    const auto ones = materialize_seed(OnesRule{}, OperatorMode::restricted(3), 10);
    CHECK(ones.size() == 3);
    CHECK(ones.at(3) == Rational(1));

    const auto padded = materialize_seed(ExplicitSeed{{7}}, OperatorMode::restricted(3), 10);
    CHECK(padded.size() == 3);
    CHECK(padded.at(1) == Rational(7));
    CHECK(padded.at(3).is_zero());

    const auto assoc = materialize_seed(ExplicitSeed{{4, 5}}, OperatorMode::associated(2), 6);
    CHECK(assoc.first_index() == 2);
    CHECK(assoc.at(3) == Rational(5));
    CHECK(assoc.get_or_zero(6).is_zero());
}
