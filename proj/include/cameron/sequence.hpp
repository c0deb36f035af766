#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cameron/rational.hpp"

namespace cameron {

/// A finite run of coefficients c_first, c_first+1, ..., c_last.
///
/// Transformed sequences start at index 0 and always have c_0 = 1. Seeds start
/// at index 1 (restricted) or at index m (associated). Reads outside the
/// stored range throw std::out_of_range; get_or_zero() is the explicit
/// zero-extension used by the operations that document it.
class CoefficientSequence {
public:
    CoefficientSequence() : values_{Rational(1)} {}
    /// Throws std::invalid_argument if first_index == 0 and values[0] != 1.
    CoefficientSequence(std::size_t first_index, std::vector<Rational> values);

    /// Seed x_1, x_2, ... given in order.
    static CoefficientSequence seed(std::vector<Rational> values) { return {1, std::move(values)}; }

    std::size_t first_index() const { return first_; }
    /// One past the last stored index.
    std::size_t end_index() const { return first_ + values_.size(); }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(std::size_t n) const { return n >= first_ && n < end_index(); }

    const Rational& at(std::size_t n) const;
    Rational get_or_zero(std::size_t n) const { return contains(n) ? values_[n - first_] : Rational(0); }

    std::span<const Rational> values() const { return values_; }

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    std::size_t first_ = 0;
    std::vector<Rational> values_;
};

/// restricted(m): the seed is truncated to x_1..x_m.
/// associated(m): the seed lives on x_m, x_m+1, ...
class OperatorMode {
public:
    enum class Kind { restricted, associated };

    /// Throws std::invalid_argument if m == 0.
    OperatorMode(Kind kind, unsigned m);
    static OperatorMode restricted(unsigned m) { return {Kind::restricted, m}; }
    static OperatorMode associated(unsigned m) { return {Kind::associated, m}; }

    Kind kind() const { return kind_; }
    unsigned m() const { return m_; }
    bool is_restricted() const { return kind_ == Kind::restricted; }

    /// True when x_n may be nonzero under this mode.
    bool in_support(std::size_t n) const { return n >= 1 && (is_restricted() ? n <= m_ : n >= m_); }

    std::string to_string() const;

    friend bool operator==(const OperatorMode&, const OperatorMode&) = default;

private:
    Kind kind_;
    unsigned m_;
};

/// x_n = a^(n-m) b for n >= m.
struct GeometricParams {
    /// Throws std::invalid_argument if a == 0, b == 0 or m == 0.
    GeometricParams(long a, long b, unsigned m);
    long a;
    long b;
    unsigned m;
};

/// x_n = (n-m) a + b for n >= m.
struct ArithmeticParams {
    /// Throws std::invalid_argument if a == 0, b == 0 or m == 0.
    ArithmeticParams(long a, long b, unsigned m);
    long a;
    long b;
    unsigned m;
};

struct OnesRule {};
struct GeometricRule {
    long a;
    long b;
};
struct ArithmeticRule {
    long a;
    long b;
};
/// Explicit values, starting at index 1 (restricted) or index m (associated).
struct ExplicitSeed {
    std::vector<Rational> values;
};

using SeedRule = std::variant<ExplicitSeed, OnesRule, GeometricRule, ArithmeticRule>;

/// Evaluates a seed rule for a mode, producing x over the mode's support:
/// indices 1..m when restricted, m..n_max when associated.
/// Generator rules index from the start of the support, so GeometricRule gives
/// a^(n-m) b for associated(m) and a^(n-1) b for restricted(m). Explicit seeds
/// are taken as given and zero-filled where shorter than the support.
CoefficientSequence materialize_seed(const SeedRule& rule, const OperatorMode& mode, std::size_t n_max);

}  // namespace cameron
