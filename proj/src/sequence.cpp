#include "cameron/sequence.hpp"

#include <stdexcept>

namespace cameron {

CoefficientSequence::CoefficientSequence(std::size_t first_index, std::vector<Rational> values)
    : first_(first_index), values_(std::move(values)) {
    if (first_ == 0 && (values_.empty() || values_.front() != Rational(1))) {
        throw std::invalid_argument("a sequence starting at index 0 must have c_0 = 1");
    }
}

const Rational& CoefficientSequence::at(std::size_t n) const {
    if (!contains(n)) {
        throw std::out_of_range("coefficient index " + std::to_string(n) + " outside [" + std::to_string(first_) +
                                ", " + std::to_string(end_index()) + ")");
    }
    return values_[n - first_];
}

OperatorMode::OperatorMode(Kind kind, unsigned m) : kind_(kind), m_(m) {
    if (m == 0) throw std::invalid_argument("operator mode needs m >= 1");
}

std::string OperatorMode::to_string() const {
    return (is_restricted() ? "restricted(" : "associated(") + std::to_string(m_) + ")";
}

GeometricParams::GeometricParams(long a_, long b_, unsigned m_) : a(a_), b(b_), m(m_) {
    if (a == 0 || b == 0) throw std::invalid_argument("geometric seed needs nonzero a and b");
    if (m == 0) throw std::invalid_argument("geometric seed needs m >= 1");
}

ArithmeticParams::ArithmeticParams(long a_, long b_, unsigned m_) : a(a_), b(b_), m(m_) {
    if (a == 0 || b == 0) throw std::invalid_argument("arithmetic seed needs nonzero a and b");
    if (m == 0) throw std::invalid_argument("arithmetic seed needs m >= 1");
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

CoefficientSequence materialize_seed(const SeedRule& rule, const OperatorMode& mode, std::size_t n_max) {
    const std::size_t first = mode.is_restricted() ? 1 : mode.m();
    const std::size_t last = mode.is_restricted() ? mode.m() : n_max;  // inclusive
    const std::size_t count = last >= first ? last - first + 1 : 0;

    std::vector<Rational> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(std::visit(
            Overloaded{
                [&](const ExplicitSeed& s) { return i < s.values.size() ? s.values[i] : Rational(0); },
                [](const OnesRule&) { return Rational(1); },
                [&](const GeometricRule& g) {
                    return Rational(BigInt(g.a)).pow(static_cast<unsigned>(i)) * Rational(g.b);
                },
                [&](const ArithmeticRule& r) { return Rational(static_cast<long>(i) * r.a + r.b); },
            },
            rule));
    }
    return {first, std::move(values)};
}

}  // namespace cameron
