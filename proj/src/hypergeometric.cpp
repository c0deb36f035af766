#include "cameron/hypergeometric.hpp"

#include <stdexcept>

#include "cameron/combinatorics.hpp"
#include "cameron/determinant.hpp"
#include "cameron/operator.hpp"

namespace cameron {

std::string to_string(Family f) {
    switch (f) {
        case Family::bernoulli: return "bernoulli";
        case Family::cauchy: return "cauchy";
        case Family::euler: return "euler";
        case Family::euler_second: return "euler-second";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "bernoulli") return Family::bernoulli;
    if (name == "cauchy") return Family::cauchy;
    if (name == "euler") return Family::euler;
    if (name == "euler-second" || name == "euler2" || name == "euler_second") return Family::euler_second;
    throw std::invalid_argument("unknown family '" + name + "' (bernoulli, cauchy, euler, euler-second)");
}

FamilySpec::FamilySpec(Family family, int order) : family_(family), order_(order) {
    const int least = is_euler() ? 0 : 1;
    if (order < least) {
        throw std::invalid_argument(to_string(family) + " numbers need N >= " + std::to_string(least));
    }
}

Rational alpha(const FamilySpec& spec, std::size_t j) {
    const auto N = static_cast<unsigned>(spec.order());
    const auto jj = static_cast<unsigned>(j);
    switch (spec.family()) {
        case Family::bernoulli: return Rational(factorial(N), factorial(N + jj));
        case Family::cauchy: return Rational(BigInt(N), BigInt(N + jj));
        case Family::euler: return Rational(factorial(2 * N), factorial(2 * N + 2 * jj));
        case Family::euler_second: return Rational(factorial(2 * N + 1), factorial(2 * N + 2 * jj + 1));
    }
    return 0;
}

Rational xi(const FamilySpec& spec, std::size_t n) {
    const auto nn = static_cast<unsigned>(n);
    switch (spec.family()) {
        case Family::bernoulli: return Rational(BigInt(sign_power(n) * factorial(nn)));
        case Family::cauchy: return Rational(factorial(nn));
        case Family::euler:
        case Family::euler_second: return Rational(BigInt(sign_power(n) * factorial(2 * nn)));
    }
    return 0;
}

std::size_t restricted_bandwidth(const FamilySpec& spec, const OperatorMode& mode, const HyperOptions& opts) {
    if (spec.family() == Family::euler_second && opts.euler_second_limit == EulerSecondLimit::as_printed) {
        return mode.m() - 1;
    }
    return mode.m();
}

std::size_t coefficient_index(const FamilySpec& spec, std::size_t n) { return spec.is_euler() ? 2 * n : n; }

CoefficientSequence alpha_seed(const FamilySpec& spec, const OperatorMode& mode, std::size_t n_max,
                               const HyperOptions& opts) {
    std::vector<Rational> values;
    if (mode.is_restricted()) {
        const std::size_t bw = restricted_bandwidth(spec, mode, opts);
        for (std::size_t j = 1; j <= bw; ++j) values.push_back(alpha(spec, j));
        return {1, std::move(values)};
    }
    for (std::size_t j = mode.m(); j <= n_max; ++j) values.push_back(alpha(spec, j));
    return {mode.m(), std::move(values)};
}

namespace {

PartRange support_range(const FamilySpec& spec, const OperatorMode& mode, const HyperOptions& opts) {
    if (mode.is_restricted()) return {1, restricted_bandwidth(spec, mode, opts)};
    return {mode.m(), unbounded};
}

void require_order(const OperatorMode& mode, std::size_t n) {
    if (n == 0) throw std::invalid_argument("hypergeometric routes need order n >= 1");
    if (!mode.is_restricted() && n < mode.m()) {
        throw std::invalid_argument("associated hypergeometric routes need n >= m");
    }
}

HyperNumber make(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, Rational value) {
    return HyperNumber{std::move(value), spec, mode, coefficient_index(spec, n)};
}

/// Coefficient of x^i in the family's denominator before truncation.
Rational definition_coefficient(const FamilySpec& spec, std::size_t i) {
    const Rational N(spec.order());
    switch (spec.family()) {
        case Family::bernoulli: return Rational(1) / rising_factorial(N + Rational(1), static_cast<unsigned>(i));
        case Family::cauchy: {
            const Rational c = N / (N + Rational(static_cast<long>(i)));
            return i % 2 == 0 ? c : -c;
        }
        case Family::euler:
            if (i % 2 == 1) return 0;
            return Rational(1) / rising_factorial(Rational(2) * N + Rational(1), static_cast<unsigned>(i));
        case Family::euler_second:
            if (i % 2 == 1) return 0;
            return Rational(1) / rising_factorial(Rational(2) * N + Rational(2), static_cast<unsigned>(i));
    }
    return 0;
}

}  // namespace

std::vector<HyperNumber> hyper_from_definition(const FamilySpec& spec, const OperatorMode& mode,
                                               std::size_t max_index, const HyperOptions& opts) {
    // Summation index of the printed series: i for Bernoulli/Cauchy, i/2 for Euler.
    const auto term_index = [&](std::size_t i) { return spec.is_euler() ? i / 2 : i; };
    std::size_t upper = mode.m();
    if (mode.is_restricted() && spec.family() == Family::euler_second &&
        opts.euler_second_limit == EulerSecondLimit::as_printed) {
        upper = mode.m() - 1;
    }

    std::vector<Rational> d(max_index + 1);
    d[0] = 1;
    for (std::size_t i = 1; i <= max_index; ++i) {
        const std::size_t t = term_index(i);
        const bool kept = mode.is_restricted() ? t <= upper : t >= mode.m();
        if (kept) d[i] = definition_coefficient(spec, i);
    }
    const CoefficientSequence r = series_reciprocal(d, max_index);

    std::vector<HyperNumber> out;
    out.reserve(max_index + 1);
    for (std::size_t i = 0; i <= max_index; ++i) {
        out.push_back(HyperNumber{r.at(i) * Rational(factorial(static_cast<unsigned>(i))), spec, mode, i});
    }
    return out;
}

HyperNumber hyper_det(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts) {
    require_order(mode, n);
    const PartRange support = support_range(spec, mode, opts);
    const CoefficientSequence a = alpha_seed(spec, mode, n, opts);
    const std::size_t band = mode.is_restricted() ? support.hi : n;
    HessenbergSpec matrix{n, band, [&](std::size_t i, std::size_t j) {
                              const std::size_t k = i - j + 1;
                              return support.contains(k) ? a.get_or_zero(k) : Rational(0);
                          }};
    return make(spec, mode, n, xi(spec, n) * hessenberg_det(matrix));
}

HyperNumber hyper_sum(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts) {
    if (n == 0) throw std::invalid_argument("hypergeometric routes need order n >= 1");
    const CoefficientSequence a = alpha_seed(spec, mode, n, opts);
    const CompositionTable table = composition_table(a, support_range(spec, mode, opts), n, Execution::serial);
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
        if ((n - k) % 2 == 0) s += table.cell(n, k);
        else s -= table.cell(n, k);
    }
    return make(spec, mode, n, xi(spec, n) * s);
}

HyperNumber hyper_binom_sum(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                            const HyperOptions& opts) {
    if (n == 0) throw std::invalid_argument("hypergeometric routes need order n >= 1");
    const CoefficientSequence a = alpha_seed(spec, mode, n, opts);
    const auto weak = weak_composition_sums(a, n, support_range(spec, mode, opts));
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational term = Rational(binomial(static_cast<unsigned>(n + 1), static_cast<long>(k + 1))) * weak[k];
        if ((n - k) % 2 == 0) s += term;
        else s -= term;
    }
    return make(spec, mode, n, xi(spec, n) * s);
}

HyperNumber hyper_trudi(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts) {
    if (n == 0) throw std::invalid_argument("hypergeometric routes need order n >= 1");
    const CoefficientSequence a = alpha_seed(spec, mode, n, opts);
    const auto buckets = trudi_buckets(a, support_range(spec, mode, opts), n);
    Rational s;
    for (std::size_t k = 0; k < buckets.size(); ++k) {
        if (k % 2 == 0) s += buckets[k];
        else s -= buckets[k];
    }
    return make(spec, mode, n, Rational(sign_power(n)) * xi(spec, n) * s);
}

HyperNumber hyper_recurrence(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                             const HyperOptions& opts) {
    if (n == 0) throw std::invalid_argument("hypergeometric routes need order n >= 1");
    const CoefficientSequence a = alpha_seed(spec, mode, n, opts);
    std::vector<Rational> signed_alpha;
    for (std::size_t j = a.first_index(); j < a.end_index(); ++j) {
        signed_alpha.push_back(j % 2 == 1 ? a.at(j) : -a.at(j));
    }
    const CoefficientSequence seed(a.first_index(), std::move(signed_alpha));
    Rational z;
    if (mode.is_restricted()) {
        z = seed.empty() ? Rational(0) : restricted_transform(seed, n).at(n);
    } else {
        z = associated_transform(seed, n).at(n);
    }
    return make(spec, mode, n, xi(spec, n) * z);
}

Rational hyper_inversion_check(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                               const HyperOptions& opts) {
    if (n == 0) throw std::invalid_argument("inversion needs n >= 1");
    const auto numbers = hyper_from_definition(spec, mode, coefficient_index(spec, n), opts);
    std::vector<Rational> ratios{Rational(1)};
    for (std::size_t j = 1; j <= n; ++j) ratios.push_back(numbers[coefficient_index(spec, j)].value / xi(spec, j));
    const CoefficientSequence s(0, std::move(ratios));

    HessenbergSpec matrix{n, n, [&s](std::size_t i, std::size_t j) { return s.at(i - j + 1); }};
    const Rational by_det = hessenberg_det(matrix);

    const PartRange range = mode.is_restricted() ? PartRange{1, n} : PartRange{mode.m(), n};
    const auto buckets = trudi_buckets(s, range, n);
    Rational by_multinomial;
    for (std::size_t k = 1; k < buckets.size(); ++k) {
        if ((n - k) % 2 == 0) by_multinomial += buckets[k];
        else by_multinomial -= buckets[k];
    }
    if (by_det != by_multinomial) {
        throw std::logic_error("inversion forms disagree at n = " + std::to_string(n) + ": determinant " +
                               by_det.to_string() + " vs multinomial " + by_multinomial.to_string());
    }
    return by_det;
}

namespace {

/// Per-part factor and sign rule of the unmodified expansions.
struct UnmodifiedTerms {
    Rational lead;             // n! or (2n)!
    bool alternate_by_parts;   // multiply by (-1)^(n-k) (Cauchy)
};

Rational unmodified_part(const FamilySpec& spec, std::size_t i) {
    const auto N = static_cast<unsigned>(spec.order());
    const auto ii = static_cast<unsigned>(i);
    switch (spec.family()) {
        case Family::bernoulli: return Rational(-factorial(N), factorial(N + ii));
        case Family::cauchy: return Rational(BigInt(N), BigInt(N + ii));
        case Family::euler: return Rational(-factorial(2 * N), factorial(2 * N + 2 * ii));
        case Family::euler_second: return Rational(-factorial(2 * N + 1), factorial(2 * N + 2 * ii + 1));
    }
    return 0;
}

UnmodifiedTerms unmodified_terms(const FamilySpec& spec, std::size_t n) {
    const auto nn = static_cast<unsigned>(n);
    return {Rational(factorial(spec.is_euler() ? 2 * nn : nn)), spec.family() == Family::cauchy};
}

/// by_count[j] = sum over compositions of n into j positive parts of prod f(i).
std::vector<Rational> positive_products(const FamilySpec& spec, std::size_t n) {
    std::vector<Rational> by_count(n + 1);
    CompositionStream stream(n, {1, unbounded});
    while (stream.next()) {
        Rational p(1);
        for (std::size_t part : stream.parts()) p *= unmodified_part(spec, part);
        by_count[stream.parts().size()] += p;
    }
    return by_count;
}

}  // namespace

Rational unmodified_composition_formula(const FamilySpec& spec, std::size_t n) {
    const auto terms = unmodified_terms(spec, n);
    const auto by_count = positive_products(spec, n);
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
        if (terms.alternate_by_parts && (n - k) % 2 == 1) s -= by_count[k];
        else s += by_count[k];
    }
    return terms.lead * s;
}

Rational unmodified_binomial_formula(const FamilySpec& spec, std::size_t n) {
    const auto terms = unmodified_terms(spec, n);
    const auto by_count = positive_products(spec, n);
    const Rational zero_part = unmodified_part(spec, 0);
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational weak;
        for (std::size_t j = 1; j <= k; ++j) {
            weak += Rational(binomial(static_cast<unsigned>(k), static_cast<long>(j))) *
                    zero_part.pow(static_cast<unsigned>(k - j)) * by_count[j];
        }
        Rational term = Rational(binomial(static_cast<unsigned>(n + 1), static_cast<long>(k + 1))) * weak;
        if (terms.alternate_by_parts && (n - k) % 2 == 1) s -= term;
        else s += term;
    }
    return terms.lead * s;
}

}  // namespace cameron
