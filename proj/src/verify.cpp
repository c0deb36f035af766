#include "cameron/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "cameron/combinatorics.hpp"
#include "cameron/determinant.hpp"
#include "cameron/hypergeometric.hpp"
#include "cameron/operator.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

VerifyScope parse_scope(std::string_view name) {
    if (name == "all") return VerifyScope::all;
    if (name == "section-2" || name == "operators") return VerifyScope::operators;
    if (name == "section-3" || name == "hypergeometric") return VerifyScope::hypergeometric;
    throw std::invalid_argument("unknown scope '" + std::string(name) + "' (all, section-2, section-3)");
}

bool VerifyReport::passed() const {
    return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.passed(); });
}

const IdentityResult* VerifyReport::find(std::string_view name) const {
    for (const auto& r : identities) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

std::vector<std::vector<long>> random_seed_corpus(std::size_t seed_count, std::size_t n_limit, std::size_t max_m,
                                                  std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::vector<std::vector<long>> corpus;
    corpus.reserve(seed_count);
    while (corpus.size() < seed_count) {
        std::vector<long> x(n_limit);
        for (auto& v : x) v = entry(rng);
        if (n_limit == 0 || x[0] == 0) continue;
        const auto tail = x.begin() + static_cast<std::ptrdiff_t>(std::min(max_m, n_limit) - 1);
        if (std::all_of(tail, x.end(), [](long v) { return v == 0; })) continue;
        corpus.push_back(std::move(x));
    }
    return corpus;
}

namespace {

struct Clock {
    std::vector<MethodTiming> entries;

    void add(std::string_view method, double seconds) {
        for (auto& e : entries) {
            if (e.method == method) {
                e.seconds += seconds;
                return;
            }
        }
        entries.push_back({std::string(method), seconds});
    }
    void merge(const Clock& other) {
        for (const auto& e : other.entries) add(e.method, e.seconds);
    }
};

template <class F>
auto timed(Clock& clock, std::string_view method, F&& f) {
    const double start = omp_get_wtime();
    auto result = f();
    clock.add(method, omp_get_wtime() - start);
    return result;
}

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<Counterexample> first;
    Clock clock;

    void fail(std::size_t n, std::vector<MethodValue> values, std::string input) {
        ++failures;
        if (!first || n < first->n) first = Counterexample{std::move(input), n, std::move(values)};
    }

    /// All values must agree.
    void compare(std::size_t n, std::vector<MethodValue> values, const std::function<std::string()>& describe) {
        ++cases;
        for (const auto& v : values) {
            if (v.value != values.front().value) {
                fail(n, std::move(values), describe());
                return;
            }
        }
    }

    void merge(const Tally& other) {
        cases += other.cases;
        failures += other.failures;
        if (other.first && (!first || other.first->n < first->n)) first = other.first;
        clock.merge(other.clock);
    }
};

/// Runs body(i, tallies) for every case, in parallel when asked, and merges
/// the per-case tallies in case order so the outcome does not depend on
/// scheduling. An exception fails identity 0 for that case.
std::vector<Tally> fan_out(std::size_t count, std::size_t identities, Execution exec,
                           const std::function<void(std::size_t, std::vector<Tally>&)>& body) {
    std::vector<std::vector<Tally>> per_case(count, std::vector<Tally>(identities));
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long i = 0; i < total; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            body(idx, per_case[idx]);
        } catch (const std::exception& e) {
            per_case[idx][0].fail(0, {}, "case " + std::to_string(idx) + " threw: " + e.what());
        }
    }
    std::vector<Tally> merged(identities);
    for (const auto& c : per_case) {
        for (std::size_t k = 0; k < identities; ++k) merged[k].merge(c[k]);
    }
    return merged;
}

IdentityResult to_result(std::string name, Tally t) {
    return {std::move(name), t.cases, t.failures, std::move(t.first), std::move(t.clock.entries)};
}

std::string join(std::span<const Rational> xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += xs[i].to_string();
    }
    return s + "]";
}

CoefficientSequence window(const std::vector<long>& raw, const OperatorMode& mode) {
    const std::size_t m = mode.m();
    std::vector<Rational> values;
    if (mode.is_restricted()) {
        for (std::size_t i = 0; i < m && i < raw.size(); ++i) values.emplace_back(raw[i]);
        return {1, std::move(values)};
    }
    for (std::size_t i = m - 1; i < raw.size(); ++i) values.emplace_back(raw[i]);
    return {m, std::move(values)};
}

// ---------------------------------------------------------------------------
// operators

void verify_operators(const VerifyOptions& opts, VerifyReport& report) {
    const auto corpus = random_seed_corpus(opts.seed_count, opts.n_limit, opts.max_m, opts.rng_seed);
    const std::size_t n_max = opts.n_limit;
    const std::size_t per_seed = 2 * opts.max_m;

    auto tallies = fan_out(corpus.size() * per_seed, 2, opts.exec, [&](std::size_t i, std::vector<Tally>& t) {
        const auto& raw = corpus[i / per_seed];
        const auto m = static_cast<unsigned>(i % per_seed / 2 + 1);
        const OperatorMode mode = i % 2 == 0 ? OperatorMode::restricted(m) : OperatorMode::associated(m);
        const CoefficientSequence x = window(raw, mode);
        const auto describe = [&] {
            return "seed #" + std::to_string(i / per_seed) + " " + mode.to_string() + " x=" + join(x.values());
        };
        Tally& agree = t[0];
        Tally& inv = t[1];

        const CoefficientSequence z = timed(agree.clock, "recurrence", [&] {
            return mode.is_restricted() ? restricted_transform(x, n_max) : associated_transform(x, n_max);
        });
        std::optional<CoefficientSequence> direct;
        if (!mode.is_restricted()) {
            direct = timed(agree.clock, "recurrence-direct", [&] { return associated_transform_direct(x, n_max); });
        }
        const auto det = timed(agree.clock, "determinant", [&] {
            std::vector<std::optional<Rational>> col(n_max + 1);
            if (mode.is_restricted()) {
                const auto v = restricted_z_det_column(x, m, n_max, Execution::serial);
                for (std::size_t n = 1; n <= n_max; ++n) col[n] = v[n - 1];
            } else {
                for (std::size_t n = m; n <= n_max; ++n) col[n] = associated_z_det(x, n);
            }
            return col;
        });
        const auto comp = timed(agree.clock, "composition",
                                [&] { return composition_column(x, mode, n_max, Execution::serial); });
        const auto trudi = timed(agree.clock, "trudi", [&] {
            std::vector<Rational> v;
            for (std::size_t n = 1; n <= n_max; ++n) {
                v.push_back(mode.is_restricted() ? trudi_restricted(x, m, n) : trudi_associated(x, n));
            }
            return v;
        });
        const CoefficientSequence oracle = timed(
            agree.clock, "oracle", [&] { return series_reciprocal(cameron_denominator(x, n_max), n_max); });

        for (std::size_t n = 1; n <= n_max; ++n) {
            std::vector<MethodValue> values{{"recurrence", z.at(n)}};
            if (direct) values.push_back({"recurrence-direct", direct->at(n)});
            if (det[n]) values.push_back({"determinant", *det[n]});
            values.push_back({"composition", comp[n - 1]});
            values.push_back({"trudi", trudi[n - 1]});
            values.push_back({"oracle", oracle.at(n)});
            agree.compare(n, std::move(values), describe);
        }

        const auto by_comp = timed(inv.clock, "composition", [&] { return inversion_column(z, n_max, Execution::serial); });
        const auto by_det = timed(inv.clock, "determinant", [&] {
            std::vector<Rational> v;
            for (std::size_t n = 1; n <= n_max; ++n) v.push_back(Rational(sign_power(n - 1)) * x_from_z_det(z, n));
            return v;
        });
        const auto by_multi = timed(inv.clock, "multinomial", [&] {
            std::vector<Rational> v;
            for (std::size_t n = 1; n <= n_max; ++n) v.push_back(inversion_sum_multinomial(z, n));
            return v;
        });
        for (std::size_t n = 1; n <= n_max; ++n) {
            const Rational expected = mode.in_support(n) ? x.get_or_zero(n) : Rational(0);
            inv.compare(n,
                        {{"seed", expected},
                         {"composition", by_comp[n - 1]},
                         {"determinant", by_det[n - 1]},
                         {"multinomial", by_multi[n - 1]}},
                        describe);
        }
    });
    report.identities.push_back(to_result("operator agreement", std::move(tallies[0])));
    report.identities.push_back(to_result("inversion support", std::move(tallies[1])));

    // Geometric and arithmetic seeds over a, b in {-3..3} \ {0}.
    std::vector<std::pair<long, long>> ab;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            if (a != 0 && b != 0) ab.emplace_back(a, b);
        }
    }
    const std::size_t limit = opts.closed_form_limit;
    const std::size_t cases = ab.size() * opts.max_m;

    auto closed = fan_out(cases, 2, opts.exec, [&](std::size_t i, std::vector<Tally>& t) {
        const auto [a, b] = ab[i / opts.max_m];
        const auto m = static_cast<unsigned>(i % opts.max_m + 1);
        const GeometricParams p(a, b, m);
        const auto describe = [&] {
            return "geometric a=" + std::to_string(a) + " b=" + std::to_string(b) + " m=" + std::to_string(m);
        };
        const auto mode = OperatorMode::associated(m);
        const CoefficientSequence z = timed(t[0].clock, "recurrence", [&] {
            return associated_transform(materialize_seed(GeometricRule{a, b}, mode, limit), limit);
        });
        for (std::size_t n = m; n <= limit; ++n) {
            std::vector<MethodValue> values{{"recurrence", z.at(n)}};
            values.push_back({"closed-form", timed(t[0].clock, "closed-form", [&] { return geometric_closed_form(p, n); })});
            if (n <= 4 * m - 1) values.push_back({"initial-window", geometric_initial_window(p, n)});
            if (a == 1 && b == 1) values.push_back({"ones", ones_closed_form(m, n)});
            t[0].compare(n, std::move(values), describe);
        }
        if (a == 1 && b == 1 && m <= 2) {
            BigInt f0 = 0, f1 = 1;  // F_0, F_1
            for (std::size_t n = 1; n <= limit; ++n) {
                Rational expected;
                if (m == 1) {
                    BigInt two;
                    mpz_ui_pow_ui(two.get_mpz_t(), 2, n - 1);
                    expected = two;
                } else {
                    expected = f0;  // F_{n-1}
                    const BigInt next = f0 + f1;
                    f0 = f1;
                    f1 = next;
                }
                t[1].compare(n, {{m == 1 ? "2^(n-1)" : "F_(n-1)", expected}, {"recurrence", z.at(n)}}, describe);
            }
        }
    });
    report.identities.push_back(to_result("geometric closed form", std::move(closed[0])));
    report.identities.push_back(to_result("ones special cases", std::move(closed[1])));

    auto arith = fan_out(cases, 1, opts.exec, [&](std::size_t i, std::vector<Tally>& t) {
        const auto [a, b] = ab[i / opts.max_m];
        const auto m = static_cast<unsigned>(i % opts.max_m + 1);
        const ArithmeticParams p(a, b, m);
        const auto describe = [&] {
            return "arithmetic a=" + std::to_string(a) + " b=" + std::to_string(b) + " m=" + std::to_string(m);
        };
        const auto mode = OperatorMode::associated(m);
        const CoefficientSequence z = timed(t[0].clock, "operator", [&] {
            return associated_transform(materialize_seed(ArithmeticRule{a, b}, mode, limit), limit);
        });
        const CoefficientSequence r = timed(t[0].clock, "recurrence", [&] { return arithmetic_sequence(p, limit); });
        for (std::size_t n = 0; n <= limit; ++n) t[0].compare(n, {{"operator", z.at(n)}, {"recurrence", r.at(n)}}, describe);
    });
    report.identities.push_back(to_result("arithmetic recurrence", std::move(arith[0])));
}

// ---------------------------------------------------------------------------
// hypergeometric

struct HyperConfig {
    FamilySpec spec;
    OperatorMode mode;
    HyperOptions opts;
};

std::string describe(const HyperConfig& c) {
    std::string s = to_string(c.spec.family()) + " N=" + std::to_string(c.spec.order()) + " " + c.mode.to_string();
    if (c.spec.family() == Family::euler_second) {
        s += c.opts.euler_second_limit == EulerSecondLimit::as_printed ? " (as-printed limit)" : " (uniform limit)";
    }
    return s;
}

int least_order(Family f) { return f == Family::euler || f == Family::euler_second ? 0 : 1; }

/// Largest engine order whose coefficient index stays within the limit.
std::size_t order_limit(const FamilySpec& spec, std::size_t index_limit) {
    return spec.is_euler() ? index_limit / 2 : index_limit;
}

constexpr Family all_families[] = {Family::bernoulli, Family::cauchy, Family::euler, Family::euler_second};

/// sum_{i >= 0} d_i x^i inverted, coefficient i rescaled by i!.
std::vector<Rational> egf_reciprocal(const std::vector<Rational>& d) {
    const CoefficientSequence r = series_reciprocal(d, d.size() - 1);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(r.at(i) * Rational(factorial(static_cast<unsigned>(i))));
    return out;
}

std::string fraction(std::size_t hits, std::size_t total) {
    return std::to_string(hits) + " of " + std::to_string(total);
}

void verify_hypergeometric(const VerifyOptions& opts, VerifyReport& report) {
    std::vector<HyperConfig> configs;
    for (Family f : all_families) {
        for (int N = least_order(f); N <= opts.hyper_max_order; ++N) {
            for (unsigned m = 1; m <= opts.hyper_max_m; ++m) {
                for (bool restricted : {true, false}) {
                    const OperatorMode mode = restricted ? OperatorMode::restricted(m) : OperatorMode::associated(m);
                    configs.push_back({FamilySpec(f, N), mode, {EulerSecondLimit::as_printed}});
                    if (f == Family::euler_second) configs.push_back({FamilySpec(f, N), mode, {EulerSecondLimit::uniform}});
                }
            }
        }
    }

    auto tallies = fan_out(configs.size(), 3, opts.exec, [&](std::size_t i, std::vector<Tally>& t) {
        const HyperConfig& c = configs[i];
        const auto& [spec, mode, ho] = c;
        const std::size_t orders = order_limit(spec, opts.hyper_index_limit);
        const auto text = [&] { return describe(c); };
        const auto def = timed(t[0].clock, "definition",
                               [&] { return hyper_from_definition(spec, mode, coefficient_index(spec, orders), ho); });

        for (std::size_t n = 1; n <= orders; ++n) {
            std::vector<MethodValue> values{{"definition", def[coefficient_index(spec, n)].value}};
            if (mode.is_restricted() || n >= mode.m()) {
                values.push_back({"determinant", timed(t[0].clock, "determinant", [&] { return hyper_det(spec, mode, n, ho).value; })});
            }
            values.push_back({"composition", timed(t[0].clock, "composition", [&] { return hyper_sum(spec, mode, n, ho).value; })});
            values.push_back({"binomial", timed(t[0].clock, "binomial", [&] { return hyper_binom_sum(spec, mode, n, ho).value; })});
            values.push_back({"trudi", timed(t[0].clock, "trudi", [&] { return hyper_trudi(spec, mode, n, ho).value; })});
            values.push_back({"recurrence", timed(t[0].clock, "recurrence", [&] { return hyper_recurrence(spec, mode, n, ho).value; })});
            t[0].compare(coefficient_index(spec, n), std::move(values), text);
        }

        if (spec.is_euler()) {
            for (std::size_t k = 1; k < def.size(); k += 2) t[1].compare(k, {{"zero", Rational(0)}, {"definition", def[k].value}}, text);
        }

        for (std::size_t n = 1; n <= orders; ++n) {
            bool on_support = mode.is_restricted() ? n <= restricted_bandwidth(spec, mode, ho) : n >= mode.m();
            const Rational expected = on_support ? alpha(spec, n) : Rational(0);
            try {
                const Rational got = timed(t[2].clock, "inversion", [&] { return hyper_inversion_check(spec, mode, n, ho); });
                t[2].compare(n, {{"alpha", expected}, {"inversion", got}}, text);
            } catch (const std::logic_error& e) {
                ++t[2].cases;
                t[2].fail(n, {{"alpha", expected}}, text() + ": " + e.what());
            }
        }
    });
    report.identities.push_back(to_result("hypergeometric agreement", std::move(tallies[0])));
    report.identities.push_back(to_result("euler odd indices vanish", std::move(tallies[1])));
    report.identities.push_back(to_result("hypergeometric inversion", std::move(tallies[2])));

    // Classical limits against denominators written out here.
    {
        Tally t;
        const std::size_t top = std::max<std::size_t>(opts.hyper_index_limit, 20);
        struct Classical {
            FamilySpec spec;
            std::function<Rational(std::size_t)> coefficient;
            std::string name;
        };
        const std::vector<Classical> classical{
            {FamilySpec(Family::bernoulli, 1),
             [](std::size_t i) { return Rational(BigInt(1), factorial(static_cast<unsigned>(i + 1))); }, "x/(e^x-1)"},
            {FamilySpec(Family::cauchy, 1),
             [](std::size_t i) { return Rational(BigInt(i % 2 == 0 ? 1 : -1), BigInt(static_cast<unsigned long>(i + 1))); },
             "x/log(1+x)"},
            {FamilySpec(Family::euler, 0),
             [](std::size_t i) {
                 return i % 2 ? Rational(0) : Rational(BigInt(1), factorial(static_cast<unsigned>(i)));
             },
             "1/cosh(x)"},
            {FamilySpec(Family::euler_second, 0),
             [](std::size_t i) {
                 return i % 2 ? Rational(0) : Rational(BigInt(1), factorial(static_cast<unsigned>(i + 1)));
             },
             "x/sinh(x)"},
        };
        for (const auto& c : classical) {
            std::vector<Rational> d;
            for (std::size_t i = 0; i <= top; ++i) d.push_back(c.coefficient(i));
            const auto expected = timed(t.clock, "series", [&] { return egf_reciprocal(d); });
            const auto got = timed(t.clock, "definition",
                                   [&] { return hyper_from_definition(c.spec, OperatorMode::associated(1), top); });
            for (std::size_t i = 0; i <= top; ++i) {
                t.compare(i, {{c.name, expected[i]}, {"definition", got[i].value}},
                          [&] { return to_string(c.spec.family()) + " classical limit " + c.name; });
            }
        }
        report.identities.push_back(to_result("classical limits", std::move(t)));
    }

    // Unmodified closed expressions against the engine at m = n + 1, which is
    // m -> infinity at order n under either euler-second reading.
    {
        std::vector<FamilySpec> specs;
        for (Family f : all_families) {
            for (int N = least_order(f); N <= opts.hyper_max_order; ++N) specs.emplace_back(f, N);
        }
        auto t = fan_out(specs.size(), 1, opts.exec, [&](std::size_t i, std::vector<Tally>& out) {
            const FamilySpec& spec = specs[i];
            for (std::size_t n = 1; n <= order_limit(spec, std::min<std::size_t>(opts.hyper_index_limit, 14)); ++n) {
                const auto mode = OperatorMode::restricted(static_cast<unsigned>(n + 1));
                out[0].compare(coefficient_index(spec, n),
                               {{"composition", timed(out[0].clock, "engine", [&] { return hyper_sum(spec, mode, n).value; })},
                                {"closed-composition", timed(out[0].clock, "closed", [&] { return unmodified_composition_formula(spec, n); })},
                                {"closed-binomial", timed(out[0].clock, "closed", [&] { return unmodified_binomial_formula(spec, n); })}},
                               [&] { return to_string(spec.family()) + " N=" + std::to_string(spec.order()) + " m=n+1"; });
            }
        });
        report.identities.push_back(to_result("unmodified formulas", std::move(t[0])));
    }

    // Findings about the printed statements.
    std::size_t total = 0, as_printed_hits = 0, uniform_hits = 0;
    std::size_t zero_total = 0, zero_hits = 0;
    std::size_t comp_total = 0, comp_hits = 0, binom_hits = 0;
    for (int N = 0; N <= opts.hyper_max_order; ++N) {
        const FamilySpec spec(Family::euler_second, N);
        const std::size_t orders = order_limit(spec, opts.hyper_index_limit);
        for (unsigned m = 1; m <= opts.hyper_max_m; ++m) {
            const auto mode = OperatorMode::restricted(m);
            const auto printed = hyper_from_definition(spec, mode, 2 * orders, {EulerSecondLimit::as_printed});
            const auto uniform = hyper_from_definition(spec, mode, 2 * orders, {EulerSecondLimit::uniform});
            for (std::size_t n = 1; n <= orders; ++n) {
                const Rational det = hyper_det(spec, mode, n, {EulerSecondLimit::uniform}).value;
                ++total;
                as_printed_hits += det == printed[2 * n].value;
                uniform_hits += det == uniform[2 * n].value;
            }
        }
    }
    report.notes.push_back("restricted euler-second, determinant with bandwidth m: equals the definition read with upper "
                           "limit m-1 in " + fraction(as_printed_hits, total) +
                           " cases and with upper limit m in " + fraction(uniform_hits, total) + " cases");

    for (Family f : {Family::euler, Family::euler_second}) {
        const FamilySpec spec(f, 0);
        for (unsigned m = 1; m <= opts.hyper_max_m; ++m) {
            for (bool restricted : {true, false}) {
                const auto mode = restricted ? OperatorMode::restricted(m) : OperatorMode::associated(m);
                const std::size_t orders = order_limit(spec, opts.hyper_index_limit);
                const auto def = hyper_from_definition(spec, mode, 2 * orders);
                for (std::size_t n = 1; n <= orders; ++n) {
                    ++zero_total;
                    zero_hits += hyper_binom_sum(spec, mode, n).value == def[2 * n].value;
                }
            }
        }
    }
    report.notes.push_back("binomial form at N = 0 (euler, euler-second): equals the definition in " +
                           fraction(zero_hits, zero_total) + " cases");

    // Associated forms exactly as printed: no (-1)^(n-k), and for the binomial
    // form parts >= m-1.
    for (Family f : all_families) {
        for (int N = std::max(1, least_order(f)); N <= opts.hyper_max_order; ++N) {
            const FamilySpec spec(f, N);
            const std::size_t orders = order_limit(spec, opts.hyper_index_limit);
            for (unsigned m = 1; m <= opts.hyper_max_m; ++m) {
                const auto mode = OperatorMode::associated(m);
                const auto def = hyper_from_definition(spec, mode, coefficient_index(spec, orders));
                for (std::size_t n = 1; n <= orders; ++n) {
                    const Rational target = def[coefficient_index(spec, n)].value;
                    const CoefficientSequence a = alpha_seed(spec, mode, n);
                    Rational plain;
                    const auto table = composition_table(a, {m, unbounded}, n, Execution::serial);
                    for (std::size_t k = 1; k <= n; ++k) plain += table.cell(n, k);
                    ++comp_total;
                    comp_hits += xi(spec, n) * plain == target;

                    const std::size_t lo = m - 1;
                    std::vector<Rational> w;
                    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= n; ++j) w.push_back(alpha(spec, j));
                    const CoefficientSequence ws(std::max<std::size_t>(lo, 1), std::move(w));
                    std::vector<Rational> per_k;
                    if (lo == 0) {
                        per_k = weak_composition_sums(ws, n, {1, unbounded});
                    } else {
                        const auto tk = composition_table(ws, {lo, unbounded}, n, Execution::serial);
                        for (std::size_t k = 0; k <= n; ++k) per_k.push_back(tk.cell(n, k));
                    }
                    Rational printed_binom;
                    for (std::size_t k = 1; k <= n; ++k) {
                        printed_binom += Rational(binomial(static_cast<unsigned>(n + 1), static_cast<long>(k + 1))) * per_k[k];
                    }
                    binom_hits += xi(spec, n) * printed_binom == target;
                }
            }
        }
    }
    report.notes.push_back("associated composition form without (-1)^(n-k): equals the definition in " +
                           fraction(comp_hits, comp_total) + " cases (the implemented signed form is checked above)");
    report.notes.push_back("associated binomial form with parts >= m-1 and no sign: equals the definition in " +
                           fraction(binom_hits, comp_total) + " cases (the implemented form uses parts in {0} U [m, inf) "
                           "with (-1)^(n-k))");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    if (options.scope != VerifyScope::hypergeometric) verify_operators(options, report);
    if (options.scope != VerifyScope::operators) verify_hypergeometric(options, report);
    return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
    std::size_t failed = 0;
    for (const auto& r : report.identities) {
        out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  cases=" << r.cases;
        if (!r.passed()) {
            ++failed;
            out << " failures=" << r.failures;
        }
        out << '\n';
        if (r.counterexample) {
            out << "      counterexample: " << r.counterexample->input << " at n=" << r.counterexample->n << '\n';
            for (const auto& v : r.counterexample->values) out << "        " << v.method << " = " << v.value << '\n';
        }
    }
    for (const auto& note : report.notes) out << "NOTE  " << note << '\n';
    out << (failed == 0 ? "all " + std::to_string(report.identities.size()) + " identities hold"
                        : std::to_string(failed) + " of " + std::to_string(report.identities.size()) +
                              " identities failed")
        << '\n';
}

void print_timings(std::ostream& out, const VerifyReport& report) {
    for (const auto& r : report.identities) {
        for (const auto& t : r.timings) {
            out << "time  " << r.name << "  " << t.method << "  " << std::fixed << std::setprecision(3) << t.seconds
                << "s\n";
        }
    }
}

}  // namespace cameron
