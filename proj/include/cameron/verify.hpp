#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cameron/execution.hpp"
#include "cameron/rational.hpp"

namespace cameron {

enum class VerifyScope { all, operators, hypergeometric };

/// all, section-2 (operators), section-3 (hypergeometric). Throws std::invalid_argument.
VerifyScope parse_scope(std::string_view name);

struct VerifyOptions {
    VerifyScope scope = VerifyScope::all;
    std::size_t seed_count = 200;
    std::size_t n_limit = 22;         // operator identities
    std::size_t max_m = 5;
    std::size_t closed_form_limit = 40;
    std::size_t hyper_index_limit = 16;  // coefficient index for the hypergeometric identities
    int hyper_max_order = 3;             // N
    std::size_t hyper_max_m = 4;
    std::uint64_t rng_seed = 42;
    Execution exec = Execution::parallel;
};

struct MethodValue {
    std::string method;
    Rational value;
};

/// One failing input: a description of the configuration, the index, and
/// what each method produced there.
struct Counterexample {
    std::string input;
    std::size_t n = 0;
    std::vector<MethodValue> values;
};

struct MethodTiming {
    std::string method;
    double seconds = 0;
};

struct IdentityResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// The failure with the smallest index (ties broken by enumeration order).
    std::optional<Counterexample> counterexample;
    std::vector<MethodTiming> timings;

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<IdentityResult> identities;
    std::vector<std::string> notes;

    bool passed() const;
    const IdentityResult* find(std::string_view name) const;
};

/// The random seed corpus: seed_count vectors x_1..x_{n_limit} with entries in
/// [-5, 5]. A vector is redrawn when some configuration would see an all-zero
/// seed, i.e. when x_1 = 0 (restricted windows) or x_{max_m}..x_{n_limit} are
/// all 0 (associated windows).
std::vector<std::vector<long>> random_seed_corpus(std::size_t seed_count, std::size_t n_limit, std::size_t max_m,
                                                  std::uint64_t rng_seed);

VerifyReport run_verify(const VerifyOptions& options);

/// Identity lines, counterexamples and notes. Contains nothing run-dependent,
/// so two runs with the same options print the same bytes.
void print_report(std::ostream& out, const VerifyReport& report);
/// Per-identity, per-method wall-clock seconds.
void print_timings(std::ostream& out, const VerifyReport& report);

}  // namespace cameron
