#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cameron/rational.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

// The engine always reads the generating function as
//     1 + sum z_n t^n = (1 - sum x_n t^n)^(-1),
// i.e. the seed enters with a minus sign. Callers that want (sum x_n t^n)^(-1)
// negate x_1, x_2, ... first.

/// z_0 = 1, z_n = sum_{k=1}^{min(n,m)} x_k z_{n-k}, where m = x.size().
/// x must start at index 1 and be nonempty (std::invalid_argument otherwise).
/// The unrestricted operator is restricted_transform with m = n_max.
CoefficientSequence restricted_transform(const CoefficientSequence& x, std::size_t n_max);

/// z_0 = 1, z_1 = ... = z_{m-1} = 0, z_n = sum_{k=0}^{n-m} x_{m+k} z_{n-m-k},
/// where m = x.first_index() >= 1. Entries past x's end are read as zero.
/// When m > n_max the result is (1, 0, ..., 0).
CoefficientSequence associated_transform(const CoefficientSequence& x, std::size_t n_max);

/// Same sequence through the second form z_n = x_n + sum_{k=0}^{n-2m} x_{m+k} z_{n-m-k}.
CoefficientSequence associated_transform_direct(const CoefficientSequence& x, std::size_t n_max);

/// Truncated formal power series reciprocal: returns r_0..r_{n_max} with
/// sum_{k=0}^{n} d_k r_{n-k} = [n == 0]. d is zero-extended past its end.
/// Throws std::invalid_argument unless d_0 == 1.
CoefficientSequence series_reciprocal(std::span<const Rational> d, std::size_t n_max);

/// Denominator series (1, -x_1, ..., -x_m) for a restricted seed, or
/// (1, 0, ..., 0, -x_m, -x_{m+1}, ...) for an associated one, up to t^n_max.
std::vector<Rational> cameron_denominator(const CoefficientSequence& x, std::size_t n_max);

/// sum_{k=1}^{floor(n/m)} C(n-km+k-1, k-1) a^(n-km) b^k. Throws if n < m.
Rational geometric_closed_form(const GeometricParams& p, std::size_t n);

/// geometric_closed_form with a = b = 1.
Rational ones_closed_form(unsigned m, std::size_t n);

/// The three short windows written out term by term:
///   a^(n-m) b                                                  m  <= n <= 2m-1
///   ... + (n-2m+1) a^(n-2m) b^2                                2m <= n <= 3m-1
///   ... + C(n-3m+2, 2) a^(n-3m) b^3                            3m <= n <= 4m-1
/// Throws std::out_of_range outside m <= n <= 4m-1.
Rational geometric_initial_window(const GeometricParams& p, std::size_t n);

/// z_0..z_{start-1} for the arithmetic-progression seed x_n = (n-m)a + b.
/// m >= 3: z_0 = 1, zeros, z_m = b (start = m+1). m = 2: 1, 0, b (start = 3).
/// m = 1: 1, b, a + b(b+1) (start = 3).
std::vector<Rational> arithmetic_initial_values(const ArithmeticParams& p);

/// One step of the three-term-style recurrence for the arithmetic seed:
///   m >= 3:  2 z_{n-1} - z_{n-2} + b z_{n-m} + (a-b) z_{n-m-1}
///   m == 2:  2 z_{n-1} + (b-1) z_{n-2} + (a-b) z_{n-3}
///   m == 1:  (b+2) z_{n-1} + (a-b-1) z_{n-2}
/// history must hold z_0..z_{n-1}. Throws std::invalid_argument when n is
/// below the recurrence's starting index or history is short.
Rational arithmetic_recurrence_step(const ArithmeticParams& p, std::span<const Rational> history, std::size_t n);

/// z_0..z_{n_max} from the initial values and repeated steps.
CoefficientSequence arithmetic_sequence(const ArithmeticParams& p, std::size_t n_max);

}  // namespace cameron
