#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cameron/execution.hpp"
#include "cameron/rational.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

/// Allowed part sizes [lo, hi]. hi may be `unbounded`.
struct PartRange {
    std::size_t lo = 1;
    std::size_t hi = unbounded;

    bool contains(std::size_t p) const { return p >= lo && p <= hi; }
};

/// Lexicographic stream of compositions (i_1, ..., i_k) of n with every part
/// in a PartRange. With parts_count set, only k = parts_count is produced and
/// parts may be 0 (lo = 0); without it, lo must be >= 1 and k is free.
///
///     CompositionStream s(4, {1, 3});
///     while (s.next()) use(s.parts());
class CompositionStream {
public:
    /// Throws std::invalid_argument for lo == 0 without a fixed part count, or lo > hi.
    CompositionStream(std::size_t n, PartRange range, std::optional<std::size_t> parts_count = std::nullopt);

    /// Advances to the next composition; false once the stream is exhausted.
    bool next();
    std::span<const std::size_t> parts() const { return parts_; }

private:
    bool completable(std::size_t remainder, std::size_t slots_left) const;
    bool fill_from(std::size_t position, std::size_t remainder);

    std::size_t n_;
    PartRange range_;
    std::optional<std::size_t> count_;
    std::vector<std::size_t> parts_;
    bool started_ = false;
    bool done_ = false;
};

/// Number of compositions (convenience over CompositionStream).
std::size_t count_compositions(std::size_t n, PartRange range, std::optional<std::size_t> parts_count = std::nullopt);

/// cell(s, k) = sum over compositions of s into exactly k parts from `range`
/// of w_{i_1} ... w_{i_k}, for 0 <= s <= n_max. cell(0, 0) = 1.
///
/// Every composition is visited once by a depth-first walk that carries the
/// running product, so one walk fills every s <= n_max. Weights are scaled to
/// integers (w_i L^i with L the common denominator) and the walk runs in
/// __int128 when a bit-length bound proves it cannot overflow, in GMP
/// integers otherwise. Zero weights prune their subtree.
class CompositionTable {
public:
    CompositionTable(std::size_t n_max, std::vector<Rational> cells);

    std::size_t n_max() const { return n_max_; }
    const Rational& cell(std::size_t s, std::size_t k) const { return cells_[s * (n_max_ + 1) + k]; }
    /// sum_k cell(s, k)
    Rational total(std::size_t s) const;
    /// sum_k (-1)^k cell(s, k)
    Rational alternating(std::size_t s) const;

private:
    std::size_t n_max_;
    std::vector<Rational> cells_;
};

/// w is read with zero extension (w.get_or_zero(i)).
CompositionTable composition_table(const CoefficientSequence& w, PartRange range, std::size_t n_max,
                                   Execution exec = Execution::parallel);

/// Visits every exponent vector t with sum_j j t_j = n and t_j = 0 for j outside
/// `range`. The callback sees t indexed by part size (t[0] is always 0, size n+1).
void for_each_exponent_vector(std::size_t n, PartRange range, const std::function<void(std::span<const unsigned>)>& fn);

/// buckets[k] = sum over exponent vectors with t_1 + ... + t_n = k of
/// multinomial(t) prod w_j^(t_j). Size n+1.
std::vector<Rational> trudi_buckets(const CoefficientSequence& w, PartRange range, std::size_t n);

/// z_n = sum_k sum_{i_1+...+i_k=n, 1<=i<=m} x_{i_1}...x_{i_k}; x starts at index 1.
Rational composition_sum_restricted(const CoefficientSequence& x, std::size_t m, std::size_t n);
/// Same over parts >= m = x.first_index(). 0 when n < m.
Rational composition_sum_associated(const CoefficientSequence& x, std::size_t n);

/// z_n = sum_{t_1+2t_2+...+m t_m = n} multinomial(t) x_1^t_1 ... x_m^t_m.
Rational trudi_restricted(const CoefficientSequence& x, std::size_t m, std::size_t n);
/// Same over t_m, ..., t_n with m = x.first_index(); multinomial top index t_m+...+t_n. 0 when n < m.
Rational trudi_associated(const CoefficientSequence& x, std::size_t n);

/// sum_k (-1)^(k-1) sum_{i_1+...+i_k=n, i>=1} z_{i_1}...z_{i_k}.
/// Recovers x_n on the seed's support and 0 off it. z starts at index 0.
Rational inversion_sum(const CoefficientSequence& z, std::size_t n);
/// The signed multinomial form: sum_t multinomial(t) (-1)^(|t|-1) z_1^t_1 ... z_n^t_n.
Rational inversion_sum_multinomial(const CoefficientSequence& z, std::size_t n);

/// weak[k] = sum over k-tuples summing to n whose entries are 0 or lie in
/// `positive`, of w_{i_1}...w_{i_k} with w_0 = 1. Size n+1 (weak[0] = [n == 0]).
/// A tuple with j nonzero entries is one of C(k, j) placements of a
/// composition into j positive parts, so weak[k] = sum_j C(k, j) cell(n, j).
std::vector<Rational> weak_composition_sums(const CoefficientSequence& w, std::size_t n, PartRange positive = {});

/// Coefficient z_n of (sum_{i>=0} x_i t^i)^(-1) with x_0 = 1, as
///     sum_{k=1}^{n} (-1)^k C(n+1, k+1) sum_{i_1+...+i_k=n} x_{i_1}...x_{i_k},
/// the inner sum running over k-tuples whose entries are 0 or lie in
/// `positive` (weak compositions). x starts at index 0.
Rational binomial_expansion_sum(const CoefficientSequence& x, std::size_t n, PartRange positive = {});

/// Column helpers: value for every n in 1..n_max from a single walk.
std::vector<Rational> composition_column(const CoefficientSequence& x, const OperatorMode& mode, std::size_t n_max,
                                         Execution exec = Execution::parallel);
std::vector<Rational> inversion_column(const CoefficientSequence& z, std::size_t n_max,
                                       Execution exec = Execution::parallel);

}  // namespace cameron
