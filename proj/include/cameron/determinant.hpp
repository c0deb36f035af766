#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cameron/execution.hpp"
#include "cameron/rational.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

/// Lower-Hessenberg matrix with unit superdiagonal, described by a rule.
///
/// Rows and columns are 1-based. entry(i, j) is consulted only for j <= i and
/// i - j < bandwidth; everything else below the superdiagonal is zero, the
/// superdiagonal is 1 and everything above it is 0.
struct HessenbergSpec {
    std::size_t order = 0;
    std::size_t bandwidth = 0;
    std::function<Rational(std::size_t row, std::size_t col)> entry;
};

/// Exact determinant.
///
/// Column 1 is cycled to the back, which puts the unit superdiagonal on the
/// main diagonal. Those unit pivots eliminate the lower triangle without any
/// division or pivot search, and only the trailing column is ever updated, so
/// the cost is O(order * bandwidth) operations on a band buffer.
Rational hessenberg_det(const HessenbergSpec& spec);

/// z_n as the determinant whose entry (i, j) is (-1)^(i-j) x_{i-j+1}, truncated
/// to bandwidth m. x starts at index 1; entries past its end count as zero.
Rational restricted_z_det(const CoefficientSequence& x, std::size_t m, std::size_t n);

/// z_n as the determinant with entry (i, j) = (-1)^(i-j) x_{i-j+1} when
/// i-j+1 >= m and 0 otherwise, where m = x.first_index().
/// Throws std::invalid_argument when n < m (those z_n are 0 by definition).
Rational associated_z_det(const CoefficientSequence& x, std::size_t n);

/// Determinant with entry (i, j) = z_{i-j+1}; z starts at index 0.
/// Equals (-1)^(n-1) x_n where the seed is supported and 0 elsewhere.
Rational x_from_z_det(const CoefficientSequence& z, std::size_t n);

/// restricted_z_det for every n in 1..n_max (one independent determinant per n).
std::vector<Rational> restricted_z_det_column(const CoefficientSequence& x, std::size_t m, std::size_t n_max,
                                              Execution exec = Execution::parallel);

}  // namespace cameron
