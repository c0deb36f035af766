#include "cameron/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace cameron {

Rational hessenberg_det(const HessenbergSpec& spec) {
    const std::size_t n = spec.order;
    if (n == 0) throw std::invalid_argument("hessenberg_det needs order >= 1");
    const std::size_t band = std::min(std::max<std::size_t>(spec.bandwidth, 1), n);

    // After moving column 1 to the back the matrix C has C(i, k) = H(i, k+1)
    // for k < n (so C(i, i) = 1) and C(i, n) = H(i, 1) =: trailing[i].
    // lower[i][d] = C(i, i-d) = H(i, i+1-d), nonzero only for 1 <= d <= band.
    std::vector<Rational> trailing(n + 1);
    std::vector<std::vector<Rational>> lower(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i <= band) trailing[i] = spec.entry(i, 1);
        const std::size_t depth = std::min(band, i - 1);
        lower[i].resize(depth + 1);
        for (std::size_t d = 1; d <= depth; ++d) lower[i][d] = spec.entry(i, i + 1 - d);
    }

    // Unit pivot at C(k, k): clearing column k below it touches only the trailing column.
    for (std::size_t k = 1; k < n; ++k) {
        if (trailing[k].is_zero()) continue;
        const std::size_t last = std::min(n, k + band);
        for (std::size_t i = k + 1; i <= last; ++i) {
            const Rational& coeff = lower[i][i - k];
            if (!coeff.is_zero()) trailing[i] -= coeff * trailing[k];
        }
    }
    // det C = trailing[n]; the column cycle contributes (-1)^(n-1).
    return (n % 2 == 1) ? trailing[n] : -trailing[n];
}

Rational restricted_z_det(const CoefficientSequence& x, std::size_t m, std::size_t n) {
    if (x.first_index() != 1) throw std::invalid_argument("restricted seed must start at x_1");
    if (m == 0) throw std::invalid_argument("restricted_z_det needs m >= 1");
    HessenbergSpec spec{n, m, [&x](std::size_t i, std::size_t j) {
                            const std::size_t k = i - j + 1;
                            const Rational v = x.get_or_zero(k);
                            return ((i - j) % 2 == 0) ? v : -v;
                        }};
    return hessenberg_det(spec);
}

Rational associated_z_det(const CoefficientSequence& x, std::size_t n) {
    const std::size_t m = x.first_index();
    if (m == 0) throw std::invalid_argument("associated seed must start at x_m with m >= 1");
    if (n < m) throw std::invalid_argument("associated_z_det needs n >= m");
    HessenbergSpec spec{n, n, [&x](std::size_t i, std::size_t j) {
                            const std::size_t k = i - j + 1;
                            const Rational v = x.get_or_zero(k);
                            return ((i - j) % 2 == 0) ? v : -v;
                        }};
    return hessenberg_det(spec);
}

Rational x_from_z_det(const CoefficientSequence& z, std::size_t n) {
    HessenbergSpec spec{n, n, [&z](std::size_t i, std::size_t j) { return z.at(i - j + 1); }};
    return hessenberg_det(spec);
}

std::vector<Rational> restricted_z_det_column(const CoefficientSequence& x, std::size_t m, std::size_t n_max,
                                              Execution exec) {
    std::vector<Rational> out(n_max);
    const long count = static_cast<long>(n_max);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = restricted_z_det(x, m, static_cast<std::size_t>(i) + 1);
    }
    return out;
}

}  // namespace cameron
