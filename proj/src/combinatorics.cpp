#include "cameron/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <omp.h>

namespace cameron {

// ---------------------------------------------------------------------------
// CompositionStream

CompositionStream::CompositionStream(std::size_t n, PartRange range, std::optional<std::size_t> parts_count)
    : n_(n), range_(range), count_(parts_count) {
    if (range.lo > range.hi) throw std::invalid_argument("part range with lo > hi");
    if (range.lo == 0 && !count_) throw std::invalid_argument("zero parts need a fixed part count");
}

bool CompositionStream::completable(std::size_t remainder, std::size_t slots_left) const {
    const std::size_t lo = range_.lo;
    const std::size_t hi = range_.hi;
    if (count_) {
        if (slots_left == 0) return remainder == 0;
        if (remainder < slots_left * lo) return false;
        return hi == unbounded || remainder <= slots_left * hi;
    }
    if (remainder == 0) return true;
    const std::size_t most = remainder / lo;
    const std::size_t fewest = hi == unbounded ? 1 : (remainder + hi - 1) / hi;
    return most >= 1 && fewest <= most;
}

bool CompositionStream::fill_from(std::size_t position, std::size_t remainder) {
    parts_.resize(position);
    while (count_ ? parts_.size() < *count_ : remainder > 0) {
        const std::size_t slots_after = count_ ? *count_ - parts_.size() - 1 : 0;
        const std::size_t top = std::min(range_.hi, remainder);
        bool placed = false;
        for (std::size_t v = range_.lo; v <= top; ++v) {
            if (completable(remainder - v, slots_after)) {
                parts_.push_back(v);
                remainder -= v;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return remainder == 0;
}

bool CompositionStream::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (!completable(n_, count_.value_or(0)) || !fill_from(0, n_) || (!count_ && n_ == 0)) {
            done_ = true;
            return false;
        }
        return true;
    }
    std::size_t prefix = 0;
    for (std::size_t p : parts_) prefix += p;
    for (std::size_t i = parts_.size(); i-- > 0;) {
        prefix -= parts_[i];
        const std::size_t remainder = n_ - prefix;
        const std::size_t slots_after = count_ ? *count_ - i - 1 : 0;
        const std::size_t top = std::min(range_.hi, remainder);
        for (std::size_t v = parts_[i] + 1; v <= top; ++v) {
            if (completable(remainder - v, slots_after)) {
                parts_.resize(i);
                parts_.push_back(v);
                if (fill_from(i + 1, remainder - v)) return true;
            }
        }
    }
    done_ = true;
    return false;
}

std::size_t count_compositions(std::size_t n, PartRange range, std::optional<std::size_t> parts_count) {
    CompositionStream s(n, range, parts_count);
    std::size_t count = 0;
    while (s.next()) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Integer scaling shared by the weighted kernels

namespace {

using Int128 = __int128;

/// Weights rescaled to integers: w_i = y_i / L^i.
struct ScaledWeights {
    std::vector<BigInt> y;            // indexed by part size, 0..n_max
    std::vector<std::size_t> parts;   // sizes in range with nonzero weight, ascending
    BigInt common;                    // L
};

ScaledWeights scale_weights(const CoefficientSequence& w, PartRange range, std::size_t n_max) {
    ScaledWeights out;
    out.y.assign(n_max + 1, BigInt(0));
    out.common = 1;
    for (std::size_t i = std::max<std::size_t>(range.lo, 1); i <= n_max && i <= range.hi; ++i) {
        const Rational v = w.get_or_zero(i);
        if (v.is_zero()) continue;
        out.parts.push_back(i);
        mpz_lcm(out.common.get_mpz_t(), out.common.get_mpz_t(), v.denominator().get_mpz_t());
    }
    for (std::size_t i : out.parts) {
        const Rational v = w.get_or_zero(i);
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), out.common.get_mpz_t(), i);
        out.y[i] = v.numerator() * (scale / v.denominator());
    }
    return out;
}

BigInt common_power(const ScaledWeights& sw, std::size_t s) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), sw.common.get_mpz_t(), s);
    return r;
}

/// True when every partial product and every bucket of the walk fits in a
/// signed 128-bit integer: |prod| < 2^(sum of bit lengths) and a bucket at
/// sum s adds at most 2^(s-1) products.
bool fits_int128(const ScaledWeights& sw, std::size_t n_max) {
    std::vector<long> max_bits(n_max + 1, -1);
    max_bits[0] = 0;
    for (std::size_t s = 1; s <= n_max; ++s) {
        for (std::size_t p : sw.parts) {
            if (p > s) break;
            if (max_bits[s - p] < 0) continue;
            const long bits = max_bits[s - p] + static_cast<long>(mpz_sizeinbase(sw.y[p].get_mpz_t(), 2));
            max_bits[s] = std::max(max_bits[s], bits);
        }
        if (max_bits[s] >= 0 && max_bits[s] + static_cast<long>(s) > 125) return false;
    }
    return true;
}

Int128 to_int128(const BigInt& v) {
    BigInt mag = abs(v);
    const BigInt low = mag & BigInt("18446744073709551615");
    const BigInt high = mag >> 64;
    const auto lo = static_cast<unsigned long long>(mpz_get_ui(low.get_mpz_t()));
    const auto hi = static_cast<unsigned long long>(mpz_get_ui(high.get_mpz_t()));
    const auto u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    const auto r = static_cast<Int128>(u);
    return sgn(v) < 0 ? -r : r;
}

BigInt to_bigint(Int128 v) {
    const bool negative = v < 0;
    const auto u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r(static_cast<unsigned long>(static_cast<unsigned long long>(u >> 64)));
    r <<= 64;
    r += BigInt(static_cast<unsigned long>(static_cast<unsigned long long>(u)));
    return negative ? BigInt(-r) : r;
}

template <class Int>
struct Walker {
    const std::vector<Int>& y;
    const std::vector<std::size_t>& parts;
    std::size_t n_max;
    std::vector<Int>& acc;  // (n_max+1) x (n_max+1), row = sum, column = part count

    void walk(std::size_t sum, std::size_t k, const Int& prod) {
        for (std::size_t p : parts) {
            const std::size_t s = sum + p;
            if (s > n_max) break;
            Int next = prod * y[p];
            acc[s * (n_max + 1) + k + 1] += next;
            walk(s, k + 1, next);
        }
    }
};

template <class Int>
std::vector<Int> walk_all(const std::vector<Int>& y, const std::vector<std::size_t>& parts, std::size_t n_max,
                          Execution exec) {
    const std::size_t cells = (n_max + 1) * (n_max + 1);
    std::vector<Int> total(cells, Int(0));
    total[0] = 1;
    const long roots = static_cast<long>(parts.size());

#pragma omp parallel if (exec == Execution::parallel)
    {
        std::vector<Int> local(cells, Int(0));
        Walker<Int> walker{y, parts, n_max, local};
#pragma omp for schedule(dynamic)
        for (long r = 0; r < roots; ++r) {
            const std::size_t p = parts[static_cast<std::size_t>(r)];
            if (p > n_max) continue;
            local[p * (n_max + 1) + 1] += y[p];
            walker.walk(p, 1, y[p]);
        }
#pragma omp critical(cameron_walk_merge)
        for (std::size_t i = 0; i < cells; ++i) total[i] += local[i];
    }
    return total;
}

}  // namespace

CompositionTable::CompositionTable(std::size_t n_max, std::vector<Rational> cells)
    : n_max_(n_max), cells_(std::move(cells)) {
    if (cells_.size() != (n_max + 1) * (n_max + 1)) throw std::invalid_argument("composition table shape");
}

Rational CompositionTable::total(std::size_t s) const {
    Rational r;
    for (std::size_t k = 0; k <= s; ++k) r += cell(s, k);
    return r;
}

Rational CompositionTable::alternating(std::size_t s) const {
    Rational r;
    for (std::size_t k = 0; k <= s; ++k) {
        if (k % 2 == 0) r += cell(s, k);
        else r -= cell(s, k);
    }
    return r;
}

CompositionTable composition_table(const CoefficientSequence& w, PartRange range, std::size_t n_max, Execution exec) {
    const ScaledWeights sw = scale_weights(w, range, n_max);
    const std::size_t stride = n_max + 1;
    std::vector<BigInt> sums;
    if (fits_int128(sw, n_max)) {
        std::vector<Int128> y(n_max + 1, 0);
        for (std::size_t p : sw.parts) y[p] = to_int128(sw.y[p]);
        const auto raw = walk_all<Int128>(y, sw.parts, n_max, exec);
        sums.reserve(raw.size());
        for (Int128 v : raw) sums.push_back(to_bigint(v));
    } else {
        sums = walk_all<BigInt>(sw.y, sw.parts, n_max, exec);
    }

    std::vector<Rational> cells(stride * stride);
    for (std::size_t s = 0; s <= n_max; ++s) {
        const BigInt scale = common_power(sw, s);
        for (std::size_t k = 0; k <= s; ++k) {
            if (sums[s * stride + k] != 0) cells[s * stride + k] = Rational(sums[s * stride + k], scale);
        }
    }
    return {n_max, std::move(cells)};
}

// ---------------------------------------------------------------------------
// Exponent vectors

namespace {

void exponent_rec(const std::vector<std::size_t>& sizes, std::size_t idx, std::size_t remaining,
                  std::vector<unsigned>& t, const std::function<void(std::span<const unsigned>)>& fn) {
    if (remaining == 0) {
        fn(t);
        return;
    }
    if (idx == sizes.size()) return;
    const std::size_t part = sizes[idx];  // descending
    if (idx + 1 == sizes.size()) {
        if (remaining % part == 0) {
            t[part] = static_cast<unsigned>(remaining / part);
            fn(t);
            t[part] = 0;
        }
        return;
    }
    for (std::size_t c = remaining / part + 1; c-- > 0;) {
        t[part] = static_cast<unsigned>(c);
        exponent_rec(sizes, idx + 1, remaining - c * part, t, fn);
    }
    t[part] = 0;
}

}  // namespace

void for_each_exponent_vector(std::size_t n, PartRange range, const std::function<void(std::span<const unsigned>)>& fn) {
    std::vector<std::size_t> sizes;
    for (std::size_t j = std::min(n, range.hi); j >= std::max<std::size_t>(range.lo, 1); --j) {
        sizes.push_back(j);
        if (j == 1) break;
    }
    std::vector<unsigned> t(n + 1, 0);
    if (n == 0) {
        fn(t);
        return;
    }
    exponent_rec(sizes, 0, n, t, fn);
}

std::vector<Rational> trudi_buckets(const CoefficientSequence& w, PartRange range, std::size_t n) {
    const ScaledWeights sw = scale_weights(w, range, n);
    std::vector<BigInt> sums(n + 1, BigInt(0));
    // Parts with zero weight contribute nothing; restrict the enumeration to the rest.
    std::vector<std::size_t> sizes(sw.parts.rbegin(), sw.parts.rend());
    std::vector<unsigned> t(n + 1, 0);
    BigInt term;
    BigInt power;
    const std::function<void(std::span<const unsigned>)> add = [&](std::span<const unsigned> tv) {
        unsigned k = 0;
        std::vector<unsigned> nonzero;
        term = 1;
        for (std::size_t j = 1; j < tv.size(); ++j) {
            if (tv[j] == 0) continue;
            k += tv[j];
            nonzero.push_back(tv[j]);
            mpz_pow_ui(power.get_mpz_t(), sw.y[j].get_mpz_t(), tv[j]);
            term *= power;
        }
        sums[k] += multinomial(nonzero) * term;
    };
    if (n == 0) {
        sums[0] = 1;
    } else if (!sizes.empty()) {
        exponent_rec(sizes, 0, n, t, add);
    }
    std::vector<Rational> out(n + 1);
    const BigInt scale = common_power(sw, n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (sums[k] != 0) out[k] = Rational(sums[k], scale);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The sums

namespace {

void require_restricted_seed(const CoefficientSequence& x, std::size_t m) {
    if (x.first_index() != 1) throw std::invalid_argument("restricted seed must start at x_1");
    if (m == 0) throw std::invalid_argument("restricted mode needs m >= 1");
}

void require_associated_seed(const CoefficientSequence& x) {
    if (x.first_index() == 0) throw std::invalid_argument("associated seed must start at x_m with m >= 1");
}

Rational sum_all(const std::vector<Rational>& buckets) {
    Rational r;
    for (const auto& b : buckets) r += b;
    return r;
}

}  // namespace

Rational composition_sum_restricted(const CoefficientSequence& x, std::size_t m, std::size_t n) {
    require_restricted_seed(x, m);
    return composition_table(x, {1, m}, n, Execution::serial).total(n);
}

Rational composition_sum_associated(const CoefficientSequence& x, std::size_t n) {
    require_associated_seed(x);
    if (n < x.first_index()) return 0;
    return composition_table(x, {x.first_index(), unbounded}, n, Execution::serial).total(n);
}

Rational trudi_restricted(const CoefficientSequence& x, std::size_t m, std::size_t n) {
    require_restricted_seed(x, m);
    return sum_all(trudi_buckets(x, {1, m}, n));
}

Rational trudi_associated(const CoefficientSequence& x, std::size_t n) {
    require_associated_seed(x);
    if (n < x.first_index()) return 0;
    return sum_all(trudi_buckets(x, {x.first_index(), unbounded}, n));
}

Rational inversion_sum(const CoefficientSequence& z, std::size_t n) {
    return -composition_table(z, {1, unbounded}, n, Execution::serial).alternating(n);
}

Rational inversion_sum_multinomial(const CoefficientSequence& z, std::size_t n) {
    const auto buckets = trudi_buckets(z, {1, unbounded}, n);
    Rational r;
    for (std::size_t k = 1; k < buckets.size(); ++k) {
        if (k % 2 == 1) r += buckets[k];
        else r -= buckets[k];
    }
    return r;
}

std::vector<Rational> weak_composition_sums(const CoefficientSequence& w, std::size_t n, PartRange positive) {
    positive.lo = std::max<std::size_t>(positive.lo, 1);
    const CompositionTable table = composition_table(w, positive, n, Execution::serial);
    std::vector<Rational> weak(n + 1);
    if (n == 0) weak[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
            const Rational& c = table.cell(n, j);
            if (!c.is_zero()) weak[k] += Rational(binomial(static_cast<unsigned>(k), static_cast<long>(j))) * c;
        }
    }
    return weak;
}

Rational binomial_expansion_sum(const CoefficientSequence& x, std::size_t n, PartRange positive) {
    if (x.first_index() != 0) throw std::invalid_argument("binomial expansion needs x starting at x_0 = 1");
    const auto weak = weak_composition_sums(x, n, positive);
    Rational z;
    for (std::size_t k = 1; k <= n; ++k) {
        if (weak[k].is_zero()) continue;
        const Rational term = Rational(binomial(static_cast<unsigned>(n + 1), static_cast<long>(k + 1))) * weak[k];
        if (k % 2 == 0) z += term;
        else z -= term;
    }
    return z;
}

std::vector<Rational> composition_column(const CoefficientSequence& x, const OperatorMode& mode, std::size_t n_max,
                                         Execution exec) {
    PartRange range;
    if (mode.is_restricted()) {
        require_restricted_seed(x, mode.m());
        range = {1, mode.m()};
    } else {
        if (x.first_index() != mode.m()) throw std::invalid_argument("associated seed must start at x_m");
        range = {mode.m(), unbounded};
    }
    const CompositionTable table = composition_table(x, range, n_max, exec);
    std::vector<Rational> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(table.total(n));
    return out;
}

std::vector<Rational> inversion_column(const CoefficientSequence& z, std::size_t n_max, Execution exec) {
    const CompositionTable table = composition_table(z, {1, unbounded}, n_max, exec);
    std::vector<Rational> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(-table.alternating(n));
    return out;
}

int configure_workers_from_env() {
    if (const char* env = std::getenv("CAMERON_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) omp_set_num_threads(static_cast<int>(v));
    }
    return omp_get_max_threads();
}

}  // namespace cameron
