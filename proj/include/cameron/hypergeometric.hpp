#pragma once

/**
 * @file hypergeometric.hpp
 * @brief Modified restricted/associated hypergeometric Bernoulli, Cauchy and
 *        Euler numbers (two kinds).
 *
 * Every family is described by a scale xi_n and weights alpha_j (alpha_0 = 1):
 *
 *   family        xi_n             alpha_j                  N
 *   Bernoulli     (-1)^n n!        N!/(N+j)!                >= 1
 *   Cauchy        n!               N/(N+j)                  >= 1
 *   Euler         (-1)^n (2n)!     (2N)!/(2N+2j)!           >= 0
 *   EulerSecond   (-1)^n (2n)!     (2N+1)!/(2N+2j+1)!       >= 0
 *
 * and the number of order n is A_n = xi_n S_n with
 * S_n = [t^n] (sum_j alpha_j (-t)^j)^(-1), the sum running over j in {0} and
 * the mode's support (1..m restricted, m.. associated).
 *
 * Index convention: the engines work with an order n. For the two Euler
 * families the number produced at order n is the coefficient of x^(2n)/(2n)!,
 * so HyperNumber::index is 2n there; the odd coefficients are identically 0
 * and only appear in hyper_from_definition's output.
 *
 * The generating-function definition (hyper_from_definition) is the reference;
 * the other routes are checked against it.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "cameron/rational.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

enum class Family { bernoulli, cauchy, euler, euler_second };

std::string to_string(Family f);
/// Accepts bernoulli, cauchy, euler, euler-second (also euler2). Throws std::invalid_argument.
Family parse_family(const std::string& name);

class FamilySpec {
public:
    /// Throws std::invalid_argument when N is outside the family's range.
    FamilySpec(Family family, int order);

    Family family() const { return family_; }
    int order() const { return order_; }
    bool is_euler() const { return family_ == Family::euler || family_ == Family::euler_second; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    Family family_;
    int order_;
};

/// Reading of the restricted Euler-second-kind definition, whose denominator
/// is printed with upper limit m-1 while every other restricted family stops
/// at m. `as_printed` keeps m-1, `uniform` uses m.
enum class EulerSecondLimit { as_printed, uniform };

struct HyperOptions {
    EulerSecondLimit euler_second_limit = EulerSecondLimit::as_printed;
};

struct HyperNumber {
    Rational value;
    FamilySpec family;
    OperatorMode mode;
    std::size_t index;  // position in the generating function, x^index / index!
};

/// alpha_j; alpha_0 = 1.
Rational alpha(const FamilySpec& spec, std::size_t j);
Rational xi(const FamilySpec& spec, std::size_t n);

/// Largest alpha index in the restricted denominator: m, or m-1 for the
/// restricted Euler second kind read as printed. May be 0.
std::size_t restricted_bandwidth(const FamilySpec& spec, const OperatorMode& mode, const HyperOptions& opts = {});

/// Coefficient index of order n: n, or 2n for the Euler families.
std::size_t coefficient_index(const FamilySpec& spec, std::size_t n);

/// Seed alpha_j on the mode's support (restricted: 1..bandwidth, associated: m..n_max).
CoefficientSequence alpha_seed(const FamilySpec& spec, const OperatorMode& mode, std::size_t n_max,
                               const HyperOptions& opts = {});

/// Builds the denominator series in x exactly as written (rising factorials,
/// (-x)^n for Cauchy, even powers for Euler), inverts it and rescales
/// coefficient i by i!. Returns coefficients 0..max_index.
std::vector<HyperNumber> hyper_from_definition(const FamilySpec& spec, const OperatorMode& mode,
                                               std::size_t max_index, const HyperOptions& opts = {});

/// xi_n times the Hessenberg determinant with entry (i, j) = alpha_{i-j+1}
/// (banded to the restricted support, or shifted for the associated one).
/// n >= 1; associated needs n >= m (std::invalid_argument otherwise).
HyperNumber hyper_det(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts = {});

/// xi_n sum_k (-1)^(n-k) sum over compositions of n with parts in the support of alpha_{i_1}...alpha_{i_k}.
HyperNumber hyper_sum(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts = {});

/// xi_n sum_k (-1)^(n-k) C(n+1, k+1) sum over weak compositions (parts 0 or in
/// the support, alpha_0 = 1) of alpha_{i_1}...alpha_{i_k}.
HyperNumber hyper_binom_sum(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                            const HyperOptions& opts = {});

/// (-1)^n xi_n sum_t multinomial(t) (-1)^(|t|) prod alpha_j^(t_j), t over the support.
HyperNumber hyper_trudi(const FamilySpec& spec, const OperatorMode& mode, std::size_t n, const HyperOptions& opts = {});

/// xi_n z_n where z is the operator transform of the seed x_j = (-1)^(j-1) alpha_j.
HyperNumber hyper_recurrence(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                             const HyperOptions& opts = {});

/// Recovers alpha_n from A_1..A_n (taken from the definition) twice: as the
/// determinant with entries A_{i-j+1}/xi_{i-j+1}, and as
///   sum_t multinomial(t) (-1)^(n-|t|) prod (A_j/xi_j)^(t_j).
/// Throws std::logic_error if the two disagree. The result is alpha_n on the
/// mode's support and 0 off it.
Rational hyper_inversion_check(const FamilySpec& spec, const OperatorMode& mode, std::size_t n,
                               const HyperOptions& opts = {});

/// Closed expressions for the unmodified numbers (restricted m -> infinity, or
/// associated m = 1), written with factorials directly:
///   composition form:  coefficient n sum_k s(n,k) sum_{i >= 1} prod w_{i_j}
///   binomial form:     same with C(n+1, k+1) and parts >= 0
/// where the family-specific weights and signs are those of the classical
/// expansions. Used as an extra oracle at order n.
Rational unmodified_composition_formula(const FamilySpec& spec, std::size_t n);
Rational unmodified_binomial_formula(const FamilySpec& spec, std::size_t n);

}  // namespace cameron
