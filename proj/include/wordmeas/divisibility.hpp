#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wordmeas/characters.hpp"
#include "wordmeas/group.hpp"

namespace wordmeas {

// Exact check of sum_i q_i^k in Z for k = 1..k_max.
struct PowerSumResult {
    bool all_integral = true;
    std::optional<long> first_failing_k;
};

PowerSumResult power_sums_integral(const std::vector<mpq_class>& values, long k_max);

// Ground-truth integrality by denominator inspection, together with the
// exponent bound from the totient argument: if any q_i is not an integer,
// the power sum already fails at some k <= phi(p^n) for a prime p of the
// cleared denominator.
struct IntegralityCertificate {
    bool all_integer = true;
    long witness_bound = 0;            // 0 when all integer
    std::optional<long> witness_k;     // a failing k <= witness_bound, when not all integer
};

IntegralityCertificate certified_integrality(const std::vector<mpq_class>& values);

// dim rho | |G| for every irreducible, replayed through the counting
// argument: for k = 1..5, |G| * sum_i r_i^k with r_i = |G|^2 / d_i^2 must
// equal the zeta-side solution count of the genus-(k+1) word.
bool verify_dim_divides_order(const FiniteGroup& G, const CharacterTable& T);

}  // namespace wordmeas
