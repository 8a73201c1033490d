#include "wordmeas/divisibility.hpp"

#include "wordmeas/complex.hpp"
#include "wordmeas/measure.hpp"

namespace wordmeas {

PowerSumResult power_sums_integral(const std::vector<mpq_class>& values, long k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    std::vector<mpq_class> powers(values);
    PowerSumResult result;
    for (long k = 1; k <= k_max; ++k) {
        mpq_class sum = 0;
        for (auto& p : powers) sum += p;
        sum.canonicalize();
        if (sum.get_den() != 1) {
            result.all_integral = false;
            result.first_failing_k = k;
            return result;
        }
        if (k < k_max)
            for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= values[i];
    }
    return result;
}

namespace {

// Euler's totient of p^e.
mpz_class totient_prime_power(const mpz_class& p, unsigned long e) {
    mpz_class high, low;
    mpz_pow_ui(high.get_mpz_t(), p.get_mpz_t(), e);
    mpz_pow_ui(low.get_mpz_t(), p.get_mpz_t(), e - 1);
    return high - low;
}

}  // namespace

IntegralityCertificate certified_integrality(const std::vector<mpq_class>& values) {
    IntegralityCertificate cert;
    mpz_class common_denominator = 1;
    for (const auto& q : values) {
        mpq_class canonical = q;
        canonical.canonicalize();
        if (canonical.get_den() != 1) cert.all_integer = false;
        mpz_class den = canonical.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), common_denominator.get_mpz_t(), den.get_mpz_t());
        common_denominator = common_denominator / g * den;
    }
    if (cert.all_integer) return cert;

    // Bound: for each prime p of the cleared denominator, the totient
    // exponent phi(p^n) (n = multiset size) forces a non-integral power sum.
    const unsigned long n = values.size();
    mpz_class remaining = common_denominator;
    mpz_class bound = 0;
    for (mpz_class p = 2; remaining > 1; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (remaining % p != 0) continue;
        while (remaining % p == 0) remaining /= p;
        mpz_class candidate = totient_prime_power(p, n);
        if (candidate > bound) bound = candidate;
    }
    cert.witness_bound = bound.get_si();

    PowerSumResult ps = power_sums_integral(values, cert.witness_bound);
    if (ps.all_integral)
        throw std::logic_error("power sums integral up to the certified bound for non-integer input");
    cert.witness_k = ps.first_failing_k;
    return cert;
}

bool verify_dim_divides_order(const FiniteGroup& G, const CharacterTable& T) {
    validate_table(T);
    const mpz_class order(G.order());
    std::vector<mpz_class> ratios;  // r_i = |G|^2 / d_i^2
    for (int d : T.degrees) {
        if (G.order() % d != 0) return false;
        mpq_class r(order * order, mpz_class(d) * d);
        r.canonicalize();
        if (r.get_den() != 1) return false;
        ratios.push_back(r.get_num());
    }
    // gamma_G(genus-(k+1) word) = |G| * sum_i r_i^k, both sides exact.
    for (long k = 1; k <= 5; ++k) {
        mpz_class rhs = 0;
        for (const auto& r : ratios) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
            rhs += power;
        }
        rhs *= order;
        SurfaceClass genus_surface{true, 2 - 2 * static_cast<int>(k + 1), static_cast<int>(k + 1)};
        mpz_class lhs = count_via_zeta(G, T, canonical_surface_word(genus_surface));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace wordmeas
