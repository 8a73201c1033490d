#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wordmeas/characters.hpp"
#include "wordmeas/complex.hpp"
#include "wordmeas/group.hpp"
#include "wordmeas/word.hpp"

namespace wordmeas {

struct MeasureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Count = unsigned __int128;

std::string count_to_string(Count value);
mpz_class count_to_mpz(Count value);

// Exact pushforward of the uniform measure on G^n under the word map:
// counts[g] = #{t in G^n : w(t) = g}, with total |G|^n.
struct WordDistribution {
    std::vector<Count> counts;
    int arity = 0;
    int group_order = 0;

    Count total() const;
    Count identity_count() const { return counts.empty() ? Count(0) : counts[0]; }
};

// Full enumeration of G^n.  Tuples are visited in mixed-radix order with
// the last coordinate fastest; prefix products of the word are cached and
// only recomputed from the first syllable touching a changed coordinate.
WordDistribution brute_force_distribution(const FiniteGroup& G, const Word& w,
                                          double budget = 1e8);

// gamma_G(w) = counts at the identity.
Count count_solutions(const FiniteGroup& G, const Word& w, double budget = 1e8);

// v_w(chi_i) = |G|^-n * sum_g counts[g] chi_i(g).
std::complex<double> word_indicator_bruteforce(const FiniteGroup& G, const CharacterTable& T,
                                               const Word& w, int irreducible,
                                               double budget = 1e8);
std::complex<double> indicator_from_distribution(const WordDistribution& d,
                                                 const CharacterTable& T, int irreducible);

// Closed-form v_w(chi) for a surface word: d^(kappa-1) when orientable,
// v(chi)^(2-kappa) d^(kappa-1) otherwise.
mpq_class surface_indicator(const CharacterTable& T, int irreducible, const SurfaceClass& s,
                            const FiniteGroup& G);

// D(g) = sum_i conj(chi_i(g)) * v_i, the density of mu_w against Haar;
// equals |G|^(1-n) counts[g] for the matching word.
std::complex<double> density_from_indicators(const CharacterTable& T,
                                             const std::vector<std::complex<double>>& indicators,
                                             int g);

// gamma_G(w) for a surface word via the zeta formula |G|^(n-1) sum d^kappa
// (with Frobenius-Schur factors in the non-orientable case); exact.
mpz_class count_via_zeta(const FiniteGroup& G, const CharacterTable& T, const Word& w);

// Multiplicative convolution: the distribution of the connected-sum word.
WordDistribution convolve(const WordDistribution& d1, const WordDistribution& d2,
                          const FiniteGroup& G);

// gamma_G([a,b]) / |G|^2; equal to (number of classes)/|G|.
mpq_class commuting_probability(const FiniteGroup& G);

}  // namespace wordmeas
