#pragma once

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace wordmeas {

struct ZetaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiset of irreducible representation dimensions of a group.
using DegreeMultiset = std::vector<int>;

// zeta_G(s) = sum over degrees of d^-s, exact for integer s.
mpq_class zeta_finite(const DegreeMultiset& degrees, long s);
double zeta_finite_real(const DegreeMultiset& degrees, double s);

// Riemann zeta for real s > 1 via the alternating (eta) series with
// Borwein's Chebyshev acceleration; absolute error well below 1e-12.
double riemann_zeta(double s);

// zeta_SO(3)(s) = (1 - 2^-s) zeta(s): one irreducible per odd dimension.
double so3_zeta(double s);

// The abelianness statistics read off the degree multiset: each one is the
// exact combinatorial value of a limit of the Witten zeta function.
struct GroupStats {
    long derived_index = 0;       // number of degree-1 irreducibles
    mpq_class avg_class_size;     // |G| / zeta(0)
    int max_dim = 0;
    long max_dim_count = 0;
    long num_classes = 0;
};

GroupStats group_stats(const DegreeMultiset& degrees, long order);

}  // namespace wordmeas
