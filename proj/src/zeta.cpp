#include "wordmeas/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace wordmeas {

mpq_class zeta_finite(const DegreeMultiset& degrees, long s) {
    if (degrees.empty()) throw ZetaError("empty degree multiset");
    mpq_class sum = 0;
    for (int d : degrees) {
        if (d < 1) throw ZetaError("degrees must be positive");
        mpz_class power;
        mpz_class base(d);
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::labs(s)));
        sum += s >= 0 ? mpq_class(1, 1) / mpq_class(power) : mpq_class(power);
    }
    sum.canonicalize();
    return sum;
}

double zeta_finite_real(const DegreeMultiset& degrees, double s) {
    if (degrees.empty()) throw ZetaError("empty degree multiset");
    double sum = 0.0;
    for (int d : degrees) sum += std::pow(static_cast<double>(d), -s);
    return sum;
}

double riemann_zeta(double s) {
    if (s <= 1.0) throw ZetaError("riemann_zeta requires s > 1");
    // Borwein's acceleration of the alternating eta series:
    //   zeta(s) = -1 / (d_n (1 - 2^(1-s))) * sum_{k<n} (-1)^k (d_k - d_n) / (k+1)^s
    // with error below 3 / (3 + sqrt(8))^n.
    const int n = 40;
    std::vector<double> d(n + 1);
    double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i - 1.0) * (2.0 * i));
        acc += term;
        d[i] = n * acc;
    }
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double piece = (d[k] - d[n]) / std::pow(k + 1.0, s);
        sum += (k % 2 == 0) ? piece : -piece;
    }
    return -sum / (d[n] * (1.0 - std::pow(2.0, 1.0 - s)));
}

double so3_zeta(double s) {
    if (s <= 1.0) throw ZetaError("zeta_SO(3) diverges for s <= 1");
    return (1.0 - std::pow(2.0, -s)) * riemann_zeta(s);
}

GroupStats group_stats(const DegreeMultiset& degrees, long order) {
    if (degrees.empty()) throw ZetaError("empty degree multiset");
    GroupStats st;
    st.num_classes = static_cast<long>(degrees.size());
    st.max_dim = *std::max_element(degrees.begin(), degrees.end());
    for (int d : degrees) {
        if (d == 1) ++st.derived_index;
        if (d == st.max_dim) ++st.max_dim_count;
    }
    st.avg_class_size = mpq_class(order, st.num_classes);
    st.avg_class_size.canonicalize();
    return st;
}

}  // namespace wordmeas
