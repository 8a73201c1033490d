#include "wordmeas/measure.hpp"

#include <algorithm>
#include <cmath>

namespace wordmeas {

std::string count_to_string(Count value) {
    if (value == 0) return "0";
    std::string out;
    while (value > 0) {
        out += static_cast<char>('0' + static_cast<int>(value % 10));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

mpz_class count_to_mpz(Count value) {
    mpz_class high(static_cast<unsigned long>(value >> 64));
    mpz_class low(static_cast<unsigned long>(value & ~0ULL));
    return (high << 64) + low;
}

Count WordDistribution::total() const {
    Count sum = 0;
    for (Count c : counts) sum += c;
    return sum;
}

WordDistribution brute_force_distribution(const FiniteGroup& G, const Word& w, double budget) {
    const int n = w.arity();
    const int order = G.order();
    if (std::pow(static_cast<double>(order), n) > budget)
        throw MeasureError("enumeration budget exceeded: |G|^n too large");

    WordDistribution d;
    d.arity = n;
    d.group_order = order;
    d.counts.assign(order, 0);

    const auto& syl = w.syllables();
    const int length = static_cast<int>(syl.size());
    if (n == 0) {
        d.counts[evaluate(w, G, {})] = 1;
        return d;
    }

    // cut[c]: first syllable whose letter is >= c; prefixes before it are
    // unaffected when only coordinates >= c change.
    std::vector<int> cut(n + 1, length);
    for (int c = n; c-- > 0;) {
        cut[c] = cut[c + 1];
        for (int p = 0; p < cut[c]; ++p)
            if (syl[p].letter.index >= c) {
                cut[c] = p;
                break;
            }
    }

    std::vector<int> tuple(n, 0);
    std::vector<int> entry(length, 0);   // t[letter]^sign per syllable
    std::vector<int> prefix(length + 1, 0);  // prefix[p] = product of syllables [0, p)

    auto refresh = [&](int from_coord) {
        for (int p = 0; p < length; ++p) {
            if (syl[p].letter.index < from_coord) continue;
            int g = tuple[syl[p].letter.index];
            entry[p] = syl[p].sign > 0 ? g : G.inv(g);
        }
        for (int p = cut[from_coord]; p < length; ++p) prefix[p + 1] = G.mul(prefix[p], entry[p]);
    };

    refresh(0);
    while (true) {
        ++d.counts[prefix[length]];
        int c = n - 1;
        while (c >= 0 && ++tuple[c] == order) tuple[c--] = 0;
        if (c < 0) break;
        refresh(c);
    }
    return d;
}

Count count_solutions(const FiniteGroup& G, const Word& w, double budget) {
    return brute_force_distribution(G, w, budget).identity_count();
}

std::complex<double> indicator_from_distribution(const WordDistribution& d, const CharacterTable& T,
                                                 int irreducible) {
    if (T.classes.class_of.empty()) throw MeasureError("character table is not attached to a group");
    std::complex<double> sum = 0.0;
    for (int g = 0; g < d.group_order; ++g)
        if (d.counts[g])
            sum += static_cast<double>(count_to_mpz(d.counts[g]).get_d()) *
                   T.values[irreducible][T.classes.class_of[g]];
    return sum / std::pow(static_cast<double>(d.group_order), d.arity);
}

std::complex<double> word_indicator_bruteforce(const FiniteGroup& G, const CharacterTable& T,
                                               const Word& w, int irreducible, double budget) {
    return indicator_from_distribution(brute_force_distribution(G, w, budget), T, irreducible);
}

mpq_class surface_indicator(const CharacterTable& T, int irreducible, const SurfaceClass& s,
                            const FiniteGroup& G) {
    const int kappa = s.euler_characteristic;
    const mpz_class d(T.degrees[irreducible]);
    mpq_class power;  // d^(kappa - 1)
    if (kappa >= 1) {
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(kappa - 1));
        power = num;
    } else {
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(1 - kappa));
        power = mpq_class(1, 1) / mpq_class(den);
    }
    if (s.orientable) return power;
    int fs = fs_indicator(T, irreducible, G);
    // fs^(2 - kappa) with 2 - kappa >= 1
    int factor = (fs == 0) ? 0 : ((fs == 1 || (2 - kappa) % 2 == 0) ? 1 : -1);
    return factor * power;
}

std::complex<double> density_from_indicators(const CharacterTable& T,
                                             const std::vector<std::complex<double>>& indicators,
                                             int g) {
    if (static_cast<int>(indicators.size()) != T.irreducible_count())
        throw MeasureError("one indicator per irreducible required");
    if (T.classes.class_of.empty()) throw MeasureError("character table is not attached to a group");
    std::complex<double> sum = 0.0;
    for (int i = 0; i < T.irreducible_count(); ++i)
        sum += std::conj(T.values[i][T.classes.class_of[g]]) * indicators[i];
    return sum;
}

mpz_class count_via_zeta(const FiniteGroup& G, const CharacterTable& T, const Word& w) {
    if (!is_closed_surface(w)) throw MeasureError("not a surface word: zeta counting does not apply");
    SurfaceClass s = classify_surface(w);
    mpq_class sum = 0;
    for (int i = 0; i < T.irreducible_count(); ++i) {
        mpq_class v = surface_indicator(T, i, s, G);
        sum += v * T.degrees[i];  // v_w(chi) * d = contribution of chi to the density at 1
    }
    mpz_class scale;  // |G|^(n-1)
    mpz_class order(G.order());
    const int n = w.arity();
    mpq_class result;
    if (n >= 1) {
        mpz_pow_ui(scale.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(n - 1));
        result = sum * scale;
    } else {
        result = sum / order;
    }
    result.canonicalize();
    if (result.get_den() != 1)
        throw MeasureError("zeta-side count is not an integer; character table is inconsistent");
    return result.get_num();
}

WordDistribution convolve(const WordDistribution& d1, const WordDistribution& d2,
                          const FiniteGroup& G) {
    if (d1.group_order != d2.group_order || d1.group_order != G.order())
        throw MeasureError("convolution requires distributions over the same group");
    WordDistribution out;
    out.arity = d1.arity + d2.arity;
    out.group_order = G.order();
    out.counts.assign(G.order(), 0);
    for (int a = 0; a < G.order(); ++a) {
        if (d1.counts[a] == 0) continue;
        for (int b = 0; b < G.order(); ++b)
            if (d2.counts[b]) out.counts[G.mul(a, b)] += d1.counts[a] * d2.counts[b];
    }
    return out;
}

mpq_class commuting_probability(const FiniteGroup& G) {
    Count gamma = count_solutions(G, parse_word("[a,b]"));
    mpq_class p(count_to_mpz(gamma), mpz_class(G.order()) * G.order());
    p.canonicalize();
    return p;
}

}  // namespace wordmeas
