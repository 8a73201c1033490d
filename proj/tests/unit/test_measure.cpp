#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <utility>

#include "wordmeas/measure.hpp"

using namespace wordmeas;
using Complex = std::complex<double>;

TEST_CASE("brute force distribution on headline examples") {
    FiniteGroup q8 = preset("Q8");
    WordDistribution d = brute_force_distribution(q8, parse_word("[a,b]"));
    CHECK(d.arity == 2);
    CHECK(d.group_order == 8);
    CHECK(d.identity_count() == Count(40));
    CHECK(d.counts[4] == Count(24));  // the central element -1
    for (int g : {1, 2, 3, 5, 6, 7}) CHECK(d.counts[g] == Count(0));
    CHECK(d.total() == Count(64));

    FiniteGroup s3 = preset("S3");
    CHECK(count_solutions(s3, parse_word("[a,b]")) == Count(18));
}

TEST_CASE("degenerate words") {
    FiniteGroup q8 = preset("Q8");

    // empty word: point mass |G|^0 = 1 at the identity
    WordDistribution empty = brute_force_distribution(q8, parse_word(""));
    CHECK(empty.identity_count() == Count(1));
    CHECK(empty.total() == Count(1));

    // a single letter pushes Haar forward to Haar
    WordDistribution single = brute_force_distribution(q8, parse_word("a"));
    for (int g = 0; g < 8; ++g) CHECK(single.counts[g] == Count(1));

    CHECK_THROWS_AS(brute_force_distribution(q8, parse_word("abcdefghij")), MeasureError);
}

TEST_CASE("indicators on Q8") {
    FiniteGroup q8 = preset("Q8");
    CharacterTable T = compute_character_table(q8);
    Word torus = parse_word("[a,b]");

    // trivial character always gives 1
    CHECK(std::abs(word_indicator_bruteforce(q8, T, torus, 0) - Complex(1.0)) < 1e-12);
    // the 2-dimensional character gives d^(kappa-1) = 2^-1
    CHECK(std::abs(word_indicator_bruteforce(q8, T, torus, 4) - Complex(0.5)) < 1e-12);
    // for w = aa the indicator is the Frobenius-Schur indicator
    Word crosscap = parse_word("aa");
    for (int i = 0; i < 5; ++i) {
        Complex v = word_indicator_bruteforce(q8, T, crosscap, i);
        CHECK(std::abs(v - Complex(fs_indicator(T, i, q8))) < 1e-12);
    }
}

TEST_CASE("surface indicator closed form matches enumeration") {
    std::vector<std::string> words{"aa'", "aa", "[a,b]", "abab", "aabb", "abca'b'c'"};
    for (const auto& name : {"Q8", "S3", "C2xC2", "D4", "A4"}) {
        FiniteGroup G = preset(name);
        CharacterTable T = compute_character_table(G);
        for (const auto& text : words) {
            CAPTURE(name);
            CAPTURE(text);
            Word w = parse_word(text);
            SurfaceClass s = classify_surface(w);
            for (int i = 0; i < T.irreducible_count(); ++i) {
                Complex brute = word_indicator_bruteforce(G, T, w, i);
                CHECK(std::abs(brute - Complex(surface_indicator(T, i, s, G).get_d())) < 1e-8);
            }
        }
    }
}

TEST_CASE("density recovers normalized counts") {
    FiniteGroup q8 = preset("Q8");
    CharacterTable T = compute_character_table(q8);
    Word torus = parse_word("[a,b]");
    WordDistribution d = brute_force_distribution(q8, torus);

    std::vector<Complex> v;
    for (int i = 0; i < 5; ++i) v.push_back(indicator_from_distribution(d, T, i));

    // D(g) = |G|^(1-n) counts[g]: 40/8 = 5 at 1 and 24/8 = 3 at -1
    CHECK(std::abs(density_from_indicators(T, v, 0) - Complex(5.0)) < 1e-10);
    CHECK(std::abs(density_from_indicators(T, v, 4) - Complex(3.0)) < 1e-10);
    for (int g = 0; g < 8; ++g) {
        Complex expected(static_cast<double>(static_cast<long>(d.counts[g])) / 8.0);
        CHECK(std::abs(density_from_indicators(T, v, g) - expected) < 1e-10);
    }
}

TEST_CASE("zeta-formula counts") {
    FiniteGroup q8 = preset("Q8");
    CharacterTable T = compute_character_table(q8);
    CHECK(count_via_zeta(q8, T, parse_word("[a,b]")) == 40);
    CHECK(count_via_zeta(q8, T, parse_word("aa")) == 2);
    CHECK(count_via_zeta(q8, T, parse_word("[a,b][c,d][e,f]")) == 133120);
    CHECK_THROWS_AS(count_via_zeta(q8, T, parse_word("ab")), MeasureError);
}

TEST_CASE("convolution is the connected-sum distribution") {
    FiniteGroup q8 = preset("Q8");
    Word torus = parse_word("[a,b]");
    WordDistribution once = brute_force_distribution(q8, torus);
    WordDistribution twice = convolve(once, once, q8);
    WordDistribution genus2 = brute_force_distribution(q8, connected_sum(torus, torus));
    REQUIRE(twice.counts.size() == genus2.counts.size());
    for (int g = 0; g < 8; ++g) CHECK(twice.counts[g] == genus2.counts[g]);

    // identity point mass is the convolution unit
    WordDistribution unit = brute_force_distribution(q8, parse_word(""));
    WordDistribution same = convolve(once, unit, q8);
    for (int g = 0; g < 8; ++g) CHECK(same.counts[g] == once.counts[g]);

    // convolving with Haar gives Haar
    WordDistribution haar = brute_force_distribution(q8, parse_word("a"));
    WordDistribution flat = convolve(once, haar, q8);
    for (int g = 0; g < 8; ++g) CHECK(flat.counts[g] == Count(64));
}

TEST_CASE("commuting probability") {
    CHECK(commuting_probability(preset("Q8")) == mpq_class(5, 8));
    CHECK(commuting_probability(preset("C6")) == 1);
    CHECK(commuting_probability(preset("S3")) == mpq_class(1, 2));
    for (const auto& name : preset_names()) {
        FiniteGroup G = preset(name);
        mpq_class p = commuting_probability(G);
        mpq_class classes(conjugacy_classes(G).count(), G.order());
        classes.canonicalize();
        CHECK(p == classes);
    }
}

TEST_CASE("word measures are class functions") {
    FiniteGroup s4 = preset("S4");
    WordDistribution d = brute_force_distribution(s4, parse_word("[a,b]"));
    ConjugacyClasses cc = conjugacy_classes(s4);
    for (int g = 0; g < 24; ++g)
        CHECK(d.counts[g] == d.counts[cc.representatives[cc.class_of[g]]]);
}

TEST_CASE("counts decompose against the character basis") {
    // counts[g] = |G|^(n-1) sum_i conj(chi_i(g)) v_i for every group element
    for (const auto& name : {"Q8", "S3", "A4"}) {
        FiniteGroup G = preset(name);
        CharacterTable T = compute_character_table(G);
        Word w = parse_word("aabab'");
        WordDistribution d = brute_force_distribution(G, w);
        std::vector<Complex> v;
        for (int i = 0; i < T.irreducible_count(); ++i)
            v.push_back(indicator_from_distribution(d, T, i));
        double scale = std::pow(G.order(), w.arity() - 1);
        for (int g = 0; g < G.order(); ++g) {
            Complex lhs(static_cast<double>(static_cast<long>(d.counts[g])));
            CHECK(std::abs(lhs - scale * density_from_indicators(T, v, g)) < 1e-6);
        }
    }
}

TEST_CASE("nielsen moves preserve the distribution") {
    std::mt19937 rng(2026);
    FiniteGroup q8 = preset("Q8");
    FiniteGroup s3 = preset("S3");
    for (int trial = 0; trial < 30; ++trial) {
        // random word of arity 3, length up to 8
        std::vector<SignedLetter> syll;
        int len = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i)
            syll.push_back({Letter{static_cast<int>(rng() % 3)}, rng() % 2 == 0 ? +1 : -1});
        Word w(std::move(syll), 3);

        NielsenMove move;
        switch (rng() % 3) {
            case 0: {
                std::vector<int> perm{0, 1, 2};
                std::shuffle(perm.begin(), perm.end(), rng);
                move = NielsenMove::permute(perm);
                break;
            }
            case 1:
                move = NielsenMove::invert(static_cast<int>(rng() % 3));
                break;
            default: {
                int i = static_cast<int>(rng() % 3);
                int j = static_cast<int>((i + 1 + rng() % 2) % 3);
                move = NielsenMove::shear(i, j);
            }
        }
        Word moved = apply_nielsen(w, move);

        for (const FiniteGroup* G : {&q8, &s3}) {
            WordDistribution before = brute_force_distribution(*G, w);
            WordDistribution after = brute_force_distribution(*G, moved);
            for (int g = 0; g < G->order(); ++g) CHECK(before.counts[g] == after.counts[g]);
        }
    }
}

TEST_CASE("homeomorphic surface words induce the same measure") {
    std::vector<std::pair<std::string, std::string>> pairs{
        {"abab'", "aabb"},
        {"[a,b]", "abca'b'c'"},
        {"aa'", "bb'"},
        {"abab", "aa"},
    };
    for (const auto& name : {"Q8", "S3", "D4", "C2xC2"}) {
        FiniteGroup G = preset(name);
        for (const auto& [u, v] : pairs) {
            CAPTURE(name);
            CAPTURE(u);
            CAPTURE(v);
            Word wu = parse_word(u);
            Word wv = parse_word(v);
            REQUIRE(same_surface_class(wu, wv));
            WordDistribution du = brute_force_distribution(G, wu);
            WordDistribution dv = brute_force_distribution(G, wv);
            // normalize: measures share |G|^(n-1) scaling only after dividing totals
            mpz_class tu = count_to_mpz(du.total());
            mpz_class tv = count_to_mpz(dv.total());
            for (int g = 0; g < G.order(); ++g) {
                mpq_class mu(count_to_mpz(du.counts[g]));
                mu /= tu;
                mpq_class mv(count_to_mpz(dv.counts[g]));
                mv /= tv;
                CHECK(mu == mv);
            }
        }
    }
}
