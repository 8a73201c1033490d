#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "wordmeas/characters.hpp"

using namespace wordmeas;
using Complex = std::complex<double>;

namespace {

// Hand-built S3 table in the class order (identity, transpositions or
// 3-cycles by minimal representative).  Used only to cross-check the
// eigenvector computation.
struct S3Fixture {
    std::vector<int> degrees{1, 1, 2};
    // columns follow conjugacy_classes(preset("S3")) class order
    std::vector<std::vector<double>> values;
};

S3Fixture s3_fixture(const FiniteGroup& S3) {
    ConjugacyClasses cc = conjugacy_classes(S3);
    REQUIRE(cc.count() == 3);
    S3Fixture fx;
    for (int row = 0; row < 3; ++row) fx.values.emplace_back(3);
    for (int l = 0; l < 3; ++l) {
        int size = cc.sizes[l];
        // identity class: sizes 1; transpositions: 3; 3-cycles: 2
        fx.values[0][l] = 1.0;                                    // trivial
        fx.values[1][l] = (size == 3) ? -1.0 : 1.0;               // sign
        fx.values[2][l] = (size == 1) ? 2.0 : (size == 2 ? -1.0 : 0.0);  // standard
    }
    return fx;
}

}  // namespace

TEST_CASE("character tables of the headline groups") {
    CharacterTable q8 = compute_character_table(preset("Q8"));
    CHECK(q8.degrees == std::vector<int>{1, 1, 1, 1, 2});

    CharacterTable c1 = compute_character_table(preset("C1"));
    CHECK(c1.degrees == std::vector<int>{1});
    CHECK(c1.values[0][0] == Complex(1.0, 0.0));

    FiniteGroup s3 = preset("S3");
    CharacterTable t = compute_character_table(s3);
    CHECK(t.degrees == std::vector<int>{1, 1, 2});
    S3Fixture fx = s3_fixture(s3);
    // rows sorted by degree then value; sign character sorts after trivial
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l)
            CHECK(std::abs(t.values[i][l] - Complex(fx.values[i][l], 0.0)) < 1e-8);

    CHECK(compute_character_table(preset("S4")).degrees == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(compute_character_table(preset("A4")).degrees == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("tables are deterministic") {
    CharacterTable a = compute_character_table(preset("A4"));
    CharacterTable b = compute_character_table(preset("A4"));
    REQUIRE(a.degrees == b.degrees);
    for (int i = 0; i < a.irreducible_count(); ++i)
        for (int l = 0; l < a.classes.count(); ++l)
            CHECK(std::abs(a.values[i][l] - b.values[i][l]) < 1e-12);
}

TEST_CASE("row and column orthogonality for every preset") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        FiniteGroup G = preset(name);
        CharacterTable T = compute_character_table(G);
        CHECK_NOTHROW(validate_table(T));
        const int k = T.classes.count();
        // column orthogonality: sum over irreducibles of chi(g) conj(chi(h))
        for (int lg = 0; lg < k; ++lg)
            for (int lh = 0; lh < k; ++lh) {
                Complex sum = 0.0;
                for (int i = 0; i < k; ++i) sum += T.values[i][lg] * std::conj(T.values[i][lh]);
                double expected = (lg == lh) ? static_cast<double>(G.order()) / T.classes.sizes[lg] : 0.0;
                CHECK(std::abs(sum - expected) < 1e-8);
            }
    }
}

TEST_CASE("frobenius-schur indicators") {
    FiniteGroup q8 = preset("Q8");
    CharacterTable tq8 = compute_character_table(q8);
    std::vector<int> q8_fs;
    for (int i = 0; i < 5; ++i) q8_fs.push_back(fs_indicator(tq8, i, q8));
    CHECK(q8_fs == std::vector<int>{1, 1, 1, 1, -1});

    FiniteGroup c3 = preset("C3");
    CharacterTable tc3 = compute_character_table(c3);
    std::vector<int> c3_fs;
    for (int i = 0; i < 3; ++i) c3_fs.push_back(fs_indicator(tc3, i, c3));
    CHECK(c3_fs == std::vector<int>{1, 0, 0});

    FiniteGroup s3 = preset("S3");
    CharacterTable ts3 = compute_character_table(s3);
    for (int i = 0; i < 3; ++i) CHECK(fs_indicator(ts3, i, s3) == 1);

    for (const auto& name : preset_names()) {
        FiniteGroup G = preset(name);
        CharacterTable T = compute_character_table(G);
        for (int i = 0; i < T.irreducible_count(); ++i) {
            int v = fs_indicator(T, i, G);
            CHECK(v >= -1);
            CHECK(v <= 1);
        }
    }
}

TEST_CASE("chr files round-trip and reject bad invariants") {
    FiniteGroup q8 = preset("Q8");
    CharacterTable T = compute_character_table(q8);
    std::ostringstream buffer;
    write_chartab(T, buffer);
    std::istringstream back(buffer.str());
    CharacterTable loaded = read_chartab(back);
    CHECK(loaded.degrees == T.degrees);
    for (int i = 0; i < 5; ++i)
        for (int l = 0; l < 5; ++l) CHECK(std::abs(loaded.values[i][l] - T.values[i][l]) < 1e-12);
    attach_group(loaded, q8);
    CHECK(fs_indicator(loaded, 4, q8) == -1);

    // sum of squared degrees must match the order
    std::string text = buffer.str();
    std::istringstream corrupt(
        "chartab Q8\norder 8\nclasses 2\nsizes 1 7\nreps 0 1\n"
        "irr 1 1+0i 1+0i\nirr 3 3+0i 0+0i\n");
    CHECK_THROWS_AS(read_chartab(corrupt), CharacterError);
}

TEST_CASE("explicit Q8 representation") {
    FiniteGroup q8 = preset("Q8");
    ExplicitRep rep = q8_rep_2d();
    CHECK(rep_residual(rep, q8) < 1e-12);

    // trace matches the computed 2-dimensional character
    CharacterTable T = compute_character_table(q8);
    for (int g = 0; g < 8; ++g) CHECK(std::abs(rep.matrices[g].trace() - T.at(4, g)) < 1e-10);
}

TEST_CASE("explicit S3 representation") {
    FiniteGroup s3 = preset("S3");
    ExplicitRep rep = s3_rep_2d(s3);
    CHECK(rep_residual(rep, s3) < 1e-12);
    CharacterTable T = compute_character_table(s3);
    for (int g = 0; g < 6; ++g) CHECK(std::abs(rep.matrices[g].trace() - T.at(2, g)) < 1e-10);
}

TEST_CASE("avg_conjugates is the scalar chi(g)/d") {
    FiniteGroup q8 = preset("Q8");
    ExplicitRep rep = q8_rep_2d();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);

    CHECK((avg_conjugates(rep, q8, 4) + id).cwiseAbs().maxCoeff() < 1e-10);  // rho(-1) = -I
    CHECK(avg_conjugates(rep, q8, 1).cwiseAbs().maxCoeff() < 1e-10);         // chi(i) = 0
    CHECK((avg_conjugates(rep, q8, 0) - id).cwiseAbs().maxCoeff() < 1e-10);

    CharacterTable T = compute_character_table(q8);
    for (int g = 0; g < 8; ++g) {
        Eigen::MatrixXcd expected = (T.at(4, g) / 2.0) * id;
        CHECK((avg_conjugates(rep, q8, g) - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("avg_word is the scalar v_w(chi)/d") {
    FiniteGroup q8 = preset("Q8");
    ExplicitRep rep = q8_rep_2d();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);

    // torus word: (40 I + 24 (-I)) / 64 = I/4
    CHECK((avg_word(rep, q8, parse_word("[a,b]")) - 0.25 * id).cwiseAbs().maxCoeff() < 1e-12);
    // single letter: sum of rho over the group vanishes
    CHECK(avg_word(rep, q8, parse_word("a")).cwiseAbs().maxCoeff() < 1e-12);
    // crosscap word: FS indicator -1 over dim 2
    CHECK((avg_word(rep, q8, parse_word("aa")) + 0.5 * id).cwiseAbs().maxCoeff() < 1e-12);

    // degree-1 representation: always the scalar 1 for the trivial one
    ExplicitRep trivial;
    trivial.degree = 1;
    trivial.matrices.assign(8, Eigen::MatrixXcd::Identity(1, 1));
    CHECK(std::abs(avg_word(trivial, q8, parse_word("[a,b]"))(0, 0) - 1.0) < 1e-12);

    CHECK_THROWS_AS(avg_word(rep, q8, parse_word("abcdefghij")), CharacterError);
}
