#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wordmeas/complex.hpp"

using namespace wordmeas;

namespace {

// Independent oracle: count vertex classes by gluing polygon corners
// directly along the side identifications, without edge-endpoint labels.
int corner_trace_vertex_count(const Word& w) {
    const auto& syl = w.syllables();
    const int L = static_cast<int>(syl.size());
    REQUIRE(L > 0);
    std::vector<int> parent(L);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::map<int, std::vector<int>> occurrences;
    for (int i = 0; i < L; ++i) occurrences[syl[i].letter.index].push_back(i);
    auto start = [&](int i) { return i; };
    auto end = [&](int i) { return (i + 1) % L; };
    for (const auto& [letter, where] : occurrences) {
        for (std::size_t a = 0; a < where.size(); ++a)
            for (std::size_t b = a + 1; b < where.size(); ++b) {
                int p = where[a], q = where[b];
                if (syl[p].sign == syl[q].sign) {
                    unite(start(p), start(q));
                    unite(end(p), end(q));
                } else {
                    unite(start(p), end(q));
                    unite(end(p), start(q));
                }
            }
    }
    std::set<int> roots;
    for (int c = 0; c < L; ++c) roots.insert(find(c));
    return static_cast<int>(roots.size());
}

Word random_word(std::mt19937_64& rng, int max_arity = 4, int max_length = 10) {
    std::uniform_int_distribution<int> length(1, max_length);
    std::uniform_int_distribution<int> letter(0, max_arity - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<SignedLetter> syl;
    int len = length(rng);
    for (int i = 0; i < len; ++i) syl.push_back({Letter{letter(rng)}, sign(rng) ? +1 : -1});
    int max_index = -1;
    for (const auto& s : syl) max_index = std::max(max_index, s.letter.index);
    return Word(std::move(syl), max_index + 1);
}

}  // namespace

TEST_CASE("build_complex matches the corner-trace oracle on frozen cases") {
    struct Case {
        const char* text;
        int sides, edges, vertices;
    };
    // vertex counts frozen from corner_trace_vertex_count
    const Case cases[] = {
        {"aa", 2, 1, 1},            // projective plane
        {"[a,b]", 4, 2, 1},         // torus square
        {"a a'", 2, 1, 2},          // sphere digon
        {"a b c a' b' c'", 6, 3, 2},// hexagonal torus
        {"abab", 4, 2, 2},          // projective plane, (ab)^2 in disguise
        {"abab'", 4, 2, 1},         // Klein bottle
        {"aabb", 4, 2, 1},          // Klein bottle, crosscap form
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        Word w = parse_word(c.text);
        WordComplex x = build_complex(w);
        CHECK(x.side_count == c.sides);
        CHECK(x.edge_count == c.edges);
        CHECK(x.vertex_count == c.vertices);
        CHECK(x.vertex_count == corner_trace_vertex_count(w));
    }
}

TEST_CASE("build_complex agrees with the oracle on random words") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(rng);
        CHECK(build_complex(w).vertex_count == corner_trace_vertex_count(w));
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(build_complex(parse_word("[a,b]"))) == 0);
    CHECK(euler_characteristic(build_complex(parse_word("aa"))) == 1);
    CHECK(euler_characteristic(build_complex(parse_word("a b c a' b' c'"))) == 0);
    CHECK(euler_characteristic(build_complex(parse_word("a a'"))) == 2);
    CHECK_THROWS_AS(build_complex(parse_word("")), TopologyError);
}

TEST_CASE("is_closed_surface counts literal occurrences") {
    CHECK(is_closed_surface(parse_word("[a,b]")));
    CHECK(!is_closed_surface(parse_word("aab")));
    CHECK(is_closed_surface(parse_word("[a,b][c,d]")));
    CHECK(!is_closed_surface(parse_word("aaa")));
    CHECK(!is_closed_surface(parse_word("")));
}

TEST_CASE("classify_surface") {
    CHECK(classify_surface(parse_word("[a,b]")) == SurfaceClass{true, 0, 1});
    CHECK(classify_surface(parse_word("aa")) == SurfaceClass{false, 1, 1});
    CHECK(classify_surface(parse_word("abab")) == SurfaceClass{false, 1, 1});
    CHECK(classify_surface(parse_word("abab'")) == SurfaceClass{false, 0, 2});
    CHECK(classify_surface(parse_word("aabb")) == SurfaceClass{false, 0, 2});
    CHECK(classify_surface(parse_word("a a'")) == SurfaceClass{true, 2, 0});
    CHECK_THROWS_AS(classify_surface(parse_word("ab")), TopologyError);
}

TEST_CASE("same_surface_class") {
    CHECK(same_surface_class(parse_word("[a,b]"), parse_word("a b c a' b' c'")));
    CHECK(same_surface_class(parse_word("abab'"), parse_word("aabb")));
    CHECK(same_surface_class(parse_word("abab"), parse_word("aa")));
    // abab is one crosscap, aabb is two: not homeomorphic
    CHECK(!same_surface_class(parse_word("abab"), parse_word("aabb")));
    CHECK(!same_surface_class(parse_word("[a,b]"), parse_word("aa")));
    CHECK_THROWS_AS(same_surface_class(parse_word("[a,b]"), parse_word("ab")), TopologyError);
}

TEST_CASE("canonical words classify back to their class") {
    for (int genus = 0; genus <= 5; ++genus) {
        SurfaceClass s{true, 2 - 2 * genus, genus};
        CHECK(classify_surface(canonical_surface_word(s)) == s);
    }
    for (int crosscaps = 1; crosscaps <= 6; ++crosscaps) {
        SurfaceClass s{false, 2 - crosscaps, crosscaps};
        CHECK(classify_surface(canonical_surface_word(s)) == s);
    }
    CHECK(canonical_surface_word(SurfaceClass{true, -2, 2}) == parse_word("[a,b][c,d]"));
    CHECK(canonical_surface_word(SurfaceClass{false, 1, 1}) == parse_word("aa"));
    CHECK(canonical_surface_word(SurfaceClass{true, 2, 0}) == parse_word("a a'"));
}

TEST_CASE("connected sums of surface words add euler defects") {
    std::vector<SurfaceClass> small;
    for (int genus = 0; genus <= 3; ++genus) small.push_back({true, 2 - 2 * genus, genus});
    for (int crosscaps = 1; crosscaps <= 3; ++crosscaps)
        small.push_back({false, 2 - crosscaps, crosscaps});
    for (const auto& s1 : small)
        for (const auto& s2 : small) {
            Word sum = connected_sum(canonical_surface_word(s1), canonical_surface_word(s2));
            REQUIRE(is_closed_surface(sum));
            SurfaceClass got = classify_surface(sum);
            CHECK(got.euler_characteristic ==
                  s1.euler_characteristic + s2.euler_characteristic - 2);
            CHECK(got.orientable == (s1.orientable && s2.orientable));
        }
}

TEST_CASE("non-surface fuzz: classify_surface refuses") {
    std::mt19937_64 rng(23);
    int refused = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(rng, 5, 11);
        if (!is_closed_surface(w)) {
            CHECK_THROWS_AS(classify_surface(w), TopologyError);
            ++refused;
        } else {
            CHECK_NOTHROW(classify_surface(w));
        }
    }
    CHECK(refused > 300);  // random words are rarely surfaces
}
