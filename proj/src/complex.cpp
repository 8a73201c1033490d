#include "wordmeas/complex.hpp"

#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace wordmeas {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

WordComplex build_complex(const Word& w) {
    if (w.empty()) throw TopologyError("empty word has no polygon");
    const auto& syl = w.syllables();
    const int sides = static_cast<int>(syl.size());

    // Dense re-index of the support letters.
    std::map<int, int> edge_id;
    for (const auto& s : syl) edge_id.emplace(s.letter.index, static_cast<int>(edge_id.size()));
    const int edges = static_cast<int>(edge_id.size());

    // Nodes 2e and 2e+1 are the tail and head of edge e.  Side i runs from
    // polygon corner i to corner i+1; with sign +1 it is traversed
    // tail->head, with sign -1 head->tail.  The corner between consecutive
    // sides glues the end label of one to the start label of the next.
    UnionFind uf(2 * edges);
    auto start_label = [&](int i) {
        int e = edge_id.at(syl[i].letter.index);
        return syl[i].sign > 0 ? 2 * e : 2 * e + 1;
    };
    auto end_label = [&](int i) {
        int e = edge_id.at(syl[i].letter.index);
        return syl[i].sign > 0 ? 2 * e + 1 : 2 * e;
    };
    for (int i = 0; i < sides; ++i) uf.unite(end_label((i + sides - 1) % sides), start_label(i));

    std::set<int> roots;
    for (int node = 0; node < 2 * edges; ++node) roots.insert(uf.find(node));

    WordComplex c;
    c.side_count = sides;
    c.edge_count = edges;
    c.vertex_count = static_cast<int>(roots.size());
    return c;
}

bool is_closed_surface(const Word& w) {
    if (w.empty()) return false;
    std::map<int, int> occurrences;
    for (const auto& s : w.syllables()) ++occurrences[s.letter.index];
    for (const auto& [letter, count] : occurrences)
        if (count != 2) return false;
    return true;
}

SurfaceClass classify_surface(const Word& w) {
    if (!is_closed_surface(w)) throw TopologyError("word does not define a closed surface");
    // Orientable iff the two occurrences of every letter have opposite signs.
    std::map<int, int> sign_sum;
    for (const auto& s : w.syllables()) sign_sum[s.letter.index] += s.sign;
    bool orientable = true;
    for (const auto& [letter, sum] : sign_sum)
        if (sum != 0) orientable = false;

    SurfaceClass out;
    out.orientable = orientable;
    out.euler_characteristic = euler_characteristic(build_complex(w));
    out.genus_or_crosscaps =
        orientable ? (2 - out.euler_characteristic) / 2 : 2 - out.euler_characteristic;
    return out;
}

bool same_surface_class(const Word& w1, const Word& w2) {
    SurfaceClass a = classify_surface(w1);
    SurfaceClass b = classify_surface(w2);
    return a.orientable == b.orientable && a.euler_characteristic == b.euler_characteristic;
}

Word canonical_surface_word(const SurfaceClass& s) {
    std::vector<SignedLetter> syl;
    if (s.orientable) {
        int genus = s.genus_or_crosscaps;
        if (genus == 0)
            return Word({{Letter{0}, +1}, {Letter{0}, -1}}, 1);
        for (int g = 0; g < genus; ++g) {
            Letter a{2 * g}, b{2 * g + 1};
            syl.push_back({a, +1});
            syl.push_back({b, +1});
            syl.push_back({a, -1});
            syl.push_back({b, -1});
        }
        return Word(std::move(syl), 2 * genus);
    }
    int crosscaps = s.genus_or_crosscaps;
    if (crosscaps < 1) throw TopologyError("non-orientable surface needs at least one crosscap");
    for (int k = 0; k < crosscaps; ++k) {
        syl.push_back({Letter{k}, +1});
        syl.push_back({Letter{k}, +1});
    }
    return Word(std::move(syl), crosscaps);
}

}  // namespace wordmeas
