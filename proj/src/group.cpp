#include "wordmeas/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace wordmeas {

FiniteGroup::FiniteGroup(std::vector<int> flat_table, int order, std::string name)
    : order_(order), table_(std::move(flat_table)), name_(std::move(name)) {
    if (order_ <= 0) throw GroupError("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
        throw GroupError("multiplication table has the wrong size");
    validate();
}

void FiniteGroup::validate() const {
    const int n = order_;
    for (int v : table_)
        if (v < 0 || v >= n) throw GroupError("not a group: table entry out of range (closure)");
    for (int a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw GroupError("not a group: element 0 is not a two-sided identity");

    // Latin-square check implies left/right cancellation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (int b = 0; b < n; ++b) {
            int p = mul(a, b);
            if (seen[p]) throw GroupError("not a group: row is not a permutation (no inverses)");
            seen[p] = true;
        }
    }

    const_cast<FiniteGroup*>(this)->inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw GroupError("not a group: one-sided inverse only");
                const_cast<FiniteGroup*>(this)->inverse_[a] = b;
            }
    for (int a = 0; a < n; ++a)
        if (inverse_[a] < 0) throw GroupError("not a group: missing inverse");

    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw GroupError("not a group: associativity fails");
    } else {
        std::mt19937_64 rng(0x67726f7570ULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 100000; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw GroupError("not a group: associativity fails (sampled)");
        }
    }
}

FiniteGroup from_multiplication_table(const std::vector<std::vector<int>>& rows, std::string name) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw GroupError("multiplication table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteGroup(std::move(flat), n, std::move(name));
}

FiniteGroup from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                        std::string name, int cap) {
    if (generators.empty()) throw GroupError("need at least one generator");
    const int points = static_cast<int>(generators.front().size());
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != points)
            throw GroupError("generators act on different point sets");
        std::vector<bool> seen(points, false);
        for (int image : g) {
            if (image < 0 || image >= points || seen[image])
                throw GroupError("generator is not a permutation");
            seen[image] = true;
        }
    }

    std::vector<int> identity(points);
    for (int p = 0; p < points; ++p) identity[p] = p;

    auto compose = [points](const std::vector<int>& f, const std::vector<int>& g) {
        // apply g first, then f
        std::vector<int> out(points);
        for (int p = 0; p < points; ++p) out[p] = f[g[p]];
        return out;
    };

    std::vector<std::vector<int>> elements{identity};
    std::map<std::vector<int>, int> id_of{{identity, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            auto next = compose(elements[head], g);
            if (id_of.emplace(next, static_cast<int>(elements.size())).second) {
                elements.push_back(std::move(next));
                if (static_cast<int>(elements.size()) > cap)
                    throw GroupError("closure exceeds the configured cap");
            }
        }
    }

    const int n = static_cast<int>(elements.size());
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(a) * n + b] = id_of.at(compose(elements[a], elements[b]));
    FiniteGroup G(std::move(flat), n, std::move(name));
    G.set_permutations(std::move(elements));
    return G;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    ConjugacyClasses cc;
    cc.class_of.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (cc.class_of[g] >= 0) continue;
        int index = cc.count();
        cc.representatives.push_back(g);
        int size = 0;
        for (int h = 0; h < n; ++h) {
            int conj = G.conjugate(h, g);
            if (cc.class_of[conj] < 0) {
                cc.class_of[conj] = index;
                ++size;
            }
        }
        cc.sizes.push_back(size);
    }
    return cc;
}

namespace {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
    return from_multiplication_table(rows, "C" + std::to_string(n));
}

// Unit quaternions encoded as 0..7 = 1, i, j, k, -1, -i, -j, -k.
int quat_mul(int a, int b) {
    static constexpr int axis_table[4][4] = {
        // 1    i    j    k      (values: axis + 4*negative)
        {0, 1, 2, 3},
        {1, 4, 3, 6},  // i*i=-1, i*j=k, i*k=-j
        {2, 7, 4, 1},  // j*i=-k, j*j=-1, j*k=i
        {3, 2, 5, 4},  // k*i=j, k*j=-i, k*k=-1
    };
    int sign = (a / 4) ^ (b / 4);
    int prod = axis_table[a % 4][b % 4];
    return (prod + 4 * sign) % 8;
}

FiniteGroup quaternion_group() {
    std::vector<std::vector<int>> rows(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) rows[a][b] = quat_mul(a, b);
    return from_multiplication_table(rows, "Q8");
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
    names.insert(names.end(), {"C2xC2", "S3", "D4", "Q8", "A4", "S4"});
    return names;
}

FiniteGroup preset(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string::npos) {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw GroupError("unknown preset group: " + name);
        }
        if (n >= 1 && n <= 12) return cyclic(n);
        throw GroupError("unknown preset group: " + name);
    }
    if (name == "C2xC2") {
        std::vector<std::vector<int>> rows(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) rows[a][b] = a ^ b;
        return from_multiplication_table(rows, "C2xC2");
    }
    if (name == "S3") return from_permutation_generators({{1, 0, 2}, {1, 2, 0}}, "S3");
    if (name == "D4") return from_permutation_generators({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
    if (name == "Q8") return quaternion_group();
    if (name == "A4") return from_permutation_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
    if (name == "S4") return from_permutation_generators({{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4");
    throw GroupError("unknown preset group: " + name);
}

namespace {

std::vector<int> parse_cycles(const std::string& line, int& max_point) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
            continue;
        }
        if (line[pos] != '(') throw GroupError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (pos < line.size() && line[pos] != ')') {
            while (pos < line.size() && (std::isspace(static_cast<unsigned char>(line[pos])) || line[pos] == ','))
                ++pos;
            if (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
                int value = 0;
                while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
                    value = value * 10 + (line[pos++] - '0');
                cycle.push_back(value);
                max_point = std::max(max_point, value);
            } else if (pos < line.size() && line[pos] != ')') {
                throw GroupError("bad character in cycle notation");
            }
        }
        if (pos >= line.size()) throw GroupError("unterminated cycle");
        ++pos;
        cycles.push_back(std::move(cycle));
    }
    std::vector<int> perm(max_point + 1);
    for (int p = 0; p <= max_point; ++p) perm[p] = p;
    for (const auto& cycle : cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return perm;
}

}  // namespace

FiniteGroup read_group(std::istream& in) {
    std::string keyword, name;
    if (!(in >> keyword >> name) || keyword != "group") throw GroupError("expected 'group <name>'");
    int order = 0;
    if (!(in >> keyword >> order) || keyword != "order" || order <= 0)
        throw GroupError("expected 'order <N>'");
    if (!(in >> keyword)) throw GroupError("expected 'table' or 'perm'");

    if (keyword == "table") {
        std::vector<std::vector<int>> rows(order, std::vector<int>(order));
        for (auto& row : rows)
            for (auto& entry : row)
                if (!(in >> entry)) throw GroupError("truncated multiplication table");
        return from_multiplication_table(rows, name);
    }
    if (keyword == "perm") {
        std::vector<std::string> lines;
        std::string line;
        std::getline(in, line);
        lines.push_back(line);
        while (std::getline(in, line)) {
            std::istringstream probe(line);
            std::string head;
            if (!(probe >> head)) continue;
            if (head != "perm") throw GroupError("expected 'perm' line");
            std::string rest;
            std::getline(probe, rest);
            lines.push_back(rest);
        }
        int max_point = 0;
        std::vector<std::string> raw;
        for (const auto& bodied : lines) {
            int dummy = max_point;
            parse_cycles(bodied, dummy);
            max_point = dummy;
            raw.push_back(bodied);
        }
        std::vector<std::vector<int>> generators;
        for (const auto& bodied : raw) {
            int fixed = max_point;
            generators.push_back(parse_cycles(bodied, fixed));
        }
        FiniteGroup G = from_permutation_generators(generators, name);
        if (G.order() != order)
            throw GroupError("declared order " + std::to_string(order) + " but closure has " +
                             std::to_string(G.order()) + " elements");
        return G;
    }
    throw GroupError("expected 'table' or 'perm', got '" + keyword + "'");
}

FiniteGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GroupError("cannot open group file: " + path);
    return read_group(in);
}

void save_group(const FiniteGroup& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GroupError("cannot write group file: " + path);
    out << "group " << G.name() << "\norder " << G.order() << "\ntable\n";
    for (int a = 0; a < G.order(); ++a) {
        for (int b = 0; b < G.order(); ++b) out << (b ? " " : "") << G.mul(a, b);
        out << "\n";
    }
}

int evaluate(const Word& w, const FiniteGroup& G, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != w.arity())
        throw GroupError("tuple length does not match word arity");
    for (int entry : tuple)
        if (entry < 0 || entry >= G.order()) throw GroupError("tuple entry out of range");
    int acc = 0;
    for (const auto& s : w.syllables()) {
        int g = tuple[s.letter.index];
        acc = G.mul(acc, s.sign > 0 ? g : G.inv(g));
    }
    return acc;
}

}  // namespace wordmeas
