#include "wordmeas/characters.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace wordmeas {

namespace {

using Complex = std::complex<double>;

// Structure constants of the class algebra: a[i][j][l] counts pairs
// (x, y) in C_i x C_j with xy equal to a fixed representative of C_l.
std::vector<Eigen::MatrixXd> class_matrices(const FiniteGroup& G, const ConjugacyClasses& cc) {
    const int k = cc.count();
    std::vector<Eigen::MatrixXd> B(k, Eigen::MatrixXd::Zero(k, k));
    for (int l = 0; l < k; ++l) {
        int rep = cc.representatives[l];
        for (int x = 0; x < G.order(); ++x) {
            int y = G.mul(G.inv(x), rep);
            B[cc.class_of[x]](cc.class_of[y], l) += 1.0;
        }
    }
    return B;
}

long long rounded(double x) { return std::llround(x); }

bool value_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t l = 0; l < a.size(); ++l) {
        long long ra = rounded(a[l].real() * 1e6), rb = rounded(b[l].real() * 1e6);
        if (ra != rb) return ra > rb;  // larger real part first: trivial character leads
        long long ia = rounded(a[l].imag() * 1e6), ib = rounded(b[l].imag() * 1e6);
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace

CharacterTable compute_character_table(const FiniteGroup& G) {
    if (G.order() > 200) throw CharacterError("character table computation is limited to |G| <= 200");
    ConjugacyClasses cc = conjugacy_classes(G);
    const int k = cc.count();
    const auto B = class_matrices(G, cc);

    for (unsigned seed = 0; seed < 8; ++seed) {
        std::mt19937_64 rng(0xC0FFEE ^ seed);
        std::uniform_real_distribution<double> coeff(0.1, 1.0);
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) combo += coeff(rng) * B[i];

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
        if (solver.info() != Eigen::Success) continue;

        // A degenerate combination cannot separate the one-dimensional
        // common eigenspaces; try the next seed.
        const auto& eigenvalues = solver.eigenvalues();
        double scale = 1.0;
        for (int i = 0; i < k; ++i) scale = std::max(scale, std::abs(eigenvalues(i)));
        bool separated = true;
        for (int i = 0; i < k && separated; ++i)
            for (int j = i + 1; j < k; ++j)
                if (std::abs(eigenvalues(i) - eigenvalues(j)) < 1e-7 * scale) {
                    separated = false;
                    break;
                }
        if (!separated) continue;

        CharacterTable T;
        T.group_name = G.name();
        T.group_order = G.order();
        T.classes = cc;
        bool ok = true;
        for (int col = 0; col < k && ok; ++col) {
            Eigen::VectorXcd v = solver.eigenvectors().col(col);
            if (std::abs(v(0)) < 1e-12) {
                ok = false;
                break;
            }
            v /= v(0);  // omega at the identity class is 1
            double norm = 0.0;
            for (int l = 0; l < k; ++l) norm += std::norm(v(l)) / cc.sizes[l];
            double d = std::sqrt(G.order() / norm);
            int degree = static_cast<int>(std::llround(d));
            if (degree < 1 || std::abs(d - degree) > 1e-4) {
                ok = false;
                break;
            }
            std::vector<Complex> row(k);
            for (int l = 0; l < k; ++l) row[l] = static_cast<double>(degree) * v(l) / static_cast<double>(cc.sizes[l]);
            row[0] = Complex(degree, 0.0);  // exact at the identity class
            T.degrees.push_back(degree);
            T.values.push_back(std::move(row));
        }
        if (!ok) continue;

        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
            return value_less(T.values[a], T.values[b]);
        });
        CharacterTable sorted = T;
        for (int i = 0; i < k; ++i) {
            sorted.degrees[i] = T.degrees[order[i]];
            sorted.values[i] = T.values[order[i]];
        }
        try {
            validate_table(sorted);
        } catch (const CharacterError&) {
            continue;
        }
        return sorted;
    }
    throw CharacterError("all random class-algebra combinations were degenerate");
}

void validate_table(const CharacterTable& T, double tol) {
    const int k = T.classes.count();
    if (T.irreducible_count() != k)
        throw CharacterError("number of irreducibles differs from number of classes");
    long long sum_sq = 0;
    for (int d : T.degrees) {
        if (d < 1) throw CharacterError("non-positive degree");
        sum_sq += static_cast<long long>(d) * d;
    }
    if (sum_sq != T.group_order)
        throw CharacterError("sum of squared degrees does not equal the group order");
    int size_total = 0;
    for (int s : T.classes.sizes) size_total += s;
    if (size_total != T.group_order) throw CharacterError("class sizes do not sum to the group order");
    for (int i = 0; i < k; ++i) {
        if (T.values[i][0] != Complex(static_cast<double>(T.degrees[i]), 0.0))
            throw CharacterError("character at the identity class must equal the degree exactly");
        for (int j = 0; j < k; ++j) {
            Complex inner = 0.0;
            for (int l = 0; l < k; ++l)
                inner += static_cast<double>(T.classes.sizes[l]) * T.values[i][l] * std::conj(T.values[j][l]);
            inner /= static_cast<double>(T.group_order);
            if (std::abs(inner - (i == j ? 1.0 : 0.0)) > tol)
                throw CharacterError("row orthogonality fails");
        }
    }
}

int fs_indicator(const CharacterTable& T, int irreducible, const FiniteGroup& G) {
    if (irreducible < 0 || irreducible >= T.irreducible_count())
        throw CharacterError("irreducible index out of range");
    if (T.classes.class_of.empty()) throw CharacterError("table is not attached to a group");
    Complex sum = 0.0;
    for (int g = 0; g < G.order(); ++g) sum += T.at(irreducible, G.mul(g, g));
    sum /= static_cast<double>(G.order());
    long long nearest = std::llround(sum.real());
    if (std::abs(sum - Complex(static_cast<double>(nearest), 0.0)) > 1e-6)
        throw CharacterError("Frobenius-Schur indicator is not an integer; table is inconsistent");
    return static_cast<int>(nearest);
}

void attach_group(CharacterTable& T, const FiniteGroup& G) {
    if (T.group_order != G.order())
        throw CharacterError("character table order does not match the group");
    ConjugacyClasses cc = conjugacy_classes(G);
    if (cc.count() != T.classes.count() || cc.sizes != T.classes.sizes ||
        cc.representatives != T.classes.representatives)
        throw CharacterError("character table class metadata does not match the group");
    T.classes = std::move(cc);
}

namespace {

std::string format_complex(Complex z) {
    std::ostringstream out;
    out.precision(17);
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

Complex parse_complex(const std::string& token) {
    if (token.empty() || token.back() != 'i') throw CharacterError("bad complex literal: " + token);
    std::size_t split = std::string::npos;
    for (std::size_t p = token.size() - 1; p > 0; --p) {
        char c = token[p];
        if ((c == '+' || c == '-') && token[p - 1] != 'e' && token[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) throw CharacterError("bad complex literal: " + token);
    double re = std::stod(token.substr(0, split));
    double im = std::stod(token.substr(split, token.size() - 1 - split));
    return {re, im};
}

}  // namespace

void write_chartab(const CharacterTable& T, std::ostream& out) {
    const int k = T.classes.count();
    out << "chartab " << T.group_name << "\norder " << T.group_order << "\nclasses " << k << "\nsizes";
    for (int s : T.classes.sizes) out << " " << s;
    out << "\nreps";
    for (int r : T.classes.representatives) out << " " << r;
    out << "\n";
    for (int i = 0; i < k; ++i) {
        out << "irr " << T.degrees[i];
        for (int l = 0; l < k; ++l) out << " " << format_complex(T.values[i][l]);
        out << "\n";
    }
}

CharacterTable read_chartab(std::istream& in) {
    std::string keyword;
    CharacterTable T;
    if (!(in >> keyword >> T.group_name) || keyword != "chartab")
        throw CharacterError("expected 'chartab <group>'");
    if (!(in >> keyword >> T.group_order) || keyword != "order")
        throw CharacterError("expected 'order <N>'");
    int k = 0;
    if (!(in >> keyword >> k) || keyword != "classes" || k <= 0)
        throw CharacterError("expected 'classes <k>'");
    if (!(in >> keyword) || keyword != "sizes") throw CharacterError("expected 'sizes'");
    T.classes.sizes.resize(k);
    for (int& s : T.classes.sizes)
        if (!(in >> s)) throw CharacterError("truncated sizes line");
    if (!(in >> keyword) || keyword != "reps") throw CharacterError("expected 'reps'");
    T.classes.representatives.resize(k);
    for (int& r : T.classes.representatives)
        if (!(in >> r)) throw CharacterError("truncated reps line");
    for (int i = 0; i < k; ++i) {
        int degree = 0;
        if (!(in >> keyword >> degree) || keyword != "irr") throw CharacterError("expected 'irr' line");
        std::vector<Complex> row(k);
        for (auto& value : row) {
            std::string token;
            if (!(in >> token)) throw CharacterError("truncated character row");
            value = parse_complex(token);
        }
        T.degrees.push_back(degree);
        T.values.push_back(std::move(row));
    }
    validate_table(T);
    return T;
}

CharacterTable load_chartab(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CharacterError("cannot open character table file: " + path);
    return read_chartab(in);
}

void save_chartab(const CharacterTable& T, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw CharacterError("cannot write character table file: " + path);
    write_chartab(T, out);
}

ExplicitRep q8_rep_2d() {
    const Complex I(0.0, 1.0);
    ExplicitRep rep;
    rep.degree = 2;
    Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd qi(2, 2), qj(2, 2), qk(2, 2);
    qi << I, 0.0, 0.0, -I;
    qj << 0.0, 1.0, -1.0, 0.0;
    qk << 0.0, I, I, 0.0;
    rep.matrices = {one, qi, qj, qk, -one, -qi, -qj, -qk};
    return rep;
}

ExplicitRep s3_rep_2d(const FiniteGroup& S3) {
    const auto& perms = S3.permutations();
    if (S3.order() != 6 || perms.size() != 6 || perms.front().size() != 3)
        throw CharacterError("s3_rep_2d needs a group of permutations of 3 points");
    // Orthonormal basis of the plane orthogonal to (1,1,1).
    const double u[2][3] = {{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
                            {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
    ExplicitRep rep;
    rep.degree = 2;
    for (const auto& perm : perms) {
        Eigen::MatrixXcd m(2, 2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double permuted[3] = {0, 0, 0};
                for (int p = 0; p < 3; ++p) permuted[perm[p]] = u[b][p];
                double dot = 0.0;
                for (int q = 0; q < 3; ++q) dot += u[a][q] * permuted[q];
                m(a, b) = dot;
            }
        rep.matrices.push_back(m);
    }
    return rep;
}

double rep_residual(const ExplicitRep& rep, const FiniteGroup& G) {
    const int n = G.order();
    if (static_cast<int>(rep.matrices.size()) != n)
        throw CharacterError("representation size does not match group order");
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.degree, rep.degree);
    double residual = (rep.matrices[0] - id).cwiseAbs().maxCoeff();
    for (int a = 0; a < n; ++a) {
        residual = std::max(residual,
                            (rep.matrices[a] * rep.matrices[a].adjoint() - id).cwiseAbs().maxCoeff());
        for (int b = 0; b < n; ++b)
            residual = std::max(residual, (rep.matrices[a] * rep.matrices[b] -
                                           rep.matrices[G.mul(a, b)])
                                              .cwiseAbs()
                                              .maxCoeff());
    }
    return residual;
}

Eigen::MatrixXcd avg_conjugates(const ExplicitRep& rep, const FiniteGroup& G, int g) {
    if (g < 0 || g >= G.order()) throw CharacterError("element id out of range");
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rep.degree, rep.degree);
    for (int x = 0; x < G.order(); ++x) sum += rep.matrices[G.conjugate(x, g)];
    return sum / static_cast<double>(G.order());
}

Eigen::MatrixXcd avg_word(const ExplicitRep& rep, const FiniteGroup& G, const Word& w, double budget) {
    const int n = w.arity();
    double tuples = std::pow(static_cast<double>(G.order()), n);
    if (tuples > budget) throw CharacterError("enumeration budget exceeded in avg_word");

    // Accumulate the pushforward counts first; the matrix sum then has one
    // term per group element.
    std::vector<std::uint64_t> counts(G.order(), 0);
    std::vector<int> tuple(n, 0);
    while (true) {
        ++counts[evaluate(w, G, tuple)];
        int c = n - 1;
        while (c >= 0 && ++tuple[c] == G.order()) tuple[c--] = 0;
        if (c < 0) break;
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rep.degree, rep.degree);
    for (int g = 0; g < G.order(); ++g)
        if (counts[g]) sum += static_cast<double>(counts[g]) * rep.matrices[g];
    return sum / tuples;
}

}  // namespace wordmeas
