#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wordmeas/group.hpp"

namespace wordmeas {

struct CharacterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex character table of a finite group.  Irreducibles are sorted by
// degree, then lexicographically by value, so the row order is
// deterministic.  Row 0 is always the trivial character.
struct CharacterTable {
    std::string group_name;
    int group_order = 0;
    ConjugacyClasses classes;
    std::vector<int> degrees;                                   // per irreducible
    std::vector<std::vector<std::complex<double>>> values;      // [irreducible][class]

    int irreducible_count() const { return static_cast<int>(degrees.size()); }
    std::complex<double> at(int irreducible, int element) const {
        return values[irreducible][classes.class_of[element]];
    }
};

// Burnside's method: simultaneous eigenvectors of a random real combination
// of the class-algebra structure-constant matrices.  Requires |G| <= 200.
// Retries up to 8 seeds if the combination is spectrally degenerate.
CharacterTable compute_character_table(const FiniteGroup& G);

// Throws CharacterError if any table invariant fails: class count, integer
// degrees with sum of squares |G|, row orthogonality within `tol`, and
// exact degrees at the identity class.
void validate_table(const CharacterTable& T, double tol = 1e-8);

// (1/|G|) sum over g of chi(g^2), rounded to the nearest integer; a result
// farther than 1e-6 from an integer signals a bad table.
int fs_indicator(const CharacterTable& T, int irreducible, const FiniteGroup& G);

// Fill in the element -> class map of a loaded table from the group it
// describes; throws if the class metadata does not match.
void attach_group(CharacterTable& T, const FiniteGroup& G);

// .chr file format round-trip; load re-validates all invariants.
CharacterTable read_chartab(std::istream& in);
CharacterTable load_chartab(const std::string& path);
void write_chartab(const CharacterTable& T, std::ostream& out);
void save_chartab(const CharacterTable& T, const std::string& path);

// Explicit unitary representation, one matrix per element id.
struct ExplicitRep {
    int degree = 0;
    std::vector<Eigen::MatrixXcd> matrices;
};

// 2-dimensional irreducible of preset("Q8") via the unit quaternions
// acting on C^2.
ExplicitRep q8_rep_2d();

// 2-dimensional (real) standard representation of a group of permutations
// of 3 points, e.g. preset("S3").
ExplicitRep s3_rep_2d(const FiniteGroup& S3);

// Checks rho(g)rho(h) = rho(gh), rho(1) = I, and unitarity; returns the
// largest residual found.
double rep_residual(const ExplicitRep& rep, const FiniteGroup& G);

// (1/|G|) sum over x of rho(x g x^-1); a scalar matrix chi(g)/d * I.
Eigen::MatrixXcd avg_conjugates(const ExplicitRep& rep, const FiniteGroup& G, int g);

// |G|^-n sum over tuples t of rho(w(t)); a scalar matrix v_w(chi)/d * I.
Eigen::MatrixXcd avg_word(const ExplicitRep& rep, const FiniteGroup& G, const Word& w,
                          double budget = 1e8);

}  // namespace wordmeas
