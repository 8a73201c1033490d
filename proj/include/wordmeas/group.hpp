#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordmeas/word.hpp"

namespace wordmeas {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group given by its full multiplication table.  Element ids are
// dense integers with the identity at 0; the inner loops of the counting
// code are single table lookups.
class FiniteGroup {
public:
    FiniteGroup(std::vector<int> flat_table, int order, std::string name);

    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conjugate(int h, int g) const { return mul(mul(h, g), inverse_[h]); }

    // Underlying permutations when the group was built from generators
    // (empty otherwise); used by the explicit-representation fixtures.
    const std::vector<std::vector<int>>& permutations() const { return perms_; }
    void set_permutations(std::vector<std::vector<int>> perms) { perms_ = std::move(perms); }

private:
    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string name_;
    std::vector<std::vector<int>> perms_;

    void validate() const;
};

struct ConjugacyClasses {
    std::vector<int> class_of;         // element id -> class index
    std::vector<int> sizes;            // class index -> class size
    std::vector<int> representatives;  // class index -> minimal element id

    int count() const { return static_cast<int>(sizes.size()); }
};

// Validates the group axioms; associativity is checked exhaustively up to
// order 64 and on 10^5 random triples above that.
FiniteGroup from_multiplication_table(const std::vector<std::vector<int>>& rows,
                                      std::string name = "G");

// Breadth-first closure of the generators; element ids in discovery order
// with the identity first.  Throws if the closure exceeds `cap` elements.
FiniteGroup from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                        std::string name = "G", int cap = 10000);

ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

// Named groups with fixed element orderings.  Q8 follows the ordering
// 1, i, j, k, -1, -i, -j, -k.
// Available: C1..C12, C2xC2, S3, D4, Q8, A4, S4.
FiniteGroup preset(const std::string& name);
std::vector<std::string> preset_names();

// .grp files: "group <name>" / "order <N>" / then either "table" with N
// rows of N ids or "perm (c y c l e s)" lines.
FiniteGroup load_group(const std::string& path);
FiniteGroup read_group(std::istream& in);
void save_group(const FiniteGroup& G, const std::string& path);

// Left-to-right product of t[letter]^sign through the multiplication table.
int evaluate(const Word& w, const FiniteGroup& G, const std::vector<int>& tuple);

}  // namespace wordmeas
