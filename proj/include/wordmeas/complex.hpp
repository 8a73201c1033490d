#pragma once

#include <stdexcept>

#include "wordmeas/word.hpp"

namespace wordmeas {

// The 2-complex built from a word: one polygon whose L sides carry the
// syllables, with sides identified along the distinct letters and corners
// merged into vertex classes.
struct WordComplex {
    int side_count = 0;    // L = syllable count
    int edge_count = 0;    // E = distinct letters in the support
    int vertex_count = 0;  // V = corner classes after identification
    static constexpr int face_count = 1;
};

// Classification of a closed surface by orientability and Euler
// characteristic.
struct SurfaceClass {
    bool orientable = true;
    int euler_characteristic = 2;
    int genus_or_crosscaps = 0;  // genus if orientable, crosscaps otherwise
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WordComplex build_complex(const Word& w);

inline int euler_characteristic(const WordComplex& c) {
    return c.vertex_count - c.edge_count + WordComplex::face_count;
}

// True iff every letter of the support occurs exactly twice in the literal
// word (counting both signs).  The empty word has no 2-cell boundary and is
// never a surface.
bool is_closed_surface(const Word& w);

SurfaceClass classify_surface(const Word& w);

// Both words must be closed surfaces; homeomorphism for general 2-complexes
// is not decided here.
bool same_surface_class(const Word& w1, const Word& w2);

// Standard representative: genus-g product of commutators, x0^2..x_{k-1}^2
// for k crosscaps, or the digon a a^-1 for the sphere.
Word canonical_surface_word(const SurfaceClass& s);

}  // namespace wordmeas
