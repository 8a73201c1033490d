#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordmeas {

// A generator of the free group, identified by its 0-based index.
struct Letter {
    int index = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// One syllable of a word: a generator or its inverse.
struct SignedLetter {
    Letter letter;
    int sign = +1;  // +1 or -1
    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;

    SignedLetter inverse() const { return {letter, -sign}; }
};

// An element of the free group F_n, kept in literal (possibly unreduced)
// form.  Arity may exceed the set of letters actually used.
class Word {
public:
    Word() = default;
    Word(std::vector<SignedLetter> syllables, int arity);

    const std::vector<SignedLetter>& syllables() const { return syllables_; }
    int arity() const { return arity_; }
    std::size_t size() const { return syllables_.size(); }
    bool empty() const { return syllables_.empty(); }
    bool is_reduced() const { return reduced_; }

    // Same syllables, declared arity raised to `arity` (never lowered below
    // the support).
    Word with_arity(int arity) const;

    // Reversed word with all signs flipped.
    Word inverse() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.arity_ == b.arity_ && a.syllables_ == b.syllables_;
    }

private:
    std::vector<SignedLetter> syllables_;
    int arity_ = 0;
    bool reduced_ = false;

    friend Word free_reduce(const Word&);
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

// Grammar:
//   word   := term* ; term := atom ('^' integer)?
//   atom   := letter | letter "'" | '[' word ',' word ']' | '(' word ')'
//   letter := [a-z] | 'x' [0-9]+
// '[u,v]' desugars to u v u^-1 v^-1; exponent 0 is an error.
Word parse_word(const std::string& text);

// Inverse of parse_word up to whitespace: letters a..z for indices 0..25,
// xK beyond, apostrophe for inverses.
std::string format_word(const Word& w);

// Cancel adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);

// Freely reduce, then strip conjugating ends until the first syllable is
// no longer the inverse of the last.
Word cyclic_reduce(const Word& w);

// Product in the free product F_{n1} * F_{n2}: w2's letters are shifted up
// by w1's arity.
Word connected_sum(const Word& w1, const Word& w2);

// Elementary Nielsen transformation of the generating set.
struct NielsenMove {
    enum class Kind { Permute, Invert, Shear };
    Kind kind = Kind::Invert;
    std::vector<int> permutation;  // Permute: image of each generator index
    int target = 0;                // Invert/Shear: the rewritten generator
    int multiplier = 0;            // Shear: x_target -> x_target x_multiplier

    static NielsenMove permute(std::vector<int> perm);
    static NielsenMove invert(int index);
    static NielsenMove shear(int target, int multiplier);
};

// Substitute generators according to the move, then freely reduce.
Word apply_nielsen(const Word& w, const NielsenMove& m);

}  // namespace wordmeas
