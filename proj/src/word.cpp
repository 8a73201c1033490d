#include "wordmeas/word.hpp"

#include <algorithm>
#include <cctype>

namespace wordmeas {

namespace {

int support_arity(const std::vector<SignedLetter>& syllables) {
    int max_index = -1;
    for (const auto& s : syllables) max_index = std::max(max_index, s.letter.index);
    return max_index + 1;
}

}  // namespace

Word::Word(std::vector<SignedLetter> syllables, int arity)
    : syllables_(std::move(syllables)), arity_(arity) {
    if (arity_ < 0) throw std::invalid_argument("word arity must be non-negative");
    if (support_arity(syllables_) > arity_)
        throw std::invalid_argument("letter index exceeds declared arity");
}

Word Word::with_arity(int arity) const {
    return Word(syllables_, std::max(arity, support_arity(syllables_)));
}

Word Word::inverse() const {
    std::vector<SignedLetter> out(syllables_.rbegin(), syllables_.rend());
    for (auto& s : out) s.sign = -s.sign;
    return Word(std::move(out), arity_);
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Word parse() {
        auto syllables = parse_sequence();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        int arity = support_arity(syllables);
        return Word(std::move(syllables), arity);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return (c >= 'a' && c <= 'z') || c == '[' || c == '(';
    }

    std::vector<SignedLetter> parse_sequence() {
        std::vector<SignedLetter> out;
        while (at_atom_start()) {
            auto atom = parse_atom();
            long long exponent = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                exponent = parse_integer();
                if (exponent == 0) fail("exponent 0 is not allowed");
            }
            if (exponent < 0) {
                std::reverse(atom.begin(), atom.end());
                for (auto& s : atom) s.sign = -s.sign;
                exponent = -exponent;
            }
            for (long long i = 0; i < exponent; ++i)
                out.insert(out.end(), atom.begin(), atom.end());
        }
        return out;
    }

    std::vector<SignedLetter> parse_atom() {
        skip_ws();
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '[') {
            ++pos_;
            auto u = parse_sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
            ++pos_;
            auto v = parse_sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
            ++pos_;
            // [u,v] = u v u^-1 v^-1
            std::vector<SignedLetter> out = u;
            out.insert(out.end(), v.begin(), v.end());
            for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
            for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
            return out;
        }
        int index = parse_letter();
        int sign = +1;
        if (pos_ < text_.size() && text_[pos_] == '\'') {
            ++pos_;
            sign = -1;
        }
        return {SignedLetter{Letter{index}, sign}};
    }

    int parse_letter() {
        char c = text_[pos_];
        if (c < 'a' || c > 'z') fail("expected a letter");
        ++pos_;
        if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            long long value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > 1'000'000) fail("letter index too large");
                ++pos_;
            }
            return static_cast<int>(value);
        }
        return c - 'a';
    }

    long long parse_integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        return negative ? -value : value;
    }
};

}  // namespace

Word parse_word(const std::string& text) { return Parser(text).parse(); }

std::string format_word(const Word& w) {
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        if (s.letter.index < 26)
            out += static_cast<char>('a' + s.letter.index);
        else
            out += 'x' + std::to_string(s.letter.index);
        if (s.sign < 0) out += '\'';
    }
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<SignedLetter> stack;
    stack.reserve(w.size());
    for (const auto& s : w.syllables()) {
        if (!stack.empty() && stack.back().letter == s.letter && stack.back().sign == -s.sign)
            stack.pop_back();
        else
            stack.push_back(s);
    }
    Word out(std::move(stack), w.arity());
    out.reduced_ = true;
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    auto syl = r.syllables();
    std::size_t lo = 0, hi = syl.size();
    while (hi - lo >= 2 && syl[lo].letter == syl[hi - 1].letter && syl[lo].sign == -syl[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return free_reduce(Word(std::vector<SignedLetter>(syl.begin() + lo, syl.begin() + hi), w.arity()));
}

Word connected_sum(const Word& w1, const Word& w2) {
    std::vector<SignedLetter> out = w1.syllables();
    for (auto s : w2.syllables()) {
        s.letter.index += w1.arity();
        out.push_back(s);
    }
    return Word(std::move(out), w1.arity() + w2.arity());
}

NielsenMove NielsenMove::permute(std::vector<int> perm) {
    NielsenMove m;
    m.kind = Kind::Permute;
    m.permutation = std::move(perm);
    return m;
}

NielsenMove NielsenMove::invert(int index) {
    NielsenMove m;
    m.kind = Kind::Invert;
    m.target = index;
    return m;
}

NielsenMove NielsenMove::shear(int target, int multiplier) {
    NielsenMove m;
    m.kind = Kind::Shear;
    m.target = target;
    m.multiplier = multiplier;
    return m;
}

Word apply_nielsen(const Word& w, const NielsenMove& m) {
    const int n = w.arity();
    switch (m.kind) {
        case NielsenMove::Kind::Permute: {
            if (static_cast<int>(m.permutation.size()) != n)
                throw std::invalid_argument("permutation size must equal word arity");
            std::vector<bool> seen(n, false);
            for (int image : m.permutation) {
                if (image < 0 || image >= n || seen[image])
                    throw std::invalid_argument("not a permutation of the generators");
                seen[image] = true;
            }
            std::vector<SignedLetter> out = w.syllables();
            for (auto& s : out) s.letter.index = m.permutation[s.letter.index];
            return free_reduce(Word(std::move(out), n));
        }
        case NielsenMove::Kind::Invert: {
            if (m.target < 0 || m.target >= n)
                throw std::invalid_argument("invert index out of range");
            std::vector<SignedLetter> out = w.syllables();
            for (auto& s : out)
                if (s.letter.index == m.target) s.sign = -s.sign;
            return free_reduce(Word(std::move(out), n));
        }
        case NielsenMove::Kind::Shear: {
            if (m.target < 0 || m.target >= n || m.multiplier < 0 || m.multiplier >= n)
                throw std::invalid_argument("shear index out of range");
            if (m.target == m.multiplier)
                throw std::invalid_argument("shear requires distinct generators");
            std::vector<SignedLetter> out;
            out.reserve(2 * w.size());
            for (const auto& s : w.syllables()) {
                if (s.letter.index != m.target) {
                    out.push_back(s);
                } else if (s.sign > 0) {
                    // x_i -> x_i x_j
                    out.push_back(s);
                    out.push_back({Letter{m.multiplier}, +1});
                } else {
                    // x_i^-1 -> x_j^-1 x_i^-1
                    out.push_back({Letter{m.multiplier}, -1});
                    out.push_back(s);
                }
            }
            return free_reduce(Word(std::move(out), n));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace wordmeas
