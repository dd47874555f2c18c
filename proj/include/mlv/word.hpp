#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two words (or polynomials) over different alphabets / levels were combined.
struct AlphabetMismatch : Error {
    using Error::Error;
};

/// An argument lies outside the domain of the requested operation
/// (e.g. a word outside A1 handed to the index-vector view).
struct DomainError : Error {
    using Error::Error;
};

/// A series that does not converge was handed to the evaluator.
struct DivergenceError : Error {
    using Error::Error;
};

enum class Alphabet : std::uint8_t {
    Mlv,    // {x, y_a | a in Z/N}
    LevelN, // {x_0, ..., x_N}
};

/// Letter code conventions:
///   Mlv:    -1 = x,  a in [0, N) = y_a
///   LevelN:  a in [0, N] = x_a
inline constexpr int kLetterX = -1;

/// Residue representative in [0, N).
int reduce_mod(long long a, int level);

/// Residue representative in {1, ..., N} ("the map r").
int reduce_r(long long a, int level);

/// A word over one alphabet family at a fixed level. The empty word is the
/// algebra unit. Immutable after construction apart from the builder helpers.
class Word {
public:
    Word(Alphabet family, int level) : family_(family), level_(level) { check_level(); }

    Word(Alphabet family, int level, std::vector<int> letters)
        : family_(family), level_(level), letters_(std::move(letters)) {
        check_level();
        for (int c : letters_) check_letter(c);
    }

    static Word unit(Alphabet family, int level) { return Word(family, level); }

    Alphabet family() const { return family_; }
    int level() const { return level_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    int front() const { return letters_.front(); }
    int back() const { return letters_.back(); }

    /// New word with one letter appended / prepended.
    Word append(int letter) const;
    Word prepend(int letter) const;
    /// Concatenation (same alphabet and level required).
    Word concat(const Word& tail) const;
    /// Suffix starting at position `from`.
    Word suffix(std::size_t from) const;

    /// Graded-lexicographic order: (family, level, length, letters).
    std::strong_ordering operator<=>(const Word& o) const;
    bool operator==(const Word& o) const = default;

private:
    void check_level() const;
    void check_letter(int c) const;

    Alphabet family_;
    int level_;
    std::vector<int> letters_;
};

/// (k_1,...,k_n; a_1,...,a_n) view of a generator word
/// z_{k,a} = x^{k-1} y_a  (Mlv)  or  y_{k,a} = x_0^{k-1} x_a  (LevelN).
struct IndexVector {
    std::vector<int> k;
    std::vector<int> a;

    std::size_t depth() const { return k.size(); }
    int weight() const;
    bool operator==(const IndexVector&) const = default;
};

/// Membership in the nested subalgebras. Mlv: A1/A0; LevelN: U1/U0.
struct SpanFlags {
    bool in_a1 = false;
    bool in_a0 = false;
};

SpanFlags classify(const Word& w);

/// Generator word from index data. Twists are reduced into the alphabet's
/// declared range (Z/N for Mlv, {1..N} for LevelN).
Word word_from_indices(const IndexVector& iv, Alphabet family, int level);

/// Inverse of word_from_indices. Throws DomainError if the word ends in the
/// x-type letter (not in A1 / U1).
IndexVector indices_from_word(const Word& w);

std::string to_string(const Word& w);

} // namespace mlv
