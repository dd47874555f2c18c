#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "mlv/word.hpp"

namespace mlv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Finite formal Q-linear combination of words over one alphabet/level.
/// Zero coefficients are never stored; term order is the graded-lex word
/// order, which fixes serialization.
class NCPoly {
public:
    using TermMap = std::map<Word, Rational>;

    NCPoly(Alphabet family, int level) : family_(family), level_(level) {
        if (level < 1) throw DomainError("level must be >= 1");
    }

    static NCPoly zero(Alphabet family, int level) { return NCPoly(family, level); }
    static NCPoly unit(Alphabet family, int level) {
        return monomial(Word::unit(family, level));
    }
    static NCPoly monomial(const Word& w, const Rational& c = 1);

    Alphabet family() const { return family_; }
    int level() const { return level_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Word& w) const;

    NCPoly& add_term(const Word& w, const Rational& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& c);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
    friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }

    bool operator==(const NCPoly& o) const = default;

    /// Every word classifies in A1/U1 (resp. A0/U0).
    bool all_in_a1() const;
    bool all_in_a0() const;

    /// Word-by-word concatenation with a fixed prefix word.
    NCPoly prepend(const Word& prefix) const;

private:
    void check_compatible(const NCPoly& o) const;
    void check_word(const Word& w) const;

    Alphabet family_;
    int level_;
    TermMap terms_;
};

std::string to_string(const NCPoly& p);

} // namespace mlv
