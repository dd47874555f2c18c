#include "mlv/textio.hpp"

#include <cctype>

namespace mlv {

namespace {

class Scanner {
public:
    Scanner(const std::string& s, Alphabet family, int level)
        : s_(s), family_(family), level_(level) {}

    NCPoly poly() {
        NCPoly p(family_, level_);
        skip_ws();
        bool negative = accept('-');
        p += signed_term(negative);
        skip_ws();
        while (!eof()) {
            bool minus;
            if (accept('+'))
                minus = false;
            else if (accept('-'))
                minus = true;
            else
                fail("expected '+' or '-'");
            p += signed_term(minus);
            skip_ws();
        }
        return p;
    }

    Word single_word() {
        skip_ws();
        Word w = word();
        skip_ws();
        if (!eof()) fail("trailing input after word");
        return w;
    }

private:
    NCPoly signed_term(bool minus) {
        NCPoly t = term();
        if (minus) t *= Rational(-1);
        return t;
    }

    NCPoly term() {
        skip_ws();
        if (eof()) fail("expected term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational c = rational();
            skip_ws();
            if (accept('*')) {
                skip_ws();
                return NCPoly::monomial(word(), c);
            }
            // bare rational: "1" is the unit word, other constants scale it
            return NCPoly::monomial(Word::unit(family_, level_), c);
        }
        return NCPoly::monomial(word());
    }

    Word word() {
        skip_ws();
        Word w(family_, level_);
        bool any = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '1' && !any) {
                // unit word; must not be followed by letters
                ++pos_;
                return w;
            }
            if (c == 'x') {
                ++pos_;
                if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    long v = integer();
                    require_family(Alphabet::LevelN);
                    if (v > level_) fail("letter index exceeds level");
                    w = w.append(static_cast<int>(v));
                } else {
                    require_family(Alphabet::Mlv);
                    w = w.append(kLetterX);
                }
                any = true;
            } else if (c == 'y') {
                ++pos_;
                require_family(Alphabet::Mlv);
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected twist digits after 'y'");
                long v = integer();
                w = w.append(reduce_mod(v, level_));
                any = true;
            } else if (c == 'z' || c == 'Y') {
                ++pos_;
                require_family(c == 'z' ? Alphabet::Mlv : Alphabet::LevelN);
                expect('(');
                long k = signed_integer();
                expect(',');
                long a = signed_integer();
                expect(')');
                if (k < 1) fail("generator exponent must be positive");
                IndexVector iv{{static_cast<int>(k)}, {static_cast<int>(a)}};
                w = w.concat(word_from_indices(iv, family_, level_));
                any = true;
            } else {
                break;
            }
        }
        if (!any) fail("expected word");
        return w;
    }

    Rational rational() {
        long num = integer();
        if (accept('/')) {
            long den = integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    long signed_integer() {
        skip_ws();
        bool neg = accept('-');
        long v = integer();
        return neg ? -v : v;
    }

    long integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    void require_family(Alphabet f) {
        if (f != family_)
            fail(family_ == Alphabet::Mlv ? "level-N letter in an Mlv expression"
                                          : "Mlv letter in a level-N expression");
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept(char c) {
        if (!eof() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    Alphabet family_;
    int level_;
    std::size_t pos_ = 0;
};

} // namespace

NCPoly parse_poly(const std::string& text, Alphabet family, int level) {
    return Scanner(text, family, level).poly();
}

Word parse_word(const std::string& text, Alphabet family, int level) {
    return Scanner(text, family, level).single_word();
}

ExprProbe probe_expression(const std::string& text) {
    ExprProbe probe;
    probe.unambiguous = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        auto read_int = [&](std::size_t j) {
            long v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                v = v * 10 + (text[j++] - '0');
            return v;
        };
        if (c == 'Y') {
            probe.family = Alphabet::LevelN;
            probe.unambiguous = false;
        } else if (c == 'x' && i + 1 < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            probe.family = Alphabet::LevelN;
            long v = read_int(i + 1);
            if (v > probe.min_level) probe.min_level = static_cast<int>(v);
            probe.unambiguous = false;
        } else if (c == 'y' && i + 1 < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            long v = read_int(i + 1);
            if (v != 0) {
                probe.unambiguous = false;
                if (v + 1 > probe.min_level) probe.min_level = static_cast<int>(v + 1);
            }
        } else if ((c == 'z') && i + 1 < text.size() && text[i + 1] == '(') {
            // z(k,a): a nonzero twist makes the level ambiguous
            std::size_t j = text.find(',', i);
            if (j != std::string::npos) {
                std::size_t p = j + 1;
                while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
                bool neg = p < text.size() && text[p] == '-';
                long v = read_int(p + (neg ? 1 : 0));
                if (v != 0) {
                    probe.unambiguous = false;
                    if (!neg && v + 1 > probe.min_level) probe.min_level = static_cast<int>(v + 1);
                }
            }
        }
    }
    if (probe.family == Alphabet::LevelN && probe.min_level < 1) probe.min_level = 1;
    return probe;
}

} // namespace mlv
