#include "mlv/word.hpp"

#include <sstream>

namespace mlv {

int reduce_mod(long long a, int level) {
    if (level < 1) throw DomainError("level must be >= 1");
    long long r = a % level;
    if (r < 0) r += level;
    return static_cast<int>(r);
}

int reduce_r(long long a, int level) {
    int r = reduce_mod(a, level);
    return r == 0 ? level : r;
}

void Word::check_level() const {
    if (level_ < 1) throw DomainError("level must be >= 1");
}

void Word::check_letter(int c) const {
    bool ok = family_ == Alphabet::Mlv ? (c >= kLetterX && c < level_)
                                       : (c >= 0 && c <= level_);
    if (!ok)
        throw DomainError("letter code " + std::to_string(c) +
                          " out of range for level " + std::to_string(level_));
}

Word Word::append(int letter) const {
    Word w = *this;
    w.check_letter(letter);
    w.letters_.push_back(letter);
    return w;
}

Word Word::prepend(int letter) const {
    Word w(family_, level_);
    w.check_letter(letter);
    w.letters_.reserve(letters_.size() + 1);
    w.letters_.push_back(letter);
    w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
    return w;
}

Word Word::concat(const Word& tail) const {
    if (family_ != tail.family_ || level_ != tail.level_)
        throw AlphabetMismatch("cannot concatenate words over different alphabets");
    Word w = *this;
    w.letters_.insert(w.letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return w;
}

Word Word::suffix(std::size_t from) const {
    if (from > letters_.size()) throw DomainError("suffix start out of range");
    return Word(family_, level_,
                std::vector<int>(letters_.begin() + static_cast<long>(from), letters_.end()));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = family_ <=> o.family_; c != 0) return c;
    if (auto c = level_ <=> o.level_; c != 0) return c;
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (auto c = letters_[i] <=> o.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

int IndexVector::weight() const {
    int w = 0;
    for (int ki : k) w += ki;
    return w;
}

SpanFlags classify(const Word& w) {
    SpanFlags f;
    if (w.empty()) {
        f.in_a1 = f.in_a0 = true;
        return f;
    }
    if (w.family() == Alphabet::Mlv) {
        f.in_a1 = w.back() != kLetterX;
        // A0: starts with x, or with y_b (b != 0), and ends with some y_a.
        f.in_a0 = f.in_a1 && (w.front() == kLetterX || w.front() != 0);
    } else {
        f.in_a1 = w.back() != 0;
        f.in_a0 = f.in_a1 && w.front() == 0;
    }
    return f;
}

Word word_from_indices(const IndexVector& iv, Alphabet family, int level) {
    if (iv.k.size() != iv.a.size())
        throw DomainError("index vector has mismatched exponent/twist lengths");
    std::vector<int> letters;
    for (std::size_t i = 0; i < iv.k.size(); ++i) {
        if (iv.k[i] < 1) throw DomainError("exponents must be positive");
        int xcode = family == Alphabet::Mlv ? kLetterX : 0;
        for (int j = 1; j < iv.k[i]; ++j) letters.push_back(xcode);
        letters.push_back(family == Alphabet::Mlv ? reduce_mod(iv.a[i], level)
                                                  : reduce_r(iv.a[i], level));
    }
    return Word(family, level, std::move(letters));
}

IndexVector indices_from_word(const Word& w) {
    if (!classify(w).in_a1)
        throw DomainError("word ends with the x-type letter; not in A1/U1: " + to_string(w));
    const int xcode = w.family() == Alphabet::Mlv ? kLetterX : 0;
    IndexVector iv;
    int run = 0;
    for (int c : w.letters()) {
        if (c == xcode) {
            ++run;
        } else {
            iv.k.push_back(run + 1);
            iv.a.push_back(w.family() == Alphabet::Mlv ? c : c); // y_a / x_a twist
            run = 0;
        }
    }
    return iv;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    if (classify(w).in_a1) {
        IndexVector iv = indices_from_word(w);
        for (std::size_t i = 0; i < iv.depth(); ++i)
            os << (w.family() == Alphabet::Mlv ? "z(" : "Y(") << iv.k[i] << "," << iv.a[i] << ")";
        return os.str();
    }
    bool first = true;
    for (int c : w.letters()) {
        if (!first) os << " ";
        first = false;
        if (w.family() == Alphabet::Mlv) {
            if (c == kLetterX)
                os << "x";
            else
                os << "y" << c;
        } else {
            os << "x" << c;
        }
    }
    return os.str();
}

} // namespace mlv
