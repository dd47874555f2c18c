#include "mlv/poly.hpp"

#include <sstream>

namespace mlv {

NCPoly NCPoly::monomial(const Word& w, const Rational& c) {
    NCPoly p(w.family(), w.level());
    p.add_term(w, c);
    return p;
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::check_word(const Word& w) const {
    if (w.family() != family_ || w.level() != level_)
        throw AlphabetMismatch("word over a different alphabet added to polynomial");
}

void NCPoly::check_compatible(const NCPoly& o) const {
    if (o.family_ != family_ || o.level_ != level_)
        throw AlphabetMismatch("polynomials over different alphabets combined");
}

NCPoly& NCPoly::add_term(const Word& w, const Rational& c) {
    check_word(w);
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

bool NCPoly::all_in_a1() const {
    for (const auto& [w, c] : terms_)
        if (!classify(w).in_a1) return false;
    return true;
}

bool NCPoly::all_in_a0() const {
    for (const auto& [w, c] : terms_)
        if (!classify(w).in_a0) return false;
    return true;
}

NCPoly NCPoly::prepend(const Word& prefix) const {
    NCPoly out(family_, level_);
    for (const auto& [w, c] : terms_) out.add_term(prefix.concat(w), c);
    return out;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || w.empty()) {
            os << mag.str();
            if (!w.empty()) os << "*";
        }
        if (!w.empty()) os << to_string(w);
    }
    return os.str();
}

} // namespace mlv
