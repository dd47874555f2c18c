#include "mlv/leveln_algebra.hpp"

#include "products_internal.hpp"
#include "mlv/word.hpp"

namespace mlv {

namespace {

void require_family(const NCPoly& p, const char* who) {
    if (p.family() != Alphabet::LevelN)
        throw AlphabetMismatch(std::string(who) + ": expected a level-N polynomial");
}

NCPoly bilinear(const NCPoly& p, const NCPoly& q,
                NCPoly (*word_op)(const Word&, const Word&)) {
    if (p.family() != q.family() || p.level() != q.level())
        throw AlphabetMismatch("product: operands live over different alphabets");
    NCPoly out(p.family(), p.level());
    for (const auto& [wp, cp] : p.terms())
        for (const auto& [wq, cq] : q.terms()) {
            NCPoly piece = word_op(wp, wq);
            piece *= cp * cq;
            out += piece;
        }
    return out;
}

/// Rewrites each generator word through a per-position twist map.
/// new_a[i] is computed from the full twist vector.
template <typename F>
NCPoly twist_each(const NCPoly& p, F&& new_twist) {
    NCPoly out(p.family(), p.level());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            out.add_term(w, c);
            continue;
        }
        IndexVector iv = indices_from_word(w);
        std::vector<int> a2(iv.a.size());
        for (std::size_t i = 0; i < iv.a.size(); ++i)
            a2[i] = new_twist(iv.a, i);
        IndexVector iv2{iv.k, a2};
        out.add_term(word_from_indices(iv2, w.family(), w.level()), c);
    }
    return out;
}

} // namespace

NCPoly stuffle_N(const NCPoly& p, const NCPoly& q) {
    require_family(p, "stuffle_N");
    require_family(q, "stuffle_N");
    return bilinear(p, q, &detail::stuffle_words);
}

NCPoly shuffle_N(const NCPoly& p, const NCPoly& q) {
    require_family(p, "shuffle_N");
    require_family(q, "shuffle_N");
    return bilinear(p, q, &detail::shuffle_words);
}

NCPoly map_J(const NCPoly& p) {
    require_family(p, "map_J");
    const int N = p.level();
    // a_i -> r(a_i - a_{i+1}), with a_{n+1} = 0; values land in [1, N].
    return twist_each(p, [N](const std::vector<int>& a, std::size_t i) {
        int next = (i + 1 < a.size()) ? a[i + 1] : 0;
        return reduce_r(a[i] - next, N);
    });
}

NCPoly map_J_inv(const NCPoly& p) {
    require_family(p, "map_J_inv");
    const int N = p.level();
    // a_i -> r(a_i + a_{i+1} + ... + a_n).
    return twist_each(p, [N](const std::vector<int>& a, std::size_t i) {
        int s = 0;
        for (std::size_t j = i; j < a.size(); ++j) s += a[j];
        return reduce_r(s, N);
    });
}

NCPoly fds_N_element(const NCPoly& w1, const NCPoly& w2) {
    if (!w1.all_in_a0() || !w2.all_in_a0())
        throw DomainError("fds_N_element: operands must be admissible (U0)");
    NCPoly lhs = stuffle_N(map_J_inv(w1), map_J_inv(w2));
    NCPoly rhs = map_J_inv(shuffle_N(w1, w2));
    return lhs - rhs;
}

OmegaPoly& OmegaPoly::add(int omega_exp, const NCPoly& p) {
    int e = reduce_mod(omega_exp, level);
    auto it = parts.find(e);
    if (it == parts.end()) {
        if (!p.terms().empty()) parts.emplace(e, p);
    } else {
        it->second += p;
        if (it->second.terms().empty()) parts.erase(it);
    }
    return *this;
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
    if (level != o.level)
        throw AlphabetMismatch("OmegaPoly: mixing different levels");
    for (const auto& [e, p] : o.parts) add(e, p);
    return *this;
}

OmegaPoly expand_to_mlv(const Word& w) {
    if (w.family() != Alphabet::LevelN)
        throw AlphabetMismatch("expand_to_mlv: expected a level-N word");
    const int N = w.level();
    OmegaPoly out{N, {}};
    if (w.empty()) {
        out.add(0, NCPoly::unit(Alphabet::Mlv, N));
        return out;
    }
    IndexVector iv = indices_from_word(w);
    const std::size_t n = iv.k.size();
    // Enumerate e in [0, N)^n; coefficient is omega^{-sum e_i a_i}.
    std::vector<int> e(n, 0);
    for (;;) {
        int exp = 0;
        for (std::size_t i = 0; i < n; ++i) exp -= e[i] * iv.a[i];
        IndexVector iv2{iv.k, e};
        NCPoly mono = NCPoly::monomial(
            word_from_indices(iv2, Alphabet::Mlv, N), Rational(1));
        out.add(exp, mono);
        // Odometer increment.
        std::size_t pos = 0;
        while (pos < n && ++e[pos] == N) e[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

OmegaPoly expand_to_mlv(const NCPoly& p) {
    require_family(p, "expand_to_mlv");
    if (!p.all_in_a0())
        throw DomainError("expand_to_mlv: polynomial must be admissible (U0)");
    OmegaPoly out{p.level(), {}};
    for (const auto& [w, c] : p.terms()) {
        OmegaPoly piece = expand_to_mlv(w);
        for (auto& [e, q] : piece.parts) {
            q *= c;
            out.add(e, q);
        }
    }
    return out;
}

} // namespace mlv
