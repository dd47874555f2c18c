#include "mlv/mlv_algebra.hpp"

#include <mutex>
#include <shared_mutex>

#include "products_internal.hpp"

namespace mlv {

namespace {

void require_mlv(const NCPoly& p, const char* what) {
    if (p.family() != Alphabet::Mlv)
        throw AlphabetMismatch(std::string(what) + " is defined on the Mlv alphabet");
}

void require_a1(const NCPoly& p, const char* what) {
    require_mlv(p, what);
    if (!p.all_in_a1())
        throw DomainError(std::string(what) + ": argument has a word outside A1");
}

NCPoly bilinear(const NCPoly& p, const NCPoly& q,
                NCPoly (*word_product)(const Word&, const Word&)) {
    if (p.family() != q.family() || p.level() != q.level())
        throw AlphabetMismatch("product of polynomials over different alphabets");
    NCPoly out(p.family(), p.level());
    for (const auto& [wu, cu] : p.terms())
        for (const auto& [wv, cv] : q.terms()) {
            NCPoly piece = word_product(wu, wv);
            piece *= cu * cv;
            out += piece;
        }
    return out;
}

} // namespace

NCPoly stuffle(const NCPoly& p, const NCPoly& q) {
    require_a1(p, "stuffle");
    require_a1(q, "stuffle");
    return bilinear(p, q, detail::stuffle_words);
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
    require_mlv(p, "shuffle");
    require_mlv(q, "shuffle");
    return bilinear(p, q, detail::shuffle_words);
}

NCPoly product(Product which, const NCPoly& p, const NCPoly& q) {
    return which == Product::Stuffle ? stuffle(p, q) : shuffle(p, q);
}

namespace {

NCPoly twist_rewrite(const NCPoly& p, bool prefix_sum) {
    NCPoly out(p.family(), p.level());
    for (const auto& [w, c] : p.terms()) {
        if (!classify(w).in_a1)
            throw DomainError("map I: word outside A1: " + to_string(w));
        IndexVector iv = indices_from_word(w);
        IndexVector rewritten = iv;
        if (prefix_sum) {
            long long acc = 0;
            for (std::size_t i = 0; i < iv.depth(); ++i) {
                acc += iv.a[i];
                rewritten.a[i] = reduce_mod(acc, p.level());
            }
        } else {
            for (std::size_t i = 0; i < iv.depth(); ++i) {
                long long prev = i == 0 ? 0 : iv.a[i - 1];
                rewritten.a[i] = reduce_mod(iv.a[i] - prev, p.level());
            }
        }
        out.add_term(word_from_indices(rewritten, p.family(), p.level()), c);
    }
    return out;
}

} // namespace

NCPoly map_I(const NCPoly& p) {
    require_mlv(p, "map I");
    return twist_rewrite(p, /*prefix_sum=*/true);
}

NCPoly map_I_inv(const NCPoly& p) {
    require_mlv(p, "map I^-1");
    return twist_rewrite(p, /*prefix_sum=*/false);
}

// ---------------------------------------------------------------------------
// Regularization: decompose an A1 word as a polynomial in y0 over A0.
//
// For w = y0^m u (u not starting with y0, m >= 1) the product rule gives
//   y0 o (y0^{m-1} u) = m * w + T,
// where every word of T is shorter than w or has fewer than m leading y0's.
// Solving for w and recursing yields the unique decomposition.
// ---------------------------------------------------------------------------

namespace {

// coefficients-by-degree representation used during the recursion
using YPoly = std::vector<NCPoly>;

void ypoly_accumulate(YPoly& acc, const YPoly& inc, const Rational& scale, int degree_shift,
                      Alphabet fam, int level) {
    while (acc.size() < inc.size() + degree_shift) acc.emplace_back(NCPoly::zero(fam, level));
    for (std::size_t i = 0; i < inc.size(); ++i) {
        NCPoly t = inc[i];
        t *= scale;
        acc[i + degree_shift] += t;
    }
}

struct DecompCache {
    std::map<std::pair<Word, int>, YPoly> entries;
    std::shared_mutex mutex;
};
DecompCache g_decomp_cache;

YPoly decompose_word(const Word& w, Product which) {
    if (w.empty() || w.front() != 0) return YPoly{NCPoly::monomial(w)};

    std::pair<Word, int> key{w, static_cast<int>(which)};
    {
        std::shared_lock lock(g_decomp_cache.mutex);
        auto it = g_decomp_cache.entries.find(key);
        if (it != g_decomp_cache.entries.end()) return it->second;
    }

    const Alphabet fam = w.family();
    const int level = w.level();
    int m = 0;
    while (m < static_cast<int>(w.size()) && w.letters()[m] == 0) ++m;

    Word v = w.suffix(1);
    Word y0 = Word(fam, level).append(0);
    NCPoly prod = which == Product::Stuffle ? detail::stuffle_words(y0, v)
                                            : detail::shuffle_words(y0, v);
    NCPoly remainder = prod - NCPoly::monomial(w, Rational(m));

    YPoly result;
    // (1/m) * [ Y * D(v) - D(remainder) ]
    ypoly_accumulate(result, decompose_word(v, which), Rational(1, m), 1, fam, level);
    for (const auto& [rw, rc] : remainder.terms())
        ypoly_accumulate(result, decompose_word(rw, which), -rc / m, 0, fam, level);
    while (!result.empty() && result.back().is_zero()) result.pop_back();
    if (result.empty()) result.emplace_back(NCPoly::zero(fam, level));

    std::unique_lock lock(g_decomp_cache.mutex);
    g_decomp_cache.entries.emplace(key, result);
    return result;
}

} // namespace

RegularizedPoly regularize(const NCPoly& p, Product which) {
    require_a1(p, "regularize");
    YPoly acc{NCPoly::zero(p.family(), p.level())};
    for (const auto& [w, c] : p.terms())
        ypoly_accumulate(acc, decompose_word(w, which), c, 0, p.family(), p.level());
    while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
    return RegularizedPoly{which, std::move(acc)};
}

NCPoly RegularizedPoly::reconstruct() const {
    if (coeffs.empty()) throw DomainError("empty regularized polynomial");
    const Alphabet fam = coeffs.front().family();
    const int level = coeffs.front().level();
    NCPoly y0 = NCPoly::monomial(Word(fam, level).append(0));
    NCPoly y0_power = NCPoly::unit(fam, level);
    NCPoly out = NCPoly::zero(fam, level);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) y0_power = ::mlv::product(product, y0_power, y0);
        out += ::mlv::product(product, coeffs[i], y0_power);
    }
    return out;
}

NCPoly fds_element(const NCPoly& w1, const NCPoly& w2) {
    require_mlv(w1, "fds_element");
    if (!w1.all_in_a0() || !w2.all_in_a0())
        throw DomainError("fds_element: arguments must lie in A0");
    return shuffle(map_I(w1), map_I(w2)) - map_I(stuffle(w1, w2));
}

NCPoly fds_element_star(const NCPoly& w1, const NCPoly& w2) {
    require_mlv(w1, "fds_element_star");
    if (!w1.all_in_a0() || !w2.all_in_a0())
        throw DomainError("fds_element_star: arguments must lie in A0");
    return stuffle(map_I_inv(w1), map_I_inv(w2)) - map_I_inv(shuffle(w1, w2));
}

NCPoly rds_element(const NCPoly& w0, const NCPoly& w1, Product side) {
    if (!w0.all_in_a0()) throw DomainError("rds_element: w0 must lie in A0");
    require_a1(w1, "rds_element");
    if (side == Product::Shuffle) {
        NCPoly diff = map_I(stuffle(w0, w1)) - shuffle(map_I(w0), map_I(w1));
        return regularize(diff, Product::Shuffle).constant_term();
    }
    NCPoly diff = map_I_inv(shuffle(w0, w1)) - stuffle(map_I_inv(w0), map_I_inv(w1));
    return regularize(diff, Product::Stuffle).constant_term();
}

void clear_product_caches() {
    detail::clear_caches();
    std::unique_lock lock(g_decomp_cache.mutex);
    g_decomp_cache.entries.clear();
}

} // namespace mlv
