#include "products_internal.hpp"

#include <unordered_map>
#include <utility>

namespace mlv::detail {

namespace {

using PairKey = std::pair<Word, Word>;

struct PairHash {
    std::size_t operator()(const PairKey& key) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ key.first.level();
        auto mix = [&h](std::size_t v) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (int c : key.first.letters()) mix(static_cast<std::size_t>(c + 2));
        mix(0xffffULL);
        for (int c : key.second.letters()) mix(static_cast<std::size_t>(c + 2));
        return h;
    }
};

// Thread-local memoization: no lock contention, and each worker thread's
// cache is released when the thread exits. Threads may duplicate work, but
// the recursions here are cheap relative to locking on every node.
struct Cache {
    std::unordered_map<PairKey, NCPoly, PairHash> entries;

    const NCPoly* find(const PairKey& key) {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }
    void insert(const PairKey& key, NCPoly value) {
        entries.emplace(key, std::move(value));
    }
    void clear() { entries.clear(); }
};

thread_local Cache g_shuffle_cache;
thread_local Cache g_stuffle_cache;

PairKey make_key(const Word& u, const Word& v) {
    return v < u ? PairKey{v, u} : PairKey{u, v};
}

// Leading generator run (k, a) of an A1/U1 word, plus the remaining suffix.
struct GenSplit {
    int k;
    int a;
    Word rest;
};

GenSplit split_generator(const Word& w) {
    const int xcode = w.family() == Alphabet::Mlv ? kLetterX : 0;
    std::size_t i = 0;
    while (i < w.size() && w.letters()[i] == xcode) ++i;
    if (i == w.size())
        throw DomainError("word not in A1/U1: " + to_string(w));
    return GenSplit{static_cast<int>(i) + 1, w.letters()[i], w.suffix(i + 1)};
}

Word generator(Alphabet family, int level, int k, int a) {
    return word_from_indices(IndexVector{{k}, {a}}, family, level);
}

} // namespace

NCPoly shuffle_words(const Word& u, const Word& v) {
    if (u.family() != v.family() || u.level() != v.level())
        throw AlphabetMismatch("shuffle of words over different alphabets");
    if (u.empty()) return NCPoly::monomial(v);
    if (v.empty()) return NCPoly::monomial(u);

    PairKey key = make_key(u, v);
    if (const NCPoly* hit = g_shuffle_cache.find(key)) return *hit;

    NCPoly result = shuffle_words(u.suffix(1), v).prepend(Word(u.family(), u.level()).append(u.front()));
    result += shuffle_words(u, v.suffix(1)).prepend(Word(v.family(), v.level()).append(v.front()));

    g_shuffle_cache.insert(key, result);
    return result;
}

NCPoly stuffle_words(const Word& u, const Word& v) {
    if (u.family() != v.family() || u.level() != v.level())
        throw AlphabetMismatch("stuffle of words over different alphabets");
    if (u.empty()) return NCPoly::monomial(v);
    if (v.empty()) return NCPoly::monomial(u);

    PairKey key = make_key(u, v);
    if (const NCPoly* hit = g_stuffle_cache.find(key)) return *hit;

    const Alphabet fam = u.family();
    const int level = u.level();
    GenSplit gu = split_generator(u);
    GenSplit gv = split_generator(v);

    NCPoly result = stuffle_words(gu.rest, v).prepend(generator(fam, level, gu.k, gu.a));
    result += stuffle_words(u, gv.rest).prepend(generator(fam, level, gv.k, gv.a));
    if (fam == Alphabet::Mlv) {
        result += stuffle_words(gu.rest, gv.rest)
                      .prepend(generator(fam, level, gu.k + gv.k, reduce_mod(gu.a + gv.a, level)));
    } else if (gu.a == gv.a) {
        NCPoly diag =
            stuffle_words(gu.rest, gv.rest).prepend(generator(fam, level, gu.k + gv.k, gu.a));
        diag *= Rational(level);
        result += diag;
    }

    g_stuffle_cache.insert(key, result);
    return result;
}

void clear_caches() {
    g_shuffle_cache.clear();
    g_stuffle_cache.clear();
}

} // namespace mlv::detail
