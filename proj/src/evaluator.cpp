#include "mlv/evaluator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace mlv {

namespace {

using C = std::complex<double>;
using LC = std::complex<long double>;

// ---------------------------------------------------------------------------
// Asymptotic series over the basis omega^{tw*m} * m^{-pw} * log(m)^lg.
// Everything below manipulates truncated expansions of the partial sums
// of the nested series in this basis.
// ---------------------------------------------------------------------------

struct TermKey {
    int tw; // omega exponent, in [0, N)
    int pw; // power of 1/m, >= 0
    int lg; // power of log m, >= 0
    auto operator<=>(const TermKey&) const = default;
};

// Coefficient map for a fixed twist (keys are (pw, lg) only, tw = 0 slot).
using LogKey = std::pair<int, int>;
using LogSeries = std::map<LogKey, C>;
using Series = std::map<TermKey, C>;

constexpr double kTiny = 1e-300;

struct Engine {
    int N;
    int pmax;
    long anchor;
    double ln_anchor;
    std::vector<C> omega; // omega^t, t in [0, N)
    double dropped = 0.0; // magnitude of discarded terms, evaluated at anchor

    Engine(int N_, int pmax_, long anchor_) : N(N_), pmax(pmax_), anchor(anchor_) {
        ln_anchor = std::log((double)anchor);
        omega.resize(N);
        for (int t = 0; t < N; ++t)
            omega[t] = std::polar(1.0, 2.0 * M_PI * t / N);
    }

    void drop(const C& c, int pw, int lg) {
        double mag = std::abs(c) * std::pow(ln_anchor, lg) *
                     std::pow((double)anchor, -(double)pw);
        dropped += mag;
    }

    void add(LogSeries& s, int pw, int lg, const C& c) {
        if (std::abs(c) < kTiny) return;
        if (pw > pmax) { drop(c, pw, lg); return; }
        s[{pw, lg}] += c;
    }

    void add(Series& s, int tw, int pw, int lg, const C& c) {
        if (std::abs(c) < kTiny) return;
        if (pw > pmax) { drop(c, pw, lg); return; }
        s[{reduce_mod(tw, N), pw, lg}] += c;
    }

    // Truncated expansion of (m + delta)^{-p} in powers of 1/m, delta = +-1:
    // m^{-p} * sum_s binom(-p, s) delta^s m^{-s}.
    LogSeries pow_shift(int p, int delta) const {
        LogSeries out;
        double coef = 1.0;
        for (int s = 0; p + s <= pmax; ++s) {
            if (s > 0) coef *= -(double)(p + s - 1) / s * delta;
            out[{p + s, 0}] = coef;
        }
        return out;
    }

    // log(m + delta) - log(m) = sum_{s>=1} -(-delta)^s / (s m^s).
    LogSeries log_shift(int delta) const {
        LogSeries out;
        double sgn = 1.0;
        for (int s = 1; s <= pmax; ++s) {
            out[{s, 0}] = sgn * (double)delta / s; // delta^s = delta * sgn for |delta|=1
            sgn *= delta;
        }
        return out;
    }

    LogSeries mul(const LogSeries& a, const LogSeries& b) {
        LogSeries out;
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b)
                add(out, ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    // f(m + delta) expanded at m, for a single-twist coefficient series.
    LogSeries shift(const LogSeries& f, int delta) {
        // Cache powers of L = log(m+delta) - log(m).
        std::vector<LogSeries> lpow{LogSeries{{{0, 0}, C(1.0)}}};
        LogSeries out;
        for (const auto& [k, c] : f) {
            auto [p, q] = k;
            LogSeries term = pow_shift(p, delta);
            // (log m + L)^q = sum_j C(q, j) log^{q-j} m * L^j
            LogSeries logpart;
            double binom = 1.0;
            for (int j = 0; j <= q; ++j) {
                if (j > 0) binom *= (double)(q - j + 1) / j;
                while ((int)lpow.size() <= j)
                    lpow.push_back(mul(lpow.back(), log_shift(delta)));
                for (const auto& [kl, cl] : lpow[j])
                    add(logpart, kl.first, kl.second + (q - j), binom * cl);
            }
            for (const auto& [kt, ct] : mul(term, logpart))
                add(out, kt.first, kt.second, c * ct);
        }
        return out;
    }

    LogSeries derivative(const LogSeries& f) {
        LogSeries out;
        for (const auto& [k, c] : f) {
            auto [p, q] = k;
            add(out, p + 1, q, -(double)p * c);
            if (q > 0) add(out, p + 1, q - 1, (double)q * c);
        }
        return out;
    }

    // Antiderivative of m^{-p} log^q m for p >= 1.
    void integrate_term(LogSeries& out, int p, int q, const C& c) {
        if (p == 1) {
            add(out, 0, q + 1, c / (double)(q + 1));
            return;
        }
        // By parts: int m^{-p} log^q = m^{1-p} log^q / (1-p) + q/(p-1) int m^{-p} log^{q-1}.
        add(out, p - 1, q, c / (double)(1 - p));
        if (q > 0) integrate_term(out, p, q - 1, c * (double)q / (double)(p - 1));
    }

    // Antidifference Phi with sum_{i=a+1}^{b} f(i) ~ Phi(b) - Phi(a):
    // Phi = int f + f/2 + sum_r B_{2r}/(2r)! f^{(2r-1)}.
    LogSeries em_antidifference(const LogSeries& f) {
        static const double kB2rOverFact[] = {
            // B_{2r} / (2r)! for r = 1..7
            1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
            1.0 / 47900160, -691.0 / 1307674368000.0, 1.0 / 74724249600.0};
        LogSeries out;
        for (const auto& [k, c] : f) {
            if (k.first < 1)
                throw Error("asymptotic engine: non-decaying untwisted summand");
            integrate_term(out, k.first, k.second, c);
        }
        for (const auto& [k, c] : f) add(out, k.first, k.second, 0.5 * c);
        LogSeries d = derivative(f);
        for (double b2r : kB2rOverFact) {
            if (d.empty()) break;
            for (const auto& [k, c] : d) add(out, k.first, k.second, b2r * c);
            d = derivative(derivative(d));
        }
        return out;
    }

    // Expansion of the tail sum_{i>m} z^i f(i), z = omega^b != 1, as
    // z^{m+1} f(m+1)/(1-z) + z/(1-z) * (tail of the forward difference).
    Series abel_tail(int b, const LogSeries& f) {
        const C z = omega[reduce_mod(b, N)];
        const C zf = z / (1.0 - z);
        Series out;
        LogSeries cur = f;
        C coef = 1.0 / (1.0 - z);
        for (int iter = 0; !cur.empty() && iter <= 4 * pmax + 8; ++iter) {
            LogSeries shifted = shift(cur, +1);
            for (const auto& [k, c] : shifted)
                add(out, b, k.first, k.second, coef * z * c); // z^{m+1} = z * z^m
            LogSeries delta = shifted;
            for (const auto& [k, c] : cur) add(delta, k.first, k.second, -c);
            cur = std::move(delta);
            coef *= zf;
        }
        for (const auto& [k, c] : cur) drop(c * std::abs(coef), k.first, k.second);
        return out;
    }

    C eval_at(const Series& s, long m) const {
        const double lnm = std::log((double)m);
        C out = 0.0;
        for (const auto& [k, c] : s) {
            int t = (int)(((long)k.tw * (m % N)) % N);
            out += c * omega[t] * std::pow(lnm, k.lg) *
                   std::pow((double)m, -(double)k.pw);
        }
        return out;
    }

    // One summation level: given the expansion A of the inner partial sum
    // T_{j+1}(m) and the numeric value T_j(anchor), produce the expansion
    // of T_j(m) for summand omega^{a m} m^{-k} T_{j+1}(m-1).
    Series level(const Series& A, int k, int a, const C& t_anchor) {
        // Group A(m-1) by twist, then attach the local factor.
        std::map<int, LogSeries> by_twist;
        for (const auto& [key, c] : A) {
            // shift handled per twist group below; collect raw first
            by_twist[key.tw][{key.pw, key.lg}] += c;
        }
        std::map<int, LogSeries> summand;
        for (auto& [b, g] : by_twist) {
            LogSeries shifted = shift(g, -1);
            int bt = reduce_mod(b + a, N);
            C phase = omega[reduce_mod(-b, N)]; // omega^{b(m-1)} = omega^{-b} omega^{bm}
            LogSeries& dst = summand[bt];
            for (const auto& [kk, c] : shifted)
                add(dst, kk.first + k, kk.second, phase * c);
        }
        Series nonconst;
        for (auto& [b, f] : summand) {
            if (f.empty()) continue;
            if (b == 0) {
                LogSeries phi = em_antidifference(f);
                for (const auto& [kk, c] : phi)
                    add(nonconst, 0, kk.first, kk.second, c);
            } else {
                Series tail = abel_tail(b, f);
                // Partial sum = const - tail(m).
                for (const auto& [kk, c] : tail)
                    add(nonconst, kk.tw, kk.pw, kk.lg, -c);
            }
        }
        C e = t_anchor - eval_at(nonconst, anchor);
        Series out = nonconst;
        add(out, 0, 0, 0, e);
        return out;
    }
};

// Numeric partial sums T_j(m) = sum_{m >= m_j > ... > m_n >= 1} of the
// truncated nested series, recorded at the two anchor points.
struct NumericPass {
    std::vector<LC> at_half, at_full; // index j-1 -> T_j(anchor)
};

NumericPass numeric_pass(const IndexVector& iv, int N, long m_half, long m_full) {
    const std::size_t n = iv.k.size();
    std::vector<LC> wtab(N);
    for (int t = 0; t < N; ++t)
        wtab[t] = std::polar((long double)1.0, (long double)(2.0L * M_PI * t / N));
    NumericPass out;
    out.at_half.resize(n);
    out.at_full.resize(n);
    std::vector<LC> prev(m_full + 1, LC(1.0L)); // empty inner product
    std::vector<LC> curr(m_full + 1);
    for (std::size_t j = n; j-- > 0;) {
        const int k = iv.k[j];
        const int a = reduce_mod(iv.a[j], N);
        curr[0] = 0.0L;
        LC acc = 0.0L, comp = 0.0L; // Kahan
        for (long m = 1; m <= m_full; ++m) {
            long double p = 1.0L;
            for (int i = 0; i < k; ++i) p *= (long double)m;
            LC term = wtab[(std::size_t)((a * (m % N)) % N)] / p * prev[m - 1];
            LC y = term - comp;
            LC t = acc + y;
            comp = (t - acc) - y;
            acc = t;
            curr[m] = acc;
        }
        out.at_half[j] = curr[m_half];
        out.at_full[j] = curr[m_full];
        std::swap(prev, curr);
    }
    return out;
}

C run_engine(const IndexVector& iv, int N, int pmax, long anchor,
             const std::vector<LC>& t_anchor, double& dropped) {
    Engine eng(N, pmax, anchor);
    Series A{{TermKey{0, 0, 0}, C(1.0)}};
    for (std::size_t j = iv.k.size(); j-- > 0;) {
        C ta((double)t_anchor[j].real(), (double)t_anchor[j].imag());
        A = eng.level(A, iv.k[j], reduce_mod(iv.a[j], N), ta);
    }
    dropped = eng.dropped;
    auto it = A.find(TermKey{0, 0, 0});
    return it == A.end() ? C(0.0) : it->second;
}

void check_convergent(const IndexVector& iv, int N) {
    if (iv.k.empty()) return;
    if (iv.k[0] >= 2) return;
    if (reduce_mod(iv.a[0], N) != 0) return;
    throw DivergenceError("series diverges: leading exponent 1 with trivial twist");
}

ComplexApprox eval_L_star_uncached(const IndexVector& iv, int N,
                                   const EvalConfig& cfg) {
    check_convergent(iv, N);
    if (iv.k.empty()) return {C(1.0), 0.0};
    const long m_full = std::max<long>(cfg.trunc, 200);
    const long m_half = m_full / 2;
    NumericPass num = numeric_pass(iv, N, m_half, m_full);
    double drop_full = 0.0, drop_half = 0.0;
    C v_full = run_engine(iv, N, cfg.max_power, m_full, num.at_full, drop_full);
    C v_half = run_engine(iv, N, cfg.max_power, m_half, num.at_half, drop_half);
    double err = 2.0 * std::abs(v_full - v_half) + drop_full +
                 1e-15 * (1.0 + std::abs(v_full));
    return {v_full, err};
}

// ---------------------------------------------------------------------------
// Memoization
// ---------------------------------------------------------------------------

struct EvalCache {
    std::shared_mutex mtx;
    std::map<std::tuple<Word, long, int>, ComplexApprox> entries;
};

EvalCache& cache() {
    static EvalCache c;
    return c;
}

} // namespace

ComplexApprox eval_L_star(const Word& w, const EvalConfig& cfg) {
    if (w.family() != Alphabet::Mlv)
        throw AlphabetMismatch("eval_L_star: expected a twisted-harmonic word");
    if (w.empty()) return {C(1.0), 0.0};
    if (!classify(w).in_a1)
        throw DomainError("eval_L_star: word has a trailing non-generator letter");
    auto key = std::make_tuple(w, cfg.trunc, cfg.max_power);
    {
        std::shared_lock lock(cache().mtx);
        auto it = cache().entries.find(key);
        if (it != cache().entries.end()) return it->second;
    }
    ComplexApprox r =
        eval_L_star_uncached(indices_from_word(w), w.level(), cfg);
    std::unique_lock lock(cache().mtx);
    cache().entries.emplace(key, r);
    return r;
}

ComplexApprox eval_L_star(const IndexVector& iv, int level, const EvalConfig& cfg) {
    return eval_L_star(word_from_indices(iv, Alphabet::Mlv, level), cfg);
}

ComplexApprox eval_L_shuffle(const Word& w, const EvalConfig& cfg) {
    NCPoly p = NCPoly::monomial(w, Rational(1));
    NCPoly rewritten = map_I_inv(p);
    return eval_poly(rewritten, cfg, Product::Stuffle);
}

ComplexApprox eval_poly(const NCPoly& p, const EvalConfig& cfg, Product interp) {
    if (p.family() != Alphabet::Mlv)
        throw AlphabetMismatch("eval_poly: expected a twisted-harmonic polynomial");
    const NCPoly q = (interp == Product::Shuffle) ? map_I_inv(p) : p;
    ComplexApprox out;
    for (const auto& [w, c] : q.terms()) {
        ComplexApprox v = eval_L_star(w, cfg);
        double cd = c.convert_to<double>();
        out.value += cd * v.value;
        out.err += std::abs(cd) * v.err;
    }
    return out;
}

ComplexApprox eval_omega_poly(const OmegaPoly& op, const EvalConfig& cfg) {
    ComplexApprox out;
    for (const auto& [e, p] : op.parts) {
        ComplexApprox v = eval_poly(p, cfg);
        C w = std::polar(1.0, 2.0 * M_PI * e / op.level);
        out.value += w * v.value;
        out.err += v.err;
    }
    return out;
}

ComplexApprox eval_zeta_N_direct(const IndexVector& iv, int level,
                                 const EvalConfig& cfg) {
    const int N = level;
    const std::size_t n = iv.k.size();
    if (n == 0) return {C(1.0), 0.0};
    if (iv.k[0] < 2)
        throw DivergenceError("congruence-filtered series requires leading exponent >= 2");
    const long M = std::max<long>(cfg.zeta_trunc, 1000);
    std::vector<long double> prev(M + 1, 1.0L), curr(M + 1);
    for (std::size_t j = n; j-- > 0;) {
        const int k = iv.k[j];
        const int a = reduce_mod(iv.a[j], N);
        curr[0] = 0.0L;
        long double acc = 0.0L, comp = 0.0L;
        for (long m = 1; m <= M; ++m) {
            if (m % N == a) {
                long double p = 1.0L;
                for (int i = 0; i < k; ++i) p *= (long double)m;
                long double term = (long double)N / p * prev[m - 1];
                long double y = term - comp;
                long double t = acc + y;
                comp = (t - acc) - y;
                acc = t;
            }
            curr[m] = acc;
        }
        std::swap(prev, curr);
    }
    // Coarse tail bound: the inner factors are bounded by their partial sums
    // times a slowly varying log power, so bound the outer tail directly.
    double lnM = std::log((double)M);
    double tail = std::pow((double)N, (double)n) *
                  std::pow(lnM + 1.0, (double)(n - 1)) * 2.0 *
                  std::pow((double)M, (double)(1 - iv.k[0])) /
                  (double)(iv.k[0] - 1);
    return {C((double)prev[M], 0.0), tail + 1e-13 * (1.0 + (double)prev[M])};
}

ComplexApprox eval_zeta_N(const IndexVector& iv, int level, const EvalConfig& cfg) {
    if (!iv.k.empty() && iv.k[0] < 2)
        throw DivergenceError("congruence-filtered series requires leading exponent >= 2");
    Word w = word_from_indices(iv, Alphabet::LevelN, level);
    return eval_omega_poly(expand_to_mlv(w), cfg);
}

ComplexApprox eval_zeta_N(const Word& w, const EvalConfig& cfg) {
    if (w.family() != Alphabet::LevelN)
        throw AlphabetMismatch("eval_zeta_N: expected a level-alphabet word");
    return eval_zeta_N(indices_from_word(w), w.level(), cfg);
}

ComplexApprox eval_zeta3_aux(int a, int b, int k, const EvalConfig& cfg) {
    if (k < 3) throw DomainError("eval_zeta3_aux: requires k >= 3");
    const int N = 3;
    const C w = std::polar(1.0, 2.0 * M_PI / N);
    // First factor expanded as sum of phase * omega^{e1 m1}; the second
    // index carries a bar (omega^{f(m2-1)}) or tilde (omega^{f(m2+1)}).
    struct Piece { int e1; C phase; };
    std::vector<Piece> first;
    bool tilde;
    auto tag = std::pair{a, b};
    if (tag == std::pair{0, 1})      { first = {{2, 1.0}, {1, -w * w}}; tilde = false; }
    else if (tag == std::pair{1, 2}) { first = {{2, w}, {1, -w}};       tilde = false; }
    else if (tag == std::pair{2, 0}) { first = {{2, w * w}, {1, -1.0}}; tilde = false; }
    else if (tag == std::pair{1, 0}) { first = {{1, w * w}, {2, -1.0}}; tilde = true; }
    else if (tag == std::pair{0, 2}) { first = {{1, 1.0}, {2, -w * w}}; tilde = true; }
    else if (tag == std::pair{2, 1}) { first = {{1, w}, {2, -w}};       tilde = true; }
    else throw DomainError("eval_zeta3_aux: unknown tag");
    ComplexApprox out;
    for (const Piece& p : first) {
        for (int f = 0; f < N; ++f) {
            // (1 + omega^{m2 -+ 1} + omega^{2(m2 -+ 1)}) = sum_f omega^{f m2} omega^{-+f}
            C c = (1.0 - w) * p.phase *
                  std::polar(1.0, 2.0 * M_PI * (tilde ? f : -f) / N);
            ComplexApprox v =
                eval_L_star(IndexVector{{1, k - 1}, {p.e1, f}}, N, cfg);
            out.value += c * v.value;
            out.err += std::abs(c) * v.err;
        }
    }
    return out;
}

void clear_eval_cache() {
    std::unique_lock lock(cache().mtx);
    cache().entries.clear();
}

} // namespace mlv
